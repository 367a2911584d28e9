#include <regex>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <kmcoh/matrix_io.hpp>
#include <kmcoh/report.hpp>

#include "support.hpp"

using namespace kmcoh;

namespace
{

std::vector<std::string> numeric_tokens(const std::string &s)
{
    static const std::regex num(R"(-?[0-9]+(/[0-9]+)?)");
    std::vector<std::string> out;
    for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it) {
        out.push_back(it->str());
    }
    return out;
}

errc parse_code(const std::string &text)
{
    try {
        parse_matrix(text);
    } catch (const error &e) {
        return e.code();
    }
    return errc::internal_inconsistency;
}

} // namespace

TEST(MatrixIo, TextFormat)
{
    const auto a = parse_matrix("# comment\n\n3\n 2 -1 0\n-1 2 -1\n# inside\n0 -1 2\n");
    EXPECT_EQ(a, build_named("A", 3));
    EXPECT_EQ(parse_matrix(format_matrix_text(a)), a);
}

TEST(MatrixIo, JsonFormat)
{
    EXPECT_EQ(parse_matrix(R"({"n": 2, "a": [[2, -3], [-3, 2]]})"), validate({{2, -3}, {-3, 2}}));
}

TEST(MatrixIo, Errors)
{
    EXPECT_EQ(parse_code(""), errc::parse_error);
    EXPECT_EQ(parse_code("2\n2 -1\n"), errc::parse_error);
    EXPECT_EQ(parse_code("2\n2 -1\n-1 2 0\n"), errc::parse_error);
    EXPECT_EQ(parse_code("x\n"), errc::parse_error);
    EXPECT_EQ(parse_code(R"({"n": 2, "a": [[2, -1]]})"), errc::parse_error);
    EXPECT_EQ(parse_code(R"({"n": 1, "a": [[2.5]]})"), errc::parse_error);
    EXPECT_EQ(parse_code("2\n2 -1\n-1 3\n"), errc::diagonal_not_two);
    try {
        parse_matrix("2\n2 -1\n-1 abc\n");
        FAIL();
    } catch (const entry_error &e) {
        EXPECT_EQ(e.row(), 1u);
        EXPECT_EQ(e.col(), 1u);
        EXPECT_NE(std::string(e.what()).find("abc"), std::string::npos);
    }
}

TEST(Report, RankTwoIndefinite)
{
    const auto r = analyze(validate({{2, -3}, {-3, 2}}), 5);
    EXPECT_EQ(r["epsilon"], 1);
    EXPECT_EQ(r["flag_poincare"]["num"], nlohmann::ordered_json({"1", "0", "1"}));
    EXPECT_EQ(r["flag_poincare"]["den"], nlohmann::ordered_json({"1", "0", "-1"}));
    const auto &c = r["components"][0];
    EXPECT_EQ(c["type"], "Indefinite");
    EXPECT_EQ(c["i_sequence"][2], "1");
    EXPECT_EQ(c["presentations"]["group"]["exterior"], nlohmann::ordered_json({3}));
    EXPECT_EQ(c["presentations"]["flag"]["relations"][0]["name"], "psi");
    EXPECT_TRUE(c["decomposition"].is_null());
}

TEST(Report, FiniteAndAffine)
{
    const auto a2 = analyze(build_named("A", 2), 4);
    EXPECT_EQ(a2["components"][0]["finite_type"], "A2");
    EXPECT_EQ(a2["components"][0]["decomposition"], "[2][3]");
    EXPECT_EQ(a2["components"][0]["presentations"]["group"]["exterior"], nlohmann::ordered_json({3, 5}));
    const auto aff = analyze(build_named("affine", 1, {0, 0, "A"}), 4);
    EXPECT_EQ(aff["components"][0]["decomposition"], "[2][∞]_1");
    EXPECT_TRUE(aff["components"][0]["presentations"].is_null());
    EXPECT_TRUE(aff["ring"].is_null());
}

TEST(Report, DecomposableTensorsComponents)
{
    const auto r = analyze(validate({{2, 0, 0}, {0, 2, -3}, {0, -3, 2}}), 5);
    ASSERT_EQ(r["components"].size(), 2u);
    EXPECT_EQ(r["components"][0]["type"], "Finite");
    EXPECT_EQ(r["components"][1]["type"], "Indefinite");
    EXPECT_EQ(r["ring"]["group"]["exterior"], nlohmann::ordered_json({3, 3}));
    EXPECT_EQ(r["ring"]["flag"]["ambient_degree2"], 3);
}

TEST(Report, JsonRoundTripIsByteIdentical)
{
    for (const auto &e : kmtest::battery()) {
        const std::string once = analyze(e.matrix(), 6, e.name).dump(2);
        const std::string twice = nlohmann::ordered_json::parse(once).dump(2);
        EXPECT_EQ(once, twice) << e.name;
    }
}

TEST(Report, TextCarriesSameNumbers)
{
    for (const auto &e : kmtest::battery()) {
        const auto r = analyze(e.matrix(), 6, e.name);
        EXPECT_EQ(numeric_tokens(r.dump(2)), numeric_tokens(render_text(r))) << e.name;
    }
}

TEST(Report, LargerOrderExtendsSmaller)
{
    for (const auto &e : kmtest::battery()) {
        const auto small = analyze(e.matrix(), 5);
        const auto large = analyze(e.matrix(), 9);
        for (std::size_t c = 0; c < small["components"].size(); ++c) {
            for (const char *key : {"e_sequence", "i_sequence"}) {
                const auto &s = small["components"][c][key];
                const auto &l = large["components"][c][key];
                if (s.is_null()) {
                    EXPECT_TRUE(l.is_null());
                    continue;
                }
                for (std::size_t k = 0; k < s.size(); ++k) {
                    EXPECT_EQ(s[k], l[k]) << e.name << " " << key << " " << k;
                }
            }
        }
        const auto &s = small["flag_series"]["coeffs"];
        for (std::size_t k = 0; k < s.size(); ++k) {
            EXPECT_EQ(s[k], large["flag_series"]["coeffs"][k]);
        }
    }
}

TEST(Report, Deterministic)
{
    const auto a = kmtest::battery()[16].matrix();
    EXPECT_EQ(analyze(a, 7).dump(), analyze(a, 7).dump());
}
