#ifndef KMCOH_MATRIX_IO_HPP
#define KMCOH_MATRIX_IO_HPP

// Reading matrices from text.
//
//   # comment
//   2
//   2 -3
//   -3 2
//
// or JSON: {"n": 2, "a": [[2, -3], [-3, 2]]}

#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <kmcoh/cartan.hpp>
#include <kmcoh/integer.hpp>

namespace kmcoh
{

using detail::RawMatrix;

namespace detail
{

inline std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(std::string_view line)
{
    std::istringstream in{std::string(line)};
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) {
        out.push_back(tok);
    }
    return out;
}

template <class T>
bool parse_integer(const std::string &tok, T &out)
{
    const char *first = tok.data();
    const char *last = first + tok.size();
    if (first != last && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

inline RawMatrix parse_json_matrix(const std::string &text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw error(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("a") || !j["n"].is_number_integer() || !j["a"].is_array()) {
        throw error(errc::parse_error, "JSON matrix needs integer \"n\" and array \"a\"");
    }
    const auto n = j["n"].get<long long>();
    if (n <= 0 || static_cast<std::size_t>(n) != j["a"].size()) {
        throw error(errc::parse_error, "\"n\" = " + std::to_string(n) + " but \"a\" has " +
                                           std::to_string(j["a"].size()) + " rows");
    }
    RawMatrix raw;
    for (std::size_t i = 0; i < j["a"].size(); ++i) {
        const auto &row = j["a"][i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
            throw error(errc::parse_error, "row " + std::to_string(i) + " does not have " + std::to_string(n) +
                                               " entries");
        }
        std::vector<CartanMatrix::Entry> r;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!row[c].is_number_integer()) {
                throw entry_error(errc::parse_error, i, c, "entry " + row[c].dump() + " is not an integer");
            }
            r.push_back(row[c].get<CartanMatrix::Entry>());
        }
        raw.push_back(std::move(r));
    }
    return raw;
}

inline RawMatrix parse_text_matrix(const std::string &text)
{
    std::vector<std::pair<std::size_t, std::string>> lines;  // (1-based line number, content)
    std::istringstream in(text);
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        lines.emplace_back(lineno, std::string(t));
    }
    if (lines.empty()) {
        throw error(errc::parse_error, "no matrix found");
    }
    std::size_t n = 0;
    if (!parse_integer(lines[0].second, n) || n == 0) {
        throw error(errc::parse_error, "line " + std::to_string(lines[0].first) + ": expected a positive size, got '" +
                                           lines[0].second + "'");
    }
    if (lines.size() - 1 != n) {
        throw error(errc::parse_error, "expected " + std::to_string(n) + " rows, found " +
                                           std::to_string(lines.size() - 1));
    }
    RawMatrix raw;
    for (std::size_t i = 0; i < n; ++i) {
        const auto &[no, content] = lines[i + 1];
        const auto toks = split_ws(content);
        if (toks.size() != n) {
            throw error(errc::parse_error, "line " + std::to_string(no) + ": expected " + std::to_string(n) +
                                               " entries, found " + std::to_string(toks.size()));
        }
        std::vector<CartanMatrix::Entry> row;
        for (std::size_t c = 0; c < n; ++c) {
            CartanMatrix::Entry v = 0;
            if (!parse_integer(toks[c], v)) {
                throw entry_error(errc::parse_error, i, c, "'" + toks[c] + "' is not an integer");
            }
            row.push_back(v);
        }
        raw.push_back(std::move(row));
    }
    return raw;
}

} // namespace detail

// Accepts either format; JSON is recognized by a leading '{'.
inline RawMatrix parse_matrix_raw(const std::string &text)
{
    const auto t = detail::trim(text);
    if (!t.empty() && t.front() == '{') {
        return detail::parse_json_matrix(text);
    }
    return detail::parse_text_matrix(text);
}

inline CartanMatrix parse_matrix(const std::string &text) { return validate(parse_matrix_raw(text)); }

inline CartanMatrix read_matrix_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw error(errc::parse_error, "cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

inline std::string format_matrix_text(const CartanMatrix &a)
{
    std::string out = std::to_string(a.rank()) + "\n";
    for (std::size_t i = 0; i < a.rank(); ++i) {
        for (std::size_t j = 0; j < a.rank(); ++j) {
            out += (j ? " " : "") + std::to_string(a(i, j));
        }
        out += "\n";
    }
    return out;
}

} // namespace kmcoh

#endif
