#include <vector>

#include <gtest/gtest.h>

#include <kmcoh/charseq.hpp>
#include <kmcoh/cohomology.hpp>

#include "support.hpp"

using namespace kmcoh;

namespace
{

std::vector<Int> ints(std::initializer_list<long long> v) { return std::vector<Int>(v.begin(), v.end()); }

// Q = c * M for some nonzero rational c
bool proportional(const RatMatrix &q, const RatMatrix &m)
{
    std::optional<Rat> c;
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (m[i][j] == 0) {
                if (q[i][j] != 0) {
                    return false;
                }
                continue;
            }
            const Rat r = q[i][j] / m[i][j];
            if (c && *c != r) {
                return false;
            }
            c = r;
        }
    }
    return c && *c != 0;
}

Series at_minus_q(const Series &s)
{
    Series out = s;
    for (std::size_t k = 1; k <= s.order(); k += 2) {
        out[k] = -s[k];
    }
    return out;
}

} // namespace

TEST(ExponentSequence, RankTwoExample)
{
    const RationalFunction p(Polynomial{1, 0, 1}, Polynomial{1, 0, -1});
    const auto ex = exponent_sequence(p, 2, 5);
    EXPECT_EQ(ex.e, ints({2, -1, 0, 0, 0}));
    EXPECT_EQ(flag_series_from_exponents(ex), p);
}

TEST(ExponentSequence, RejectsOddSupport)
{
    try {
        exponent_sequence(RationalFunction(Polynomial{1, 1}), 1, 3);
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::odd_support);
    }
}

TEST(GeneratorDegrees, RankTwo)
{
    const auto g = generator_degrees(validate({{2, -3}, {-3, 2}}), 10);
    EXPECT_EQ(g.epsilon, 1);
    for (std::size_t k = 1; k <= g.cutoff; ++k) {
        EXPECT_EQ(g[k], k == 3 ? 1 : 0) << k;
    }
}

TEST(GeneratorDegrees, CompleteFamilyIsWitt)
{
    for (std::size_t n = 3; n <= 6; ++n) {
        for (std::int64_t a : {2, 3}) {
            const auto g = generator_degrees(build_named("complete", n, {a, 0, ""}), 12);
            EXPECT_EQ(g[3], 1);
            EXPECT_EQ(g[4], witt_dim(static_cast<unsigned>(n - 1), 2));
            for (unsigned k = 3; k <= 12; ++k) {
                EXPECT_EQ(g[2 * k], witt_dim(static_cast<unsigned>(n - 1), k)) << n << " " << k;
                EXPECT_EQ(g[2 * k - 1], 0);
            }
        }
    }
    const auto g = generator_degrees(kmtest::battery()[13].matrix(), 4);
    EXPECT_EQ(std::vector<Int>({g[3], g[4], g[6], g[8]}), ints({1, 1, 2, 3}));
}

TEST(GeneratorDegrees, NonSymmetrizableHasNoDegreeThreeClass)
{
    const auto g = generator_degrees(kmtest::battery()[15].matrix(), 8);
    EXPECT_EQ(g.epsilon, 0);
    EXPECT_EQ(g[3], 0);
    // same Weyl group as the symmetric complete family, so only i_4 moves
    const auto h = generator_degrees(kmtest::battery()[13].matrix(), 8);
    EXPECT_EQ(g[4] + 1, h[4]);
    for (std::size_t k = 5; k <= 16; ++k) {
        EXPECT_EQ(g[k], h[k]);
    }
}

TEST(GeneratorDegrees, Hypotheses)
{
    auto code = [](const CartanMatrix &a) {
        try {
            generator_degrees(a, 4);
        } catch (const error &e) {
            return e.code();
        }
        return errc::internal_inconsistency;
    };
    EXPECT_EQ(code(kmtest::battery()[1].matrix()), errc::not_indefinite);
    EXPECT_EQ(code(kmtest::battery()[7].matrix()), errc::not_indefinite);
    EXPECT_EQ(code(validate({{2, -3, 0}, {-3, 2, 0}, {0, 0, 2}})), errc::not_indecomposable);
}

TEST(GeneratorDegrees, EveryIndefiniteBatteryMatrix)
{
    for (const auto &e : kmtest::battery_of(KMType::indefinite)) {
        const auto a = e.matrix();
        const auto g = generator_degrees(a, 20);
        EXPECT_EQ(g.epsilon, e.symmetrizable ? 1 : 0) << e.name;
        EXPECT_EQ(g[1], 0);
        EXPECT_EQ(g[2], 0);
        for (std::size_t k = 5; k <= g.cutoff; k += 2) {
            EXPECT_EQ(g[k], 0) << e.name;
        }
        EXPECT_EQ(flag_series_expansion(g), flag_poincare(a).flag.expand(40)) << e.name;
        const auto back = generators_from_group_series(group_series_expansion(g), g.n, g.epsilon);
        EXPECT_EQ(back.counts, g.counts) << e.name;
    }
}

TEST(InvariantQuadratics, ReflectionInvariance)
{
    for (const auto &e : kmtest::battery()) {
        const auto a = e.matrix();
        const auto space = invariant_quadratics(a);
        for (const auto &q : space.basis) {
            for (std::size_t j = 0; j < a.rank(); ++j) {
                const auto s = reflection_matrix(a, j);
                EXPECT_EQ(transpose_times(s, q, s), q) << e.name << " s" << j;
            }
        }
        if (e.type != KMType::affine) {
            EXPECT_EQ(space.dim(), e.symmetrizable ? 1u : 0u) << e.name;
        }
    }
}

TEST(InvariantQuadratics, ProportionalToSymmetrizedMatrix)
{
    for (const auto &e : kmtest::battery()) {
        const auto a = e.matrix();
        if (!e.symmetrizable || determinant([&] {
                std::vector<std::vector<Int>> m;
                for (const auto &r : e.raw) {
                    m.emplace_back(r.begin(), r.end());
                }
                return m;
            }()) == 0) {
            continue;
        }
        const auto d = kmtest::brute_force_symmetrizer(e.raw, 12);
        ASSERT_TRUE(d);
        RatMatrix ad(a.rank(), std::vector<Rat>(a.rank()));
        for (std::size_t i = 0; i < a.rank(); ++i) {
            for (std::size_t j = 0; j < a.rank(); ++j) {
                ad[i][j] = Rat(e.raw[i][j] * (*d)[j]);
            }
        }
        const auto space = invariant_quadratics(a);
        ASSERT_EQ(space.dim(), 1u) << e.name;
        EXPECT_TRUE(proportional(space.basis[0], ad)) << e.name;
    }
}

TEST(InvariantQuadratics, Normalization)
{
    const auto q = invariant_quadratics(validate({{2, -2}, {-3, 2}})).basis.at(0);
    EXPECT_EQ(q, (RatMatrix{{2, -3}, {-3, 3}}));
}

TEST(Presentations, FlagSeriesFromPresentation)
{
    for (const auto &e : kmtest::battery_of(KMType::indefinite)) {
        const auto a = e.matrix();
        const auto f = flag_presentation(a, 20);
        EXPECT_EQ(f.ambient_degree2, a.rank());
        EXPECT_EQ(f.relations.size(), e.symmetrizable ? 1u : 0u);
        EXPECT_EQ(presentation_series(f, 40), flag_poincare(a).flag.expand(40)) << e.name;
    }
    for (const auto &e : kmtest::battery_of(KMType::finite)) {
        const auto a = e.matrix();
        const auto f = finite_flag_cohomology(a, 10);
        EXPECT_EQ(presentation_series(f, 20), flag_poincare(a).flag.expand(20)) << e.name;
        const auto g = finite_group_cohomology(*recognize_finite(coxeter_matrix(a), components(a).front()), 10);
        // total dimension of an exterior algebra on n generators
        const Series hilbert = presentation_series(g, 60);
        EXPECT_EQ(hilbert.coeffs().size(), 61u);
        Int dim = 0;
        for (const auto &c : hilbert.coeffs()) {
            dim += c;
        }
        EXPECT_EQ(dim, int_pow(Int(2), static_cast<unsigned>(a.rank()))) << e.name;
    }
}

TEST(Presentations, GroupSeriesSignConvention)
{
    for (const auto &e : kmtest::battery_of(KMType::indefinite)) {
        const auto g = generator_degrees(e.matrix(), 10);
        const auto p = group_presentation(g);
        EXPECT_EQ(at_minus_q(presentation_series(p, 20)), group_series_expansion(g)) << e.name;
    }
}

TEST(Presentations, FiniteGroupDegrees)
{
    const auto g = finite_group_cohomology({{FiniteFamily::A, 2}}, 10);
    EXPECT_EQ(g.exterior, (std::vector<unsigned>{3, 5}));
    const auto f = finite_group_cohomology({{FiniteFamily::G2, 2}, {FiniteFamily::A, 1}}, 10);
    EXPECT_EQ(f.exterior, (std::vector<unsigned>{3, 3, 11}));
}

TEST(Presentations, TensorProduct)
{
    const auto a1 = validate({{2}});
    const auto a2 = validate({{2, -1}, {-1, 2}});
    const auto t = tensor_product({finite_flag_cohomology(a1, 10), finite_flag_cohomology(a2, 10)});
    EXPECT_EQ(t.ambient_degree2, 3u);
    EXPECT_EQ(t.relations.size(), 3u);
    ASSERT_TRUE(t.relations[1].matrix);
    EXPECT_EQ((*t.relations[1].matrix)[1][2], -1);
    EXPECT_EQ((*t.relations[1].matrix)[0][0], 0);
    const auto block = validate({{2, 0, 0}, {0, 2, -1}, {0, -1, 2}});
    EXPECT_EQ(presentation_series(t, 20), flag_poincare(block).flag.expand(20));
}

TEST(Homotopy, Ranks)
{
    const auto h = homotopy_ranks(validate({{2, -3}, {-3, 2}}), 6);
    EXPECT_EQ(h.group, (std::map<unsigned, Int>{{3, 1}}));
    EXPECT_EQ(h.flag, (std::map<unsigned, Int>{{2, 2}, {3, 1}}));
    const auto c = homotopy_ranks(kmtest::battery()[13].matrix(), 4);
    EXPECT_EQ(c.flag.at(2), 3);
    EXPECT_EQ(c.flag.at(8), 3);
    EXPECT_EQ(c.group.at(6), 2);
}
