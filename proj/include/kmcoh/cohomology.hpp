#ifndef KMCOH_COHOMOLOGY_HPP
#define KMCOH_COHOMOLOGY_HPP

// Rational cohomology of a Kac-Moody group G(A) and its flag manifold F(A).
//
// H*(G(A)) is free graded-commutative on i_k generators of degree k. Its
// signed Poincare series and the flag series are
//
//     P_G(q) = prod_k (1 - q^{2k-1})^{i_{2k-1}} / (1 - q^{2k})^{i_{2k}}
//     P_A(q) = prod_k (1 - q^{2k})^{i_{2k-1}} / ((1 - q^2)^n prod_k (1 - q^{2k})^{i_{2k}})
//            = 1 / ((1 - q^2)^{e_1} prod_{k>=2} (1 - q^{2k})^{e_k}),   e_k = i_{2k} - i_{2k-1} (+ n for k = 1).
//
// The e_k are read off P_A as a characteristic sequence. For indecomposable
// indefinite A the odd counts are known (i_3 = epsilon(A), all others 0), which
// pins down every i_k.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <kmcoh/cartan.hpp>
#include <kmcoh/charseq.hpp>
#include <kmcoh/integer.hpp>
#include <kmcoh/polynomial.hpp>
#include <kmcoh/rational_function.hpp>
#include <kmcoh/series.hpp>
#include <kmcoh/weylgrowth.hpp>

namespace kmcoh
{

using RatMatrix = std::vector<std::vector<Rat>>;

// Generator multiplicities i_1..i_cutoff of H*(G(A)).
struct GeneratorDegrees {
    std::size_t n = 0;
    int epsilon = 0;
    std::size_t cutoff = 0;
    std::vector<Int> counts;  // counts[k] = i_k, counts[0] unused

    GeneratorDegrees() = default;
    GeneratorDegrees(std::size_t rank, int eps, std::size_t cut) : n(rank), epsilon(eps), cutoff(cut), counts(cut + 1)
    {
    }

    const Int &operator[](std::size_t k) const { return counts.at(k); }
    Int &operator[](std::size_t k) { return counts.at(k); }

    Int odd_total() const
    {
        Int s = 0;
        for (std::size_t k = 1; k <= cutoff; k += 2) {
            s += counts[k];
        }
        return s;
    }
};

// e_1..e_N with e_k = i_{2k} - i_{2k-1} (e_1 also carries n).
struct ExponentSeq {
    std::size_t n = 0;
    std::vector<Int> e;  // e[k-1] = e_k

    const Int &operator()(std::size_t k) const { return e.at(k - 1); }
    std::size_t size() const noexcept { return e.size(); }
};

namespace detail
{

inline constexpr unsigned max_closed_form_exponent = 4096;

inline unsigned small_exponent(const Int &x)
{
    if (x < 0 || x > max_closed_form_exponent) {
        throw error(errc::rank_cap_exceeded,
                    "exponent " + x.str() + " too large for a closed form; use the truncated expansion");
    }
    return static_cast<unsigned>(x);
}

} // namespace detail

// Flag series from generator counts as a reduced rational function. Large
// multiplicities make the closed form impractical; see flag_series_expansion.
inline RationalFunction flag_series_from_generators(const GeneratorDegrees &g)
{
    Polynomial num(Int(1));
    Polynomial den = Polynomial::one_minus(2).pow(static_cast<unsigned>(g.n));
    for (std::size_t k = 1; k <= g.cutoff; ++k) {
        if (g.counts[k] == 0) {
            continue;
        }
        const std::size_t j = (k + 1) / 2;  // k = 2j-1 or k = 2j
        const Polynomial factor = Polynomial::one_minus(2 * j).pow(detail::small_exponent(g.counts[k]));
        if (k % 2 == 1) {
            num *= factor;
        } else {
            den *= factor;
        }
    }
    return RationalFunction(std::move(num), std::move(den));
}

// The same series, expanded through q^cutoff.
inline Series flag_series_expansion(const GeneratorDegrees &g)
{
    Series s = Series::one(g.cutoff);
    multiply_one_minus_power(s, 2, -Int(g.n));
    for (std::size_t k = 1; k <= g.cutoff; ++k) {
        if (g.counts[k] == 0) {
            continue;
        }
        const std::size_t j = (k + 1) / 2;
        multiply_one_minus_power(s, 2 * j, k % 2 == 1 ? g.counts[k] : Int(-g.counts[k]));
    }
    return s;
}

// Signed group series prod_k (1 - q^k)^{(-1)^{k+1} i_k}, expanded through q^cutoff.
// Odd generators enter as (1 - q^k); the ordinary Hilbert series is this
// series evaluated at -q.
inline Series group_series_expansion(const GeneratorDegrees &g)
{
    Series s = Series::one(g.cutoff);
    for (std::size_t k = 1; k <= g.cutoff; ++k) {
        if (g.counts[k] != 0) {
            multiply_one_minus_power(s, k, k % 2 == 1 ? g.counts[k] : Int(-g.counts[k]));
        }
    }
    return s;
}

// Inverse of group_series_expansion: the characteristic sequence of the signed
// group series determines every i_k.
inline GeneratorDegrees generators_from_group_series(const Series &pg, std::size_t n, int epsilon)
{
    const CharSeq j = char_sequence(pg, pg.order());
    GeneratorDegrees g(n, epsilon, pg.order());
    for (std::size_t k = 1; k <= pg.order(); ++k) {
        g[k] = k % 2 == 1 ? j(k) : Int(-j(k));
    }
    return g;
}

// 1 / prod_k (1 - q^{2k})^{e_k}
inline RationalFunction flag_series_from_exponents(const ExponentSeq &ex)
{
    Polynomial num(Int(1));
    Polynomial den(Int(1));
    for (std::size_t k = 1; k <= ex.size(); ++k) {
        const Int &v = ex(k);
        if (v > 0) {
            den *= Polynomial::one_minus(2 * k).pow(detail::small_exponent(v));
        } else if (v < 0) {
            num *= Polynomial::one_minus(2 * k).pow(detail::small_exponent(Int(-v)));
        }
    }
    return RationalFunction(std::move(num), std::move(den));
}

// Writes P_A(q) = G(q^2) and returns the characteristic sequence of 1/G,
// after checking that rebuilding it reproduces 1/G.
inline ExponentSeq exponent_sequence(const RationalFunction &flag, std::size_t n, std::size_t order)
{
    const Series expanded = flag.expand(2 * order);
    const Series g = expanded.even_part();
    if (!g.in_z1()) {
        throw error(errc::not_in_z1, "flag series constant term is " + g[0].str());
    }
    const Series inv = g.reciprocal();
    const CharSeq cs = char_sequence(inv, order);
    if (rebuild(cs, order) != inv) {
        throw error(errc::internal_inconsistency, "exponent sequence does not rebuild 1/P_A");
    }
    return ExponentSeq{n, cs.values()};
}

inline int epsilon(const CartanMatrix &a) { return is_symmetrizable(a) ? 1 : 0; }

// Matrix of the simple reflection s_j on the span of the fundamental weights:
// row i holds the coordinates of s_j(omega_i) = omega_i - delta_ij alpha_j,
// with alpha_j = sum_k a[k][j] omega_k.
inline RatMatrix reflection_matrix(const CartanMatrix &a, std::size_t j)
{
    const std::size_t n = a.rank();
    RatMatrix s(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
        s[i][i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        s[j][k] -= a(k, j);
    }
    return s;
}

inline RatMatrix transpose_times(const RatMatrix &x, const RatMatrix &q, const RatMatrix &y)
{
    // x^T q y
    const std::size_t n = q.size();
    RatMatrix qy(n, std::vector<Rat>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t t = 0; t < n; ++t) {
                qy[r][c] += q[r][t] * y[t][c];
            }
        }
    }
    RatMatrix out(n, std::vector<Rat>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t t = 0; t < n; ++t) {
                out[r][c] += x[t][r] * qy[t][c];
            }
        }
    }
    return out;
}

// Symmetric matrices Q with s_j^T Q s_j = Q for every simple reflection: the
// degree-2 Weyl invariants in the fundamental weights.
struct QuadraticInvariantSpace {
    std::vector<RatMatrix> basis;

    std::size_t dim() const noexcept { return basis.size(); }
};

namespace detail
{

// Basis of the null space of a rational matrix, one vector per free column.
inline std::vector<std::vector<Rat>> null_space(std::vector<std::vector<Rat>> rows, std::size_t cols)
{
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) {
            ++p;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        const Rat inv = 1 / rows[r][c];
        for (auto &v : rows[r]) {
            v *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) {
                continue;
            }
            const Rat f = rows[i][c];
            for (std::size_t t = c; t < cols; ++t) {
                rows[i][t] -= f * rows[r][t];
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) {
            continue;
        }
        std::vector<Rat> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            v[pivot_col[i]] = -rows[i][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Scales to coprime integers with the first nonzero entry positive.
inline void normalize_integral(std::vector<Rat> &v)
{
    Int lcm_den = 1;
    for (const Rat &x : v) {
        const Int den = denominator(x);
        lcm_den = lcm_den / int_gcd(lcm_den, den) * den;
    }
    Int g = 0;
    for (const Rat &x : v) {
        g = int_gcd(g, numerator(Rat(x * lcm_den)));
    }
    if (g == 0) {
        return;
    }
    const auto first = std::find_if(v.begin(), v.end(), [](const Rat &x) { return x != 0; });
    if (*first < 0) {
        g = -g;
    }
    for (Rat &x : v) {
        x = Rat(x * lcm_den / g);
    }
}

} // namespace detail

inline QuadraticInvariantSpace invariant_quadratics(const CartanMatrix &a)
{
    const std::size_t n = a.rank();
    // Unknowns: upper-triangular entries of Q in row-major order.
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    std::vector<std::vector<std::size_t>> var_of(n, std::vector<std::size_t>(n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            var_of[r][c] = var_of[c][r] = vars.size();
            vars.emplace_back(r, c);
        }
    }
    std::vector<std::vector<Rat>> equations;
    for (std::size_t j = 0; j < n; ++j) {
        const RatMatrix s = reflection_matrix(a, j);
        for (const auto &[r, c] : vars) {
            // (s^T Q s - Q)_{rc} as a linear form in the unknowns
            std::vector<Rat> row(vars.size());
            for (std::size_t p = 0; p < n; ++p) {
                if (s[p][r] == 0) {
                    continue;
                }
                for (std::size_t t = 0; t < n; ++t) {
                    if (s[t][c] != 0) {
                        row[var_of[p][t]] += s[p][r] * s[t][c];
                    }
                }
            }
            row[var_of[r][c]] -= 1;
            if (std::any_of(row.begin(), row.end(), [](const Rat &x) { return x != 0; })) {
                equations.push_back(std::move(row));
            }
        }
    }
    QuadraticInvariantSpace space;
    for (auto &v : detail::null_space(std::move(equations), vars.size())) {
        RatMatrix q(n, std::vector<Rat>(n));
        for (std::size_t t = 0; t < vars.size(); ++t) {
            q[vars[t].first][vars[t].second] = v[t];
            q[vars[t].second][vars[t].first] = v[t];
        }
        // Normalize in row-major order over the full symmetric matrix.
        std::vector<Rat> flat;
        for (const auto &row : q) {
            flat.insert(flat.end(), row.begin(), row.end());
        }
        detail::normalize_integral(flat);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                q[r][c] = flat[r * n + c];
            }
        }
        space.basis.push_back(std::move(q));
    }
    return space;
}

// Generator counts i_k, k <= 2 * order, for an indecomposable indefinite matrix.
inline GeneratorDegrees generator_degrees(const CartanMatrix &a, std::size_t order)
{
    if (!is_indecomposable(a)) {
        throw error(errc::not_indecomposable, "generator degrees need an indecomposable matrix");
    }
    const KMType type = classify(a);
    if (type != KMType::indefinite) {
        throw error(errc::not_indefinite, std::string("matrix is of ") + to_string(type) + " type");
    }
    const std::size_t n = a.rank();
    const int eps = epsilon(a);
    const RationalFunction flag = flag_poincare(a).flag;
    const ExponentSeq ex = exponent_sequence(flag, n, order);
    if (order >= 1 && ex(1) != Int(n)) {
        throw error(errc::internal_inconsistency, "e_1 = " + ex(1).str() + " differs from the rank");
    }

    GeneratorDegrees g(n, eps, 2 * order);
    if (g.cutoff >= 3) {
        g[3] = eps;
    }
    if (order >= 2) {
        g[4] = ex(2) + eps;
    }
    for (std::size_t k = 3; k <= order; ++k) {
        g[2 * k] = ex(k);
    }
    for (std::size_t k = 1; k <= g.cutoff; ++k) {
        if (g[k] < 0) {
            throw error(errc::negative_rank, "i_" + std::to_string(k) + " = " + g[k].str());
        }
    }
    if (g.odd_total() > Int(n)) {
        throw error(errc::internal_inconsistency, "more odd generators than the rank");
    }
    if (flag_series_expansion(g) != flag.expand(g.cutoff)) {
        throw error(errc::internal_inconsistency, "generator counts do not reproduce P_A");
    }
    return g;
}

// Exterior generators of degree 2d - 1, one per basic invariant of degree d.
inline GeneratorDegrees finite_generator_degrees(const std::vector<FiniteTypeLabel> &labels, std::size_t order)
{
    std::size_t n = 0;
    for (const auto &l : labels) {
        n += l.rank;
    }
    GeneratorDegrees g(n, 1, 2 * order);
    for (unsigned d : degrees(labels)) {
        if (2 * d - 1 <= g.cutoff) {
            g[2 * d - 1] += 1;
        }
    }
    return g;
}

struct Relation {
    std::string name;
    unsigned degree = 0;
    std::optional<RatMatrix> matrix;  // quadratic relations only
};

// Generators and relations of H*(G) (space 'G') or H*(F) (space 'F'), with
// polynomial generators listed through degree truncated_at.
struct RingPresentation {
    char space = 'G';
    std::size_t n = 0;
    int epsilon = 0;
    std::vector<unsigned> exterior;
    std::vector<std::pair<unsigned, Int>> polynomial;  // (degree, multiplicity)
    std::size_t ambient_degree2 = 0;
    std::vector<Relation> relations;
    std::size_t truncated_at = 0;
};

namespace detail
{

inline std::vector<std::pair<unsigned, Int>> even_generators(const GeneratorDegrees &g)
{
    std::vector<std::pair<unsigned, Int>> out;
    for (std::size_t k = 4; k <= g.cutoff; k += 2) {
        if (g[k] != 0) {
            out.emplace_back(static_cast<unsigned>(k), g[k]);
        }
    }
    return out;
}

inline std::vector<unsigned> odd_generators(const GeneratorDegrees &g)
{
    std::vector<unsigned> out;
    for (std::size_t k = 1; k <= g.cutoff; k += 2) {
        for (Int c = 0; c < g[k]; ++c) {
            out.push_back(static_cast<unsigned>(k));
        }
    }
    return out;
}

inline Relation psi_relation(const CartanMatrix &a)
{
    auto space = invariant_quadratics(a);
    if (space.dim() != 1) {
        throw error(errc::internal_inconsistency,
                    "expected a one-dimensional space of quadratic invariants, found " + std::to_string(space.dim()));
    }
    return Relation{"psi", 4, std::move(space.basis.front())};
}

} // namespace detail

inline RingPresentation group_presentation(const GeneratorDegrees &g)
{
    RingPresentation p;
    p.space = 'G';
    p.n = g.n;
    p.epsilon = g.epsilon;
    p.exterior = detail::odd_generators(g);
    p.polynomial = detail::even_generators(g);
    p.truncated_at = g.cutoff;
    return p;
}

inline RingPresentation group_presentation(const CartanMatrix &a, std::size_t order)
{
    return group_presentation(generator_degrees(a, order));
}

inline RingPresentation flag_presentation(const CartanMatrix &a, std::size_t order)
{
    const GeneratorDegrees g = generator_degrees(a, order);
    RingPresentation p;
    p.space = 'F';
    p.n = g.n;
    p.epsilon = g.epsilon;
    p.ambient_degree2 = g.n;
    if (g.epsilon == 1) {
        p.relations.push_back(detail::psi_relation(a));
    }
    p.polynomial = detail::even_generators(g);
    p.truncated_at = g.cutoff;
    return p;
}

// H*(G) = exterior algebra on generators of degree 2d - 1.
inline RingPresentation finite_group_cohomology(const std::vector<FiniteTypeLabel> &labels, std::size_t order)
{
    RingPresentation p;
    p.space = 'G';
    for (const auto &l : labels) {
        p.n += l.rank;
    }
    p.epsilon = 1;
    for (unsigned d : degrees(labels)) {
        p.exterior.push_back(2 * d - 1);
    }
    p.truncated_at = 2 * order;
    return p;
}

// H*(F) = Q[omega_1..omega_n] / (basic invariants), for an indecomposable
// finite-type matrix. The quadratic invariant is written out explicitly.
inline RingPresentation finite_flag_cohomology(const CartanMatrix &a, std::size_t order)
{
    const auto labels = recognize_finite(coxeter_matrix(a), components(a).front());
    if (!is_indecomposable(a) || !labels || classify(a) != KMType::finite) {
        throw error(errc::internal_inconsistency, "finite flag cohomology needs an indecomposable finite matrix");
    }
    RingPresentation p;
    p.space = 'F';
    p.n = a.rank();
    p.epsilon = 1;
    p.ambient_degree2 = a.rank();
    for (unsigned d : degrees(*labels)) {
        if (d == 2) {
            p.relations.push_back(detail::psi_relation(a));
        } else {
            p.relations.push_back(Relation{"f" + std::to_string(d), 2 * d, std::nullopt});
        }
    }
    p.truncated_at = 2 * order;
    return p;
}

// Ordinary Hilbert series of a presentation through q^order: exterior
// generators contribute (1 + q^d), polynomial ones 1/(1 - q^d), and each
// relation (a regular sequence) a factor (1 - q^deg).
inline Series presentation_series(const RingPresentation &p, std::size_t order)
{
    Series s = Series::one(order);
    for (unsigned d : p.exterior) {
        if (d > order) {
            continue;
        }
        Series f = Series::one(order);
        f[d] = 1;
        s = s * f;
    }
    multiply_one_minus_power(s, 2, -Int(p.ambient_degree2));
    for (const auto &r : p.relations) {
        multiply_one_minus_power(s, r.degree, 1);
    }
    for (const auto &[d, c] : p.polynomial) {
        multiply_one_minus_power(s, d, Int(-c));
    }
    return s;
}

// Tensor product of presentations over disjoint index sets; relation matrices
// are embedded block-diagonally in the combined omega basis.
inline RingPresentation tensor_product(const std::vector<RingPresentation> &parts)
{
    RingPresentation out;
    if (parts.empty()) {
        return out;
    }
    out.space = parts.front().space;
    out.epsilon = 1;
    out.truncated_at = parts.front().truncated_at;
    std::map<unsigned, Int> poly;
    std::size_t total_ambient = 0;
    for (const auto &p : parts) {
        total_ambient += p.ambient_degree2;
    }
    std::size_t offset = 0;
    for (const auto &p : parts) {
        out.n += p.n;
        out.epsilon = std::min(out.epsilon, p.epsilon);
        out.truncated_at = std::min(out.truncated_at, p.truncated_at);
        out.exterior.insert(out.exterior.end(), p.exterior.begin(), p.exterior.end());
        for (const auto &[d, c] : p.polynomial) {
            poly[d] += c;
        }
        for (const auto &r : p.relations) {
            Relation e{r.name, r.degree, std::nullopt};
            if (r.matrix) {
                RatMatrix m(total_ambient, std::vector<Rat>(total_ambient));
                for (std::size_t i = 0; i < r.matrix->size(); ++i) {
                    for (std::size_t j = 0; j < r.matrix->size(); ++j) {
                        m[offset + i][offset + j] = (*r.matrix)[i][j];
                    }
                }
                e.matrix = std::move(m);
            }
            out.relations.push_back(std::move(e));
        }
        offset += p.ambient_degree2;
    }
    out.ambient_degree2 = total_ambient;
    std::sort(out.exterior.begin(), out.exterior.end());
    out.polynomial.assign(poly.begin(), poly.end());
    return out;
}

// Ranks of the rational homotopy groups, keyed by degree; zero ranks omitted.
struct HomotopyRanks {
    std::map<unsigned, Int> group;
    std::map<unsigned, Int> flag;
};

// G(A) is rationally a product of Eilenberg-MacLane spaces, so rank pi_k = i_k.
// For F(A), the fibration G -> F -> BB with BB rationally (CP^inf)^n gives
// rank pi_2 = n and pi_k(F) = pi_k(G) for k >= 3.
inline HomotopyRanks homotopy_ranks(const GeneratorDegrees &g)
{
    HomotopyRanks h;
    for (std::size_t k = 1; k <= g.cutoff; ++k) {
        if (g[k] != 0) {
            h.group[static_cast<unsigned>(k)] = g[k];
        }
        if (k >= 3 && g[k] != 0) {
            h.flag[static_cast<unsigned>(k)] = g[k];
        }
    }
    if (g.n != 0) {
        h.flag[2] = Int(g.n) + (g.cutoff >= 2 ? g[2] : Int(0));
    }
    return h;
}

inline HomotopyRanks homotopy_ranks(const CartanMatrix &a, std::size_t order)
{
    return homotopy_ranks(generator_degrees(a, order));
}

} // namespace kmcoh

#endif
