#ifndef KMCOH_CARTAN_HPP
#define KMCOH_CARTAN_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <kmcoh/integer.hpp>

namespace kmcoh
{

// Generalized Cartan matrix. Entry (i, j) is <alpha_j, alpha_i^vee>, so row i
// records how the simple coroot alpha_i^vee pairs with every simple root.
class CartanMatrix
{
public:
    using Entry = std::int64_t;

    std::size_t rank() const noexcept { return n_; }
    Entry operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    std::vector<std::vector<Entry>> rows() const
    {
        std::vector<std::vector<Entry>> out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            out[i].assign(a_.begin() + static_cast<long>(i * n_), a_.begin() + static_cast<long>((i + 1) * n_));
        }
        return out;
    }

    friend bool operator==(const CartanMatrix &x, const CartanMatrix &y) { return x.n_ == y.n_ && x.a_ == y.a_; }

    // Restriction to the given (sorted or not) index list, in that order.
    CartanMatrix submatrix(const std::vector<std::size_t> &idx) const
    {
        CartanMatrix m;
        m.n_ = idx.size();
        m.a_.resize(m.n_ * m.n_);
        for (std::size_t r = 0; r < idx.size(); ++r) {
            for (std::size_t c = 0; c < idx.size(); ++c) {
                m.a_[r * m.n_ + c] = (*this)(idx[r], idx[c]);
            }
        }
        return m;
    }

    friend CartanMatrix validate(const std::vector<std::vector<Entry>> &raw);

private:
    std::size_t n_ = 0;
    std::vector<Entry> a_;
};

// Checks the three defining conditions, reporting the first offending entry
// in row-major order.
inline CartanMatrix validate(const std::vector<std::vector<CartanMatrix::Entry>> &raw)
{
    const std::size_t n = raw.size();
    if (n == 0) {
        throw error(errc::not_square, "matrix is empty");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (raw[i].size() != n) {
            throw error(errc::not_square,
                        "row " + std::to_string(i) + " has " + std::to_string(raw[i].size()) + " entries, expected " +
                            std::to_string(n));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto v = raw[i][j];
            if (i == j) {
                if (v != 2) {
                    throw entry_error(errc::diagonal_not_two, i, j, "diagonal entry is " + std::to_string(v));
                }
            } else if (v > 0) {
                throw entry_error(errc::positive_off_diagonal, i, j, "off-diagonal entry is " + std::to_string(v));
            } else if ((v == 0) != (raw[j][i] == 0)) {
                throw entry_error(errc::zero_pairing_violated, i, j,
                                  "a[i][j] = " + std::to_string(v) + " but a[j][i] = " + std::to_string(raw[j][i]));
            }
        }
    }
    CartanMatrix m;
    m.n_ = n;
    m.a_.reserve(n * n);
    for (const auto &row : raw) {
        m.a_.insert(m.a_.end(), row.begin(), row.end());
    }
    return m;
}

// Connected components of the Dynkin graph (edge i-j iff a[i][j] != 0), each
// sorted, listed by smallest member.
inline std::vector<std::vector<std::size_t>> components(const CartanMatrix &a)
{
    const std::size_t n = a.rank();
    std::vector<int> seen(n, 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s] != 0) {
            continue;
        }
        std::vector<std::size_t> comp;
        std::queue<std::size_t> todo;
        todo.push(s);
        seen[s] = 1;
        while (!todo.empty()) {
            const std::size_t i = todo.front();
            todo.pop();
            comp.push_back(i);
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i && a(i, j) != 0 && seen[j] == 0) {
                    seen[j] = 1;
                    todo.push(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_indecomposable(const CartanMatrix &a) { return components(a).size() == 1; }

// Coxeter matrix of the Weyl group. Entries are braid orders; infinity is
// stored as coxeter_infinity.
inline constexpr int coxeter_infinity = 0;

struct CoxeterMatrix {
    std::size_t n = 0;
    std::vector<int> m;

    int operator()(std::size_t i, std::size_t j) const { return m[i * n + j]; }
    static bool is_infinite(int v) { return v == coxeter_infinity; }
    friend bool operator==(const CoxeterMatrix &, const CoxeterMatrix &) = default;
};

inline int braid_order(CartanMatrix::Entry product)
{
    switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return coxeter_infinity;
    }
}

inline CoxeterMatrix coxeter_matrix(const CartanMatrix &a)
{
    CoxeterMatrix cm;
    cm.n = a.rank();
    cm.m.assign(cm.n * cm.n, 1);
    for (std::size_t i = 0; i < cm.n; ++i) {
        for (std::size_t j = 0; j < cm.n; ++j) {
            if (i != j) {
                cm.m[i * cm.n + j] = braid_order(a(i, j) * a(j, i));
            }
        }
    }
    return cm;
}

// A = D B with D = diag(d) positive and B symmetric.
struct Symmetrization {
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> b;
};

// A closed walk i_1 -> i_2 -> ... -> i_k -> i_1 whose two directed products
// a_{i1 i2} a_{i2 i3} ... a_{ik i1} and a_{i2 i1} a_{i3 i2} ... a_{i1 ik} differ.
struct CycleWitness {
    std::vector<std::size_t> cycle;
    Int forward;
    Int backward;
};

struct SymmetrizeResult {
    std::optional<Symmetrization> symmetrization;
    std::optional<CycleWitness> witness;

    explicit operator bool() const noexcept { return symmetrization.has_value(); }
};

// Finds D along a spanning tree of each component, then checks every pair.
// Each component's d is scaled to the smallest positive integer vector.
inline SymmetrizeResult symmetrize(const CartanMatrix &a)
{
    const std::size_t n = a.rank();
    std::vector<Rat> d(n);
    std::vector<std::size_t> parent(n);
    std::vector<int> seen(n, 0);

    for (const auto &comp : components(a)) {
        const std::size_t root = comp.front();
        d[root] = 1;
        parent[root] = root;
        seen[root] = 1;
        std::queue<std::size_t> todo;
        todo.push(root);
        while (!todo.empty()) {
            const std::size_t i = todo.front();
            todo.pop();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || a(i, j) == 0 || seen[j] != 0) {
                    continue;
                }
                // a[i][j] / d[i] = a[j][i] / d[j]
                d[j] = d[i] * make_rat(a(j, i), a(i, j));
                parent[j] = i;
                seen[j] = 1;
                todo.push(j);
            }
        }
        // Rescale to a primitive positive integer vector.
        Int lcm_den = 1;
        for (std::size_t i : comp) {
            const Int den = denominator(d[i]);
            lcm_den = lcm_den / int_gcd(lcm_den, den) * den;
        }
        Int g = 0;
        for (std::size_t i : comp) {
            g = int_gcd(g, numerator(Rat(d[i] * lcm_den)));
        }
        for (std::size_t i : comp) {
            d[i] = Rat(d[i] * lcm_den / g);
        }
    }

    auto path_to_root = [&](std::size_t v) {
        std::vector<std::size_t> path{v};
        while (parent[v] != v) {
            v = parent[v];
            path.push_back(v);
        }
        return path;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a(i, j) == 0) {
                continue;
            }
            if (Rat(a(i, j)) / d[i] == Rat(a(j, i)) / d[j]) {
                continue;
            }
            // Tree path i -> ... -> lca -> ... -> j, closed by the edge j -> i.
            std::vector<std::size_t> pi = path_to_root(i);
            std::vector<std::size_t> pj = path_to_root(j);
            while (pi.size() > 1 && pj.size() > 1 && pi[pi.size() - 2] == pj[pj.size() - 2]) {
                pi.pop_back();
                pj.pop_back();
            }
            std::vector<std::size_t> cycle(pi.begin(), pi.end());
            for (std::size_t t = pj.size() - 1; t-- > 0;) {
                cycle.push_back(pj[t]);
            }
            CycleWitness w;
            w.cycle = cycle;
            w.forward = 1;
            w.backward = 1;
            for (std::size_t t = 0; t < cycle.size(); ++t) {
                const std::size_t u = cycle[t];
                const std::size_t v = cycle[(t + 1) % cycle.size()];
                w.forward *= a(u, v);
                w.backward *= a(v, u);
            }
            return SymmetrizeResult{std::nullopt, std::move(w)};
        }
    }

    Symmetrization s;
    s.d = d;
    s.b.assign(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            s.b[i][j] = Rat(a(i, j)) / d[i];
        }
    }
    return SymmetrizeResult{std::move(s), std::nullopt};
}

inline bool is_symmetrizable(const CartanMatrix &a) { return static_cast<bool>(symmetrize(a)); }

// Fraction-free (Bareiss) determinant.
inline Int determinant(std::vector<std::vector<Int>> m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline Int principal_minor(const CartanMatrix &a, const std::vector<std::size_t> &idx)
{
    std::vector<std::vector<Int>> m(idx.size(), std::vector<Int>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r) {
        for (std::size_t c = 0; c < idx.size(); ++c) {
            m[r][c] = a(idx[r], idx[c]);
        }
    }
    return determinant(std::move(m));
}

enum class KMType { finite, affine, indefinite };

inline const char *to_string(KMType t)
{
    switch (t) {
    case KMType::finite: return "Finite";
    case KMType::affine: return "Affine";
    case KMType::indefinite: return "Indefinite";
    }
    return "?";
}

inline constexpr std::size_t default_classify_rank_cap = 12;

// Finite: every principal minor positive. Affine: determinant zero and every
// proper principal minor positive. Indefinite otherwise.
inline KMType classify(const CartanMatrix &a, const std::vector<std::size_t> &component,
                       std::size_t rank_cap = default_classify_rank_cap)
{
    const std::size_t k = component.size();
    if (k > rank_cap) {
        throw error(errc::rank_cap_exceeded,
                    "component rank " + std::to_string(k) + " exceeds cap " + std::to_string(rank_cap));
    }
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t t = 0; t < k; ++t) {
            if ((mask >> t) & 1U) {
                idx.push_back(component[t]);
            }
        }
        if (principal_minor(a, idx) <= 0) {
            return KMType::indefinite;
        }
    }
    const Int det = principal_minor(a, component);
    if (det > 0) {
        return KMType::finite;
    }
    return det == 0 ? KMType::affine : KMType::indefinite;
}

inline KMType classify(const CartanMatrix &a)
{
    const auto comps = components(a);
    if (comps.size() != 1) {
        throw error(errc::not_indecomposable, "matrix has " + std::to_string(comps.size()) + " components");
    }
    return classify(a, comps.front());
}

// Extra parameters for build_named: off-diagonal magnitudes for "rank2" and
// "complete", and the finite family for "affine".
struct NamedParams {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::string base;
};

namespace detail
{

using RawMatrix = std::vector<std::vector<CartanMatrix::Entry>>;

inline RawMatrix identity2(std::size_t n)
{
    RawMatrix m(n, std::vector<CartanMatrix::Entry>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 2;
    }
    return m;
}

inline void link(RawMatrix &m, std::size_t i, std::size_t j, CartanMatrix::Entry aij = -1, CartanMatrix::Entry aji = -1)
{
    m[i][j] = aij;
    m[j][i] = aji;
}

inline void check_rank(bool ok, std::string_view family, std::size_t rank)
{
    if (!ok) {
        throw error(errc::rank_out_of_range,
                    "family " + std::string(family) + " has no member of rank " + std::to_string(rank));
    }
}

inline RawMatrix finite_raw(std::string_view family, std::size_t r)
{
    RawMatrix m = identity2(r);
    if (family == "A") {
        check_rank(r >= 1, family, r);
        for (std::size_t i = 0; i + 1 < r; ++i) {
            link(m, i, i + 1);
        }
    } else if (family == "B" || family == "C") {
        check_rank(r >= 2, family, r);
        for (std::size_t i = 0; i + 2 < r; ++i) {
            link(m, i, i + 1);
        }
        // B: last simple root short; C: last simple root long.
        if (family == "B") {
            link(m, r - 2, r - 1, -1, -2);
        } else {
            link(m, r - 2, r - 1, -2, -1);
        }
    } else if (family == "D") {
        check_rank(r >= 4, family, r);
        for (std::size_t i = 0; i + 2 < r; ++i) {
            link(m, i, i + 1);
        }
        link(m, r - 3, r - 1);
    } else if (family == "E") {
        check_rank(r >= 6 && r <= 8, family, r);
        link(m, 0, 2);
        link(m, 1, 3);
        for (std::size_t i = 2; i + 1 < r; ++i) {
            link(m, i, i + 1);
        }
    } else if (family == "F") {
        check_rank(r == 4, family, r);
        link(m, 0, 1);
        link(m, 1, 2, -1, -2);
        link(m, 2, 3);
    } else if (family == "G") {
        check_rank(r == 2, family, r);
        link(m, 0, 1, -3, -1);
    } else {
        throw error(errc::unknown_family, "unknown family '" + std::string(family) + "'");
    }
    return m;
}

} // namespace detail

// Positive roots of a finite-type matrix in simple-root coordinates, generated
// height by height with root strings.
inline std::vector<std::vector<std::int64_t>> positive_roots(const CartanMatrix &a)
{
    const std::size_t n = a.rank();
    std::set<std::vector<std::int64_t>> known;
    std::vector<std::vector<std::int64_t>> all;
    std::vector<std::vector<std::int64_t>> layer;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> r(n, 0);
        r[i] = 1;
        known.insert(r);
        layer.push_back(r);
    }
    while (!layer.empty()) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto &beta : layer) {
            all.push_back(beta);
            for (std::size_t i = 0; i < n; ++i) {
                std::int64_t p = 0;
                std::vector<std::int64_t> down = beta;
                while (true) {
                    down[i] -= 1;
                    if (known.count(down) == 0) {
                        break;
                    }
                    ++p;
                }
                std::int64_t pairing = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    pairing += beta[j] * a(i, j);
                }
                // Length of the string above beta.
                const std::int64_t q = p - pairing;
                std::vector<std::int64_t> up = beta;
                up[i] += 1;
                const bool is_simple_i = (std::count(beta.begin(), beta.end(), 0) == static_cast<long>(n - 1)) &&
                                         beta[i] == 1;
                if (q > 0 && !is_simple_i && known.insert(up).second) {
                    next.push_back(up);
                }
            }
        }
        layer = std::move(next);
        if (all.size() > 100000) {
            throw error(errc::internal_inconsistency, "root enumeration did not terminate; input is not finite type");
        }
    }
    return all;
}

// Untwisted affinization: appends alpha_0 = delta - theta as the last node.
inline CartanMatrix affine_extension(const CartanMatrix &fin)
{
    const std::size_t n = fin.rank();
    const auto roots = positive_roots(fin);
    auto height = [](const std::vector<std::int64_t> &r) {
        std::int64_t h = 0;
        for (auto c : r) {
            h += c;
        }
        return h;
    };
    const auto theta = *std::max_element(roots.begin(), roots.end(),
                                         [&](const auto &x, const auto &y) { return height(x) < height(y); });
    const auto sym = symmetrize(fin);
    if (!sym) {
        throw error(errc::internal_inconsistency, "finite-type matrix is not symmetrizable");
    }
    const auto &b = sym.symmetrization->b;
    // (alpha_j, theta) and (theta, theta) in the invariant form (alpha_i, alpha_j) = b_ij.
    std::vector<Rat> with_theta(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            with_theta[j] += b[j][k] * theta[k];
        }
    }
    Rat theta_sq = 0;
    for (std::size_t j = 0; j < n; ++j) {
        theta_sq += with_theta[j] * theta[j];
    }

    detail::RawMatrix m = fin.rows();
    for (auto &row : m) {
        row.push_back(0);
    }
    m.emplace_back(n + 1, 0);
    m[n][n] = 2;
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t pairing = 0;
        for (std::size_t j = 0; j < n; ++j) {
            pairing += theta[j] * fin(i, j);
        }
        m[i][n] = -pairing;
        const Rat v = -2 * with_theta[i] / theta_sq;
        if (denominator(v) != 1) {
            throw error(errc::internal_inconsistency, "non-integral affine entry");
        }
        m[n][i] = static_cast<std::int64_t>(numerator(v));
    }
    return validate(m);
}

// Standard matrices by name: A..G (finite), "rank2" with params a, b giving
// [[2,-a],[-b,2]], "complete" of the given rank with every off-diagonal entry -a,
// and "affine" as the untwisted affinization of params.base at the given rank.
inline CartanMatrix build_named(std::string_view family, std::size_t rank, const NamedParams &params = {})
{
    if (family == "rank2") {
        if (params.a < 0 || params.b < 0) {
            throw error(errc::rank_out_of_range, "rank2 parameters must be nonnegative magnitudes");
        }
        return validate({{2, -params.a}, {-params.b, 2}});
    }
    if (family == "complete") {
        detail::check_rank(rank >= 1, family, rank);
        if (params.a < 0) {
            throw error(errc::rank_out_of_range, "complete parameter a must be nonnegative");
        }
        detail::RawMatrix m(rank, std::vector<CartanMatrix::Entry>(rank, -params.a));
        for (std::size_t i = 0; i < rank; ++i) {
            m[i][i] = 2;
        }
        return validate(m);
    }
    if (family == "affine") {
        return affine_extension(validate(detail::finite_raw(params.base, rank)));
    }
    return validate(detail::finite_raw(family, rank));
}

} // namespace kmcoh

#endif
