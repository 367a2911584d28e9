#ifndef KMCOH_WEYLGROWTH_HPP
#define KMCOH_WEYLGROWTH_HPP

// Growth series of Weyl groups, W(q) = sum_w q^{l(w)}, and flag-manifold
// Poincare series P_A(q) = W(q^2).
//
// The closed form comes from the finite-parabolic identity
//
//     sum_{J subset S, W_J finite} (-1)^{|J|} / W_J(q) = 1 / W(1/q)
//
// valid for every infinite Coxeter group. Two enumerators of group elements
// act as independent oracles: a layered breadth-first search over the regular
// orbit of rho, and a depth-first walk of the canonical descent tree that
// needs no deduplication.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <kmcoh/cartan.hpp>
#include <kmcoh/integer.hpp>
#include <kmcoh/polynomial.hpp>
#include <kmcoh/rational_function.hpp>

namespace kmcoh
{

enum class FiniteFamily { A, B, D, E6, E7, E8, F4, G2 };

// Crystallographic finite Coxeter type. B covers both B_n and C_n, which
// share a Weyl group.
struct FiniteTypeLabel {
    FiniteFamily family = FiniteFamily::A;
    std::size_t rank = 1;

    std::string name() const
    {
        switch (family) {
        case FiniteFamily::A: return "A" + std::to_string(rank);
        case FiniteFamily::B: return "B" + std::to_string(rank);
        case FiniteFamily::D: return "D" + std::to_string(rank);
        case FiniteFamily::E6: return "E6";
        case FiniteFamily::E7: return "E7";
        case FiniteFamily::E8: return "E8";
        case FiniteFamily::F4: return "F4";
        case FiniteFamily::G2: return "G2";
        }
        return "?";
    }
    friend bool operator==(const FiniteTypeLabel &, const FiniteTypeLabel &) = default;
};

// Degrees of the basic invariants.
inline std::vector<unsigned> degrees(const FiniteTypeLabel &label)
{
    const auto r = static_cast<unsigned>(label.rank);
    std::vector<unsigned> d;
    switch (label.family) {
    case FiniteFamily::A:
        for (unsigned k = 2; k <= r + 1; ++k) {
            d.push_back(k);
        }
        break;
    case FiniteFamily::B:
        for (unsigned k = 1; k <= r; ++k) {
            d.push_back(2 * k);
        }
        break;
    case FiniteFamily::D:
        for (unsigned k = 1; k < r; ++k) {
            d.push_back(2 * k);
        }
        d.push_back(r);
        break;
    case FiniteFamily::E6: d = {2, 5, 6, 8, 9, 12}; break;
    case FiniteFamily::E7: d = {2, 6, 8, 10, 12, 14, 18}; break;
    case FiniteFamily::E8: d = {2, 8, 12, 14, 18, 20, 24, 30}; break;
    case FiniteFamily::F4: d = {2, 6, 8, 12}; break;
    case FiniteFamily::G2: d = {2, 6}; break;
    }
    std::sort(d.begin(), d.end());
    return d;
}

inline std::vector<unsigned> degrees(const std::vector<FiniteTypeLabel> &labels)
{
    std::vector<unsigned> all;
    for (const auto &l : labels) {
        const auto d = degrees(l);
        all.insert(all.end(), d.begin(), d.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

namespace detail
{

inline std::optional<FiniteTypeLabel> recognize_connected(const CoxeterMatrix &m, const std::vector<std::size_t> &nodes)
{
    const std::size_t k = nodes.size();
    if (k == 1) {
        return FiniteTypeLabel{FiniteFamily::A, 1};
    }
    std::vector<std::vector<std::size_t>> adj(k);
    std::size_t edges = 0;
    std::size_t fours = 0;
    for (std::size_t s = 0; s < k; ++s) {
        for (std::size_t t = s + 1; t < k; ++t) {
            const int v = m(nodes[s], nodes[t]);
            if (v == 2) {
                continue;
            }
            if (CoxeterMatrix::is_infinite(v)) {
                return std::nullopt;
            }
            if (v == 6 && k > 2) {
                return std::nullopt;
            }
            if (v == 4) {
                ++fours;
            }
            adj[s].push_back(t);
            adj[t].push_back(s);
            ++edges;
        }
    }
    if (edges != k - 1) {
        return std::nullopt;
    }
    if (k == 2) {
        switch (m(nodes[0], nodes[1])) {
        case 3: return FiniteTypeLabel{FiniteFamily::A, 2};
        case 4: return FiniteTypeLabel{FiniteFamily::B, 2};
        case 6: return FiniteTypeLabel{FiniteFamily::G2, 2};
        default: return std::nullopt;
        }
    }
    std::size_t max_degree = 0;
    std::vector<std::size_t> branch;
    for (std::size_t s = 0; s < k; ++s) {
        max_degree = std::max(max_degree, adj[s].size());
        if (adj[s].size() >= 3) {
            branch.push_back(s);
        }
    }
    if (fours > 1) {
        return std::nullopt;
    }
    if (max_degree <= 2) {
        if (fours == 0) {
            return FiniteTypeLabel{FiniteFamily::A, k};
        }
        // Walk the path from one end and locate the 4-edge.
        std::size_t start = 0;
        while (adj[start].size() != 1) {
            ++start;
        }
        std::vector<std::size_t> path{start};
        std::size_t prev = k;
        std::size_t cur = start;
        while (path.size() < k) {
            const std::size_t nxt = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
            prev = cur;
            cur = nxt;
            path.push_back(cur);
        }
        std::size_t pos = 0;
        for (std::size_t t = 0; t + 1 < k; ++t) {
            if (m(nodes[path[t]], nodes[path[t + 1]]) == 4) {
                pos = t;
            }
        }
        if (pos == 0 || pos == k - 2) {
            return FiniteTypeLabel{FiniteFamily::B, k};
        }
        if (k == 4 && pos == 1) {
            return FiniteTypeLabel{FiniteFamily::F4, 4};
        }
        return std::nullopt;
    }
    if (fours != 0 || max_degree > 3 || branch.size() != 1) {
        return std::nullopt;
    }
    const std::size_t center = branch.front();
    std::vector<std::size_t> arms;
    for (std::size_t first : adj[center]) {
        std::size_t len = 1;
        std::size_t prev = center;
        std::size_t cur = first;
        while (adj[cur].size() == 2) {
            const std::size_t nxt = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
        return FiniteTypeLabel{FiniteFamily::D, k};
    }
    if (arms[0] == 1 && arms[1] == 2) {
        switch (arms[2]) {
        case 2: return FiniteTypeLabel{FiniteFamily::E6, 6};
        case 3: return FiniteTypeLabel{FiniteFamily::E7, 7};
        case 4: return FiniteTypeLabel{FiniteFamily::E8, 8};
        default: break;
        }
    }
    return std::nullopt;
}

} // namespace detail

// Splits the Coxeter diagram induced on J into connected pieces and matches
// each against the crystallographic finite types. nullopt means W_J is infinite.
inline std::optional<std::vector<FiniteTypeLabel>> recognize_finite(const CoxeterMatrix &m,
                                                                    const std::vector<std::size_t> &subset)
{
    std::vector<FiniteTypeLabel> labels;
    std::vector<int> seen(subset.size(), 0);
    for (std::size_t s = 0; s < subset.size(); ++s) {
        if (seen[s] != 0) {
            continue;
        }
        std::vector<std::size_t> comp;
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            comp.push_back(subset[u]);
            for (std::size_t t = 0; t < subset.size(); ++t) {
                if (seen[t] == 0 && m(subset[u], subset[t]) != 2) {
                    seen[t] = 1;
                    stack.push_back(t);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        auto label = detail::recognize_connected(m, comp);
        if (!label) {
            return std::nullopt;
        }
        labels.push_back(*label);
    }
    return labels;
}

// prod over labels and degrees d of [d]_q = (1 - q^d) / (1 - q).
inline Polynomial finite_growth_poly(const std::vector<FiniteTypeLabel> &labels)
{
    Polynomial p(Int(1));
    for (unsigned d : degrees(labels)) {
        p *= Polynomial::q_integer(d);
    }
    return p;
}

inline Int weyl_group_order(const std::vector<FiniteTypeLabel> &labels)
{
    Int order = 1;
    for (unsigned d : degrees(labels)) {
        order *= d;
    }
    return order;
}

inline constexpr std::size_t default_subset_rank_cap = 20;

namespace detail
{

inline RationalFunction component_growth(const CoxeterMatrix &m, const std::vector<std::size_t> &comp,
                                         std::size_t rank_cap)
{
    if (auto labels = recognize_finite(m, comp)) {
        return RationalFunction(finite_growth_poly(*labels));
    }
    const std::size_t k = comp.size();
    if (k > rank_cap) {
        throw error(errc::rank_cap_exceeded,
                    "component rank " + std::to_string(k) + " exceeds subset cap " + std::to_string(rank_cap));
    }
    // Signed multiplicity of each finite parabolic, keyed by its degree list.
    std::map<std::vector<unsigned>, Int> terms;
    std::vector<std::size_t> subset;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        subset.clear();
        for (std::size_t t = 0; t < k; ++t) {
            if ((mask >> t) & 1U) {
                subset.push_back(comp[t]);
            }
        }
        auto labels = recognize_finite(m, subset);
        if (!labels) {
            continue;
        }
        terms[degrees(*labels)] += subset.size() % 2 == 0 ? 1 : -1;
    }
    RationalFunction sum;
    for (const auto &[degs, count] : terms) {
        if (count == 0) {
            continue;
        }
        Polynomial growth(Int(1));
        for (unsigned d : degs) {
            growth *= Polynomial::q_integer(d);
        }
        sum = sum + RationalFunction(Polynomial(count), growth);
    }
    return sum.invert_variable().reciprocal();
}

} // namespace detail

// W(q) for any valid matrix; the product of the component growth series.
inline RationalFunction weyl_growth_rational(const CartanMatrix &a, std::size_t rank_cap = default_subset_rank_cap)
{
    const CoxeterMatrix m = coxeter_matrix(a);
    RationalFunction w(Polynomial(Int(1)));
    for (const auto &comp : components(a)) {
        w *= detail::component_growth(m, comp, rank_cap);
    }
    return w;
}

struct GrowthData {
    RationalFunction weyl;  // sum_w q^{l(w)}
    RationalFunction flag;  // sum_w q^{2 l(w)}
};

inline GrowthData flag_poincare(const CartanMatrix &a, std::size_t rank_cap = default_subset_rank_cap)
{
    GrowthData g;
    g.weyl = weyl_growth_rational(a, rank_cap);
    g.flag = g.weyl.substitute_power(2);
    return g;
}

inline constexpr std::size_t default_state_cap = 10'000'000;

namespace detail
{

struct coordinate_overflow {};

inline std::int64_t reflect_coord(std::int64_t xi, std::int64_t xj, std::int64_t aij)
{
    std::int64_t prod = 0;
    std::int64_t out = 0;
    if (__builtin_mul_overflow(xj, aij, &prod) || __builtin_sub_overflow(xi, prod, &out)) {
        throw coordinate_overflow{};
    }
    return out;
}

inline Int reflect_coord(const Int &xi, const Int &xj, std::int64_t aij) { return xi - xj * aij; }

// Layers of the orbit of rho, two at a time. Elements of different lengths
// never share a state, so deduplication only has to look within one layer.
template <typename Coord>
std::vector<Int> bfs_layers(const CartanMatrix &a, std::size_t lmax, std::size_t state_cap)
{
    const std::size_t n = a.rank();
    std::vector<Int> counts{1};
    std::vector<Coord> layer(n, Coord(1));
    std::size_t layer_size = 1;
    std::vector<Coord> cand;
    std::vector<std::uint32_t> order;
    for (std::size_t len = 1; len <= lmax; ++len) {
        cand.clear();
        std::size_t cand_size = 0;
        for (std::size_t s = 0; s < layer_size; ++s) {
            const Coord *x = &layer[s * n];
            for (std::size_t j = 0; j < n; ++j) {
                if (!(x[j] > 0)) {
                    continue;
                }
                if (++cand_size > state_cap) {
                    throw error(errc::memory_budget_exceeded,
                                "layer " + std::to_string(len) + " exceeds the state cap of " +
                                    std::to_string(state_cap));
                }
                for (std::size_t i = 0; i < n; ++i) {
                    cand.push_back(reflect_coord(x[i], x[j], a(i, j)));
                }
            }
        }
        order.resize(cand_size);
        std::iota(order.begin(), order.end(), 0U);
        auto less = [&](std::uint32_t p, std::uint32_t q) {
            return std::lexicographical_compare(cand.begin() + static_cast<long>(p * n),
                                                cand.begin() + static_cast<long>((p + 1) * n),
                                                cand.begin() + static_cast<long>(q * n),
                                                cand.begin() + static_cast<long>((q + 1) * n));
        };
        auto same = [&](std::uint32_t p, std::uint32_t q) {
            return std::equal(cand.begin() + static_cast<long>(p * n), cand.begin() + static_cast<long>((p + 1) * n),
                              cand.begin() + static_cast<long>(q * n));
        };
        std::sort(order.begin(), order.end(), less);
        order.erase(std::unique(order.begin(), order.end(), same), order.end());
        std::vector<Coord> next;
        next.reserve(order.size() * n);
        for (std::uint32_t p : order) {
            next.insert(next.end(), cand.begin() + static_cast<long>(p * n),
                        cand.begin() + static_cast<long>((p + 1) * n));
        }
        layer = std::move(next);
        layer_size = order.size();
        counts.emplace_back(layer_size);
    }
    return counts;
}

// Each element u != e has parent s_j u with j the smallest left descent of u
// (a coordinate x_j < 0). Walking this tree depth-first visits every element
// exactly once with O(lmax) memory.
template <typename Coord>
std::vector<Int> descent_tree_counts(const CartanMatrix &a, std::size_t lmax)
{
    const std::size_t n = a.rank();
    std::vector<std::uint64_t> counts(lmax + 1, 0);
    std::vector<std::vector<Coord>> state(lmax + 1, std::vector<Coord>(n));
    std::vector<std::size_t> next_gen(lmax + 1, 0);
    std::fill(state[0].begin(), state[0].end(), Coord(1));
    counts[0] = 1;
    std::size_t depth = 0;
    while (true) {
        if (depth == lmax || next_gen[depth] == n) {
            if (depth == 0) {
                break;
            }
            --depth;
            continue;
        }
        const std::size_t j = next_gen[depth]++;
        const std::vector<Coord> &x = state[depth];
        if (!(x[j] > 0)) {
            continue;
        }
        bool canonical = true;
        for (std::size_t i = 0; i < j && canonical; ++i) {
            if (x[i] < 0 && reflect_coord(x[i], x[j], a(i, j)) < 0) {
                canonical = false;
            }
        }
        if (!canonical) {
            continue;
        }
        ++counts[depth + 1];
        if (depth + 1 == lmax) {
            continue;
        }
        std::vector<Coord> &y = state[depth + 1];
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = reflect_coord(x[i], x[j], a(i, j));
        }
        ++depth;
        next_gen[depth] = 0;
    }
    return std::vector<Int>(counts.begin(), counts.end());
}

} // namespace detail

// Number of elements of each length 0..lmax, by breadth-first search over the
// orbit of rho. Coordinates start in 64-bit and fall back to big integers on
// overflow. Throws MemoryBudgetExceeded when a layer holds more than
// state_cap candidate states.
inline std::vector<Int> weyl_growth_bfs(const CartanMatrix &a, std::size_t lmax,
                                        std::size_t state_cap = default_state_cap)
{
    try {
        return detail::bfs_layers<std::int64_t>(a, lmax, state_cap);
    } catch (const detail::coordinate_overflow &) {
        return detail::bfs_layers<Int>(a, lmax, state_cap);
    }
}

// Same counts as weyl_growth_bfs, by walking the canonical descent tree.
// Time is linear in the number of elements; memory is O(lmax * rank).
inline std::vector<Int> weyl_growth_descent_tree(const CartanMatrix &a, std::size_t lmax)
{
    try {
        return detail::descent_tree_counts<std::int64_t>(a, lmax);
    } catch (const detail::coordinate_overflow &) {
        return detail::descent_tree_counts<Int>(a, lmax);
    }
}

// prod_k [d_k] [inf]_{d_k - 1} in the q^2 variable, where [d] = (1-q^{2d})/(1-q^2)
// and [inf]_k = 1/(1-q^{2k}): the flag series of the untwisted affinization.
inline RationalFunction affine_flag_poincare(const std::vector<FiniteTypeLabel> &labels)
{
    Polynomial num(Int(1));
    Polynomial den(Int(1));
    for (unsigned d : degrees(labels)) {
        num *= Polynomial::q_integer(d).substitute_power(2);
        den *= Polynomial::one_minus(2 * (d - 1));
    }
    return RationalFunction(std::move(num), std::move(den));
}

inline RationalFunction affine_flag_poincare(const FiniteTypeLabel &label)
{
    return affine_flag_poincare(std::vector<FiniteTypeLabel>{label});
}

// One factor of an order decomposition: [k] or [inf]_k.
struct OrderFactor {
    bool infinite = false;
    unsigned k = 0;

    RationalFunction value() const
    {
        if (infinite) {
            return RationalFunction(Polynomial(Int(1)), Polynomial::one_minus(2 * k));
        }
        return RationalFunction(Polynomial::q_integer(k).substitute_power(2));
    }
    std::string to_string() const
    {
        return infinite ? "[∞]_" + std::to_string(k) : "[" + std::to_string(k) + "]";
    }
    friend bool operator==(const OrderFactor &, const OrderFactor &) = default;
};

inline std::string format_decomposition(const std::vector<OrderFactor> &factors)
{
    std::string s;
    for (const auto &f : factors) {
        s += f.to_string();
    }
    return s;
}

// Factorization of P_A into [d] and [inf]_k factors for finite and untwisted
// affine components. Indefinite components have no canonical decomposition.
inline std::vector<OrderFactor> order_decomposition(const CartanMatrix &a)
{
    const CoxeterMatrix m = coxeter_matrix(a);
    std::vector<OrderFactor> out;
    for (const auto &comp : components(a)) {
        const KMType type = classify(a, comp);
        if (type == KMType::indefinite) {
            throw error(errc::non_canonical_decomposition, "indefinite component has no unique order decomposition");
        }
        if (type == KMType::finite) {
            const auto labels = recognize_finite(m, comp);
            if (!labels) {
                throw error(errc::internal_inconsistency, "finite-type component not recognized");
            }
            for (unsigned d : degrees(*labels)) {
                out.push_back({false, d});
            }
            continue;
        }
        const RationalFunction target = flag_poincare(a.submatrix(comp)).flag;
        bool found = false;
        for (std::size_t drop = 0; drop < comp.size() && !found; ++drop) {
            std::vector<std::size_t> rest;
            for (std::size_t t = 0; t < comp.size(); ++t) {
                if (t != drop) {
                    rest.push_back(comp[t]);
                }
            }
            const auto labels = recognize_finite(m, rest);
            if (!labels || affine_flag_poincare(*labels) != target) {
                continue;
            }
            const auto degs = degrees(*labels);
            for (unsigned d : degs) {
                out.push_back({false, d});
            }
            for (unsigned d : degs) {
                out.push_back({true, d - 1});
            }
            found = true;
        }
        if (!found) {
            throw error(errc::non_canonical_decomposition, "affine component is not of untwisted type");
        }
    }
    return out;
}

} // namespace kmcoh

#endif
