#ifndef KMCOH_TESTS_SUPPORT_HPP
#define KMCOH_TESTS_SUPPORT_HPP

// Shared fixtures for the test binaries: a battery of matrices written out by
// hand, small brute-force oracles that share no code with the library, and
// seeded generators for the property suites.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <kmcoh/cartan.hpp>
#include <kmcoh/integer.hpp>
#include <kmcoh/series.hpp>

namespace kmtest
{

using kmcoh::CartanMatrix;
using kmcoh::Int;
using kmcoh::KMType;
using Raw = std::vector<std::vector<std::int64_t>>;

struct BatteryEntry {
    std::string name;
    Raw raw;
    KMType type;
    bool symmetrizable;

    CartanMatrix matrix() const { return kmcoh::validate(raw); }
};

inline const std::vector<BatteryEntry> &battery()
{
    static const std::vector<BatteryEntry> b = {
        {"A1", {{2}}, KMType::finite, true},
        {"A2", {{2, -1}, {-1, 2}}, KMType::finite, true},
        {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, KMType::finite, true},
        {"B2", {{2, -2}, {-1, 2}}, KMType::finite, true},
        {"B3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}, KMType::finite, true},
        {"G2", {{2, -1}, {-3, 2}}, KMType::finite, true},
        {"D4", {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}, KMType::finite, true},
        {"affine_A1", {{2, -2}, {-2, 2}}, KMType::affine, true},
        {"affine_A2", {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, KMType::affine, true},
        {"affine_G2", {{2, -3, 0}, {-1, 2, -1}, {0, -1, 2}}, KMType::affine, true},
        {"twisted_rank2", {{2, -1}, {-4, 2}}, KMType::affine, true},
        {"rank2_3_3", {{2, -3}, {-3, 2}}, KMType::indefinite, true},
        {"rank2_2_3", {{2, -2}, {-3, 2}}, KMType::indefinite, true},
        {"complete3_a2", {{2, -2, -2}, {-2, 2, -2}, {-2, -2, 2}}, KMType::indefinite, true},
        {"complete3_a3", {{2, -3, -3}, {-3, 2, -3}, {-3, -3, 2}}, KMType::indefinite, true},
        {"complete3_skew", {{2, -4, -2}, {-1, 2, -2}, {-2, -2, 2}}, KMType::indefinite, false},
        {"three_cycle", {{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}, KMType::indefinite, false},
        {"hyperbolic_chain", {{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}}, KMType::indefinite, true},
        {"rank4_tail", {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -2}, {0, 0, -2, 2}}, KMType::indefinite, true},
    };
    return b;
}

inline std::vector<BatteryEntry> battery_of(KMType t)
{
    std::vector<BatteryEntry> out;
    for (const auto &e : battery()) {
        if (e.type == t) {
            out.push_back(e);
        }
    }
    return out;
}

// Length counts by breadth-first search on the Cayley graph, with group
// elements represented as integer matrices of the reflection action on the
// root lattice: s_i(alpha_j) = alpha_j - a_ij alpha_i.
inline std::vector<Int> cayley_length_counts(const Raw &a, std::size_t lmax)
{
    const std::size_t n = a.size();
    using Mat = std::vector<std::int64_t>;  // row-major n x n
    std::vector<Mat> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Mat s(n * n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            s[j * n + j] = 1;
        }
        // column j is the image of alpha_j
        for (std::size_t j = 0; j < n; ++j) {
            s[i * n + j] -= a[i][j];
        }
        gens.push_back(s);
    }
    auto mul = [n](const Mat &x, const Mat &y) {
        Mat z(n * n, 0);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t k = 0; k < n; ++k) {
                if (x[r * n + k] == 0) {
                    continue;
                }
                for (std::size_t c = 0; c < n; ++c) {
                    z[r * n + c] += x[r * n + k] * y[k * n + c];
                }
            }
        }
        return z;
    };
    Mat id(n * n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        id[j * n + j] = 1;
    }
    std::set<Mat> seen{id};
    std::vector<Mat> layer{id};
    std::vector<Int> counts{1};
    for (std::size_t l = 1; l <= lmax; ++l) {
        std::vector<Mat> next;
        for (const auto &w : layer) {
            for (const auto &s : gens) {
                Mat v = mul(w, s);
                if (seen.insert(v).second) {
                    next.push_back(std::move(v));
                }
            }
        }
        counts.emplace_back(static_cast<long long>(next.size()));
        layer = std::move(next);
    }
    return counts;
}

// Positive integer d with a_ij d_j = a_ji d_i, found by exhaustive search.
inline std::optional<std::vector<std::int64_t>> brute_force_symmetrizer(const Raw &a, std::int64_t bound)
{
    const std::size_t n = a.size();
    std::vector<std::int64_t> d(n, 1);
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            for (std::size_t j = 0; j < n && ok; ++j) {
                ok = a[i][j] * d[j] == a[j][i] * d[i];
            }
        }
        if (ok) {
            return d;
        }
        std::size_t k = 0;
        while (k < n && d[k] == bound) {
            d[k++] = 1;
        }
        if (k == n) {
            return std::nullopt;
        }
        ++d[k];
    }
}

// Type of an indecomposable matrix from a positive test vector u: Au > 0
// means finite, Au = 0 affine, Au < 0 indefinite (componentwise).
inline std::optional<KMType> vector_witness_type(const Raw &a, std::int64_t bound)
{
    const std::size_t n = a.size();
    std::vector<std::int64_t> u(n, 1);
    while (true) {
        bool pos = true, zero = true, neg = true;
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < n; ++j) {
                s += a[i][j] * u[j];
            }
            pos = pos && s > 0;
            zero = zero && s == 0;
            neg = neg && s < 0;
        }
        if (zero) {
            return KMType::affine;
        }
        if (pos) {
            return KMType::finite;
        }
        if (neg) {
            return KMType::indefinite;
        }
        std::size_t k = 0;
        while (k < n && u[k] == bound) {
            u[k++] = 1;
        }
        if (k == n) {
            return std::nullopt;
        }
        ++u[k];
    }
}

// Random generalized Cartan matrix: off-diagonal pairs are both zero or both
// negative, each entry in [-max_entry, -1].
inline Raw random_gcm(std::mt19937_64 &rng, std::size_t n, std::int64_t max_entry, double zero_prob = 0.3)
{
    Raw a(n, std::vector<std::int64_t>(n, 0));
    std::uniform_int_distribution<std::int64_t> mag(1, max_entry);
    std::bernoulli_distribution zero(zero_prob);
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 2;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!zero(rng)) {
                a[i][j] = -mag(rng);
                a[j][i] = -mag(rng);
            }
        }
    }
    return a;
}

// Random element of Z_1[q] known to the given order.
inline kmcoh::Series random_z1(std::mt19937_64 &rng, std::size_t order, std::int64_t max_coeff)
{
    std::uniform_int_distribution<std::int64_t> c(-max_coeff, max_coeff);
    std::vector<Int> v(order + 1);
    v[0] = 1;
    for (std::size_t k = 1; k <= order; ++k) {
        v[k] = c(rng);
    }
    return kmcoh::Series(std::move(v), order);
}

inline Raw permuted(const Raw &a, const std::vector<std::size_t> &p)
{
    Raw b(a.size(), std::vector<std::int64_t>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            b[i][j] = a[p[i]][p[j]];
        }
    }
    return b;
}

} // namespace kmtest

#endif
