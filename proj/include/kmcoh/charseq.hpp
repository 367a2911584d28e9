#ifndef KMCOH_CHARSEQ_HPP
#define KMCOH_CHARSEQ_HPP

// Characteristic sequences of series in Z_1[q]: the unique integers i_k with
//
//     f(q) = prod_{k >= 1} (1 - q^k)^{i_k}.
//
// Two independent routes are provided: peeling one factor at a time, and the
// logarithmic route through Moebius inversion. They serve as oracles for each
// other in the test suite.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <kmcoh/integer.hpp>
#include <kmcoh/series.hpp>

namespace kmcoh
{

// i_1..i_N; element k-1 holds i_k.
class CharSeq
{
public:
    CharSeq() = default;
    explicit CharSeq(std::vector<Int> values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<Int> &values() const noexcept { return values_; }
    // 1-based access matching the exponent index.
    const Int &operator()(std::size_t k) const { return values_.at(k - 1); }
    Int &operator()(std::size_t k) { return values_.at(k - 1); }

    friend CharSeq operator+(const CharSeq &a, const CharSeq &b)
    {
        std::vector<Int> v(std::max(a.size(), b.size()));
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k < a.size()) {
                v[k] += a.values_[k];
            }
            if (k < b.size()) {
                v[k] += b.values_[k];
            }
        }
        return CharSeq(std::move(v));
    }
    friend bool operator==(const CharSeq &a, const CharSeq &b) { return a.values_ == b.values_; }
    friend bool operator!=(const CharSeq &a, const CharSeq &b) { return !(a == b); }

private:
    std::vector<Int> values_;
};

inline int mobius(std::uint64_t n)
{
    if (n == 0) {
        throw error(errc::internal_inconsistency, "mobius(0) is undefined");
    }
    int result = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        n /= p;
        if (n % p == 0) {
            return 0;
        }
        result = -result;
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

// Dimension of the degree-k component of the free Lie algebra on n generators.
inline Int witt_dim(unsigned n, unsigned k)
{
    Int sum = 0;
    for (unsigned d = 1; d <= k; ++d) {
        if (k % d != 0) {
            continue;
        }
        const int mu = mobius(d);
        if (mu != 0) {
            sum += mu * int_pow(Int(n), k / d);
        }
    }
    return sum / k;
}

namespace detail
{

inline void require_z1(const Series &f, std::size_t n)
{
    if (!f.in_z1()) {
        throw error(errc::not_in_z1, "constant term is " + f[0].str() + ", expected 1");
    }
    if (f.order() < n) {
        throw error(errc::internal_inconsistency,
                    "series known to order " + std::to_string(f.order()) + " < requested " + std::to_string(n));
    }
}

} // namespace detail

// Peels the factors (1 - q^k)^{i_k} in order k = 1, 2, ...: after removing
// the first k-1 factors the remainder is 1 + c q^k + ..., which forces i_k = -c.
inline CharSeq char_sequence(const Series &f, std::size_t n)
{
    detail::require_z1(f, n);
    Series rest = f.truncate(n);
    std::vector<Int> seq(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Int ik = -rest[k];
        multiply_one_minus_power(rest, k, -ik);
        seq[k - 1] = std::move(ik);
    }
    return CharSeq(std::move(seq));
}

// Logarithmic coefficients b_k defined by ln f(q) = -sum_k (b_k / k) q^k,
// read off q f'/f = -sum_k b_k q^k.
inline std::vector<Int> log_coefficients(const Series &f, std::size_t n)
{
    detail::require_z1(f, n);
    const Series g = f.truncate(n);
    const Series inv = g.reciprocal();
    std::vector<Int> b(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Int dlog = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            dlog += Int(j) * g[j] * inv[k - j];
        }
        b[k - 1] = -dlog;
    }
    return b;
}

// i_k = (1/k) sum_{d | k} mu(d) b_{k/d}
inline CharSeq char_sequence_log(const Series &f, std::size_t n)
{
    const std::vector<Int> b = log_coefficients(f, n);
    std::vector<Int> seq(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Int sum = 0;
        for (std::size_t d = 1; d <= k; ++d) {
            if (k % d != 0) {
                continue;
            }
            const int mu = mobius(d);
            if (mu != 0) {
                sum += mu * b[k / d - 1];
            }
        }
        if (sum % k != 0) {
            throw error(errc::non_integer_result,
                        "k*i_k = " + sum.str() + " not divisible by k = " + std::to_string(k));
        }
        seq[k - 1] = sum / k;
    }
    return CharSeq(std::move(seq));
}

// prod_{k=1}^{N} (1 - q^k)^{i_k} mod q^{N+1}
inline Series rebuild(const CharSeq &seq, std::size_t n)
{
    Series f = Series::one(n);
    for (std::size_t k = 1; k <= std::min(n, seq.size()); ++k) {
        multiply_one_minus_power(f, k, seq(k));
    }
    return f;
}

} // namespace kmcoh

#endif
