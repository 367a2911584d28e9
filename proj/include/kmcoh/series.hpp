#ifndef KMCOH_SERIES_HPP
#define KMCOH_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <kmcoh/integer.hpp>
#include <kmcoh/polynomial.hpp>

namespace kmcoh
{

// Power series with exact integer coefficients c_0..c_N, truncated at
// order N (inclusive). Arithmetic never touches coefficients above N.
class Series
{
public:
    explicit Series(std::size_t order) : coeffs_(order + 1) {}
    Series(std::vector<Int> coeffs, std::size_t order) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order + 1);
    }
    static Series from_polynomial(const Polynomial &p, std::size_t order)
    {
        return Series(p.coeffs(), order);
    }
    static Series one(std::size_t order)
    {
        Series s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Int> &coeffs() const noexcept { return coeffs_; }
    const Int &operator[](std::size_t k) const { return coeffs_[k]; }
    Int &operator[](std::size_t k) { return coeffs_[k]; }

    // True when the series lies in Z_1[q], i.e. has constant term 1.
    bool in_z1() const { return coeffs_[0] == 1; }

    Series truncate(std::size_t order) const
    {
        if (order > this->order()) {
            throw error(errc::internal_inconsistency, "cannot raise the truncation order of a series");
        }
        std::vector<Int> cs(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order + 1));
        return Series(std::move(cs), order);
    }

    friend Series operator+(const Series &a, const Series &b)
    {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) {
            r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        }
        return r;
    }
    friend Series operator-(const Series &a, const Series &b)
    {
        Series r(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) {
            r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        }
        return r;
    }
    friend Series operator*(const Series &a, const Series &b)
    {
        Series r(std::min(a.order(), b.order()));
        const std::size_t n = r.order();
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    // Multiplicative inverse; the constant term must be +1 or -1.
    Series reciprocal() const
    {
        const Int &c0 = coeffs_[0];
        if (c0 != 1 && c0 != -1) {
            throw error(errc::non_unit_constant_term, "constant term " + c0.str() + " is not a unit");
        }
        Series r(order());
        r.coeffs_[0] = c0;
        for (std::size_t k = 1; k <= order(); ++k) {
            Int acc = 0;
            for (std::size_t j = 1; j <= k; ++j) {
                acc += coeffs_[j] * r.coeffs_[k - j];
            }
            r.coeffs_[k] = -acc * c0;
        }
        return r;
    }

    // f(q) -> f(q^2); order N becomes 2N.
    Series substitute_q_squared() const
    {
        Series r(2 * order());
        for (std::size_t k = 0; k <= order(); ++k) {
            r.coeffs_[2 * k] = coeffs_[k];
        }
        return r;
    }

    // g(t) with f(q) = g(q^2); requires every odd coefficient to vanish.
    Series even_part() const
    {
        Series r(order() / 2);
        for (std::size_t k = 0; k <= order(); ++k) {
            if (k % 2 == 1) {
                if (coeffs_[k] != 0) {
                    throw error(errc::odd_support, "nonzero coefficient at q^" + std::to_string(k));
                }
                continue;
            }
            r.coeffs_[k / 2] = coeffs_[k];
        }
        return r;
    }

    friend bool operator==(const Series &a, const Series &b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Series &a, const Series &b) { return !(a == b); }

    std::vector<std::string> coeff_strings() const
    {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const Int &c : coeffs_) {
            out.push_back(c.str());
        }
        return out;
    }

private:
    std::vector<Int> coeffs_;
};

// (1 - q^k)^m truncated to the given order, for any integer m.
inline Series one_minus_power(std::size_t k, const Int &m, std::size_t order)
{
    Series r(order);
    Int sign = 1;
    for (std::size_t j = 0; j * k <= order; ++j) {
        r[j * k] = sign * generalized_binomial(m, static_cast<unsigned>(j));
        sign = -sign;
    }
    return r;
}

// In-place multiplication by (1 - q^k)^m; cheaper than a full Cauchy product
// because the factor is sparse.
inline void multiply_one_minus_power(Series &f, std::size_t k, const Int &m)
{
    if (m == 0 || k == 0) {
        return;
    }
    const std::size_t n = f.order();
    const Series factor = one_minus_power(k, m, n);
    for (std::size_t d = n + 1; d-- > 0;) {
        Int acc = 0;
        for (std::size_t j = 0; j * k <= d; ++j) {
            acc += factor[j * k] * f[d - j * k];
        }
        f[d] = std::move(acc);
    }
}

} // namespace kmcoh

#endif
