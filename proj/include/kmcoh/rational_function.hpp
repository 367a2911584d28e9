#ifndef KMCOH_RATIONAL_FUNCTION_HPP
#define KMCOH_RATIONAL_FUNCTION_HPP

#include <cstddef>
#include <string>
#include <utility>

#include <kmcoh/integer.hpp>
#include <kmcoh/polynomial.hpp>
#include <kmcoh/series.hpp>

namespace kmcoh
{

// num/den over Z[q] in canonical form:
//   - num and den share no nonconstant factor,
//   - the integer contents of num and den are coprime,
//   - den(0) > 0 (or, if den(0) = 0, the lowest nonzero coefficient of den is positive).
// Every growth series in this library has den(0) = 1 after normalization, so
// equality of canonical forms is plain coefficient equality.
class RationalFunction
{
public:
    RationalFunction() : num_(Int(0)), den_(Int(1)) {}
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(Int(1)) { normalize(); }
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) {
            throw error(errc::internal_inconsistency, "rational function with zero denominator");
        }
        normalize();
    }

    const Polynomial &num() const noexcept { return num_; }
    const Polynomial &den() const noexcept { return den_; }

    bool is_polynomial() const { return den_.degree() == 0; }

    friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b)
    {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b)
    {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b)
    {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b)
    {
        if (b.num_.is_zero()) {
            throw error(errc::internal_inconsistency, "rational function division by zero");
        }
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction &operator*=(const RationalFunction &o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction &a, const RationalFunction &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction &a, const RationalFunction &b) { return !(a == b); }

    RationalFunction reciprocal() const { return RationalFunction(den_, num_); }

    // R(q) -> R(q^k)
    RationalFunction substitute_power(std::size_t k) const
    {
        return RationalFunction(num_.substitute_power(k), den_.substitute_power(k));
    }

    // R(q) -> R(1/q), written as a ratio of polynomials by moving the power
    // of q to whichever side keeps exponents nonnegative.
    RationalFunction invert_variable() const
    {
        const long shift = den_.degree() - num_.degree();
        Polynomial n = num_.reversed();
        Polynomial d = den_.reversed();
        // num(1/q) = q^{-deg num} rev(num), den(1/q) = q^{-deg den} rev(den)
        if (shift >= 0) {
            n = n.shifted(static_cast<std::size_t>(shift));
        } else {
            d = d.shifted(static_cast<std::size_t>(-shift));
        }
        return RationalFunction(std::move(n), std::move(d));
    }

    // Taylor coefficients at q = 0 through q^order. Needs den(0) = 1.
    Series expand(std::size_t order) const
    {
        if (den_.coeff(0) != 1) {
            throw error(errc::non_unit_constant_term, "denominator constant term is " + den_.coeff(0).str());
        }
        Series s(order);
        const auto &d = den_.coeffs();
        for (std::size_t m = 0; m <= order; ++m) {
            Int acc = num_.coeff(m);
            const std::size_t top = std::min(m, d.size() - 1);
            for (std::size_t j = 1; j <= top; ++j) {
                acc -= d[j] * s[m - j];
            }
            s[m] = std::move(acc);
        }
        return s;
    }

    std::string to_string(const std::string &var = "q") const
    {
        if (is_polynomial() && den_.coeff(0) == 1) {
            return num_.to_string(var);
        }
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void normalize()
    {
        if (num_.is_zero()) {
            den_ = Polynomial(Int(1));
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
        Int c = int_gcd(num_.content(), den_.content());
        const Int &anchor = den_.coeffs()[den_.valuation()];
        if (anchor < 0) {
            c = -c;
        }
        if (c != 1) {
            num_ = num_.divided_by(c);
            den_ = den_.divided_by(c);
        }
    }

    Polynomial num_;
    Polynomial den_;
};

} // namespace kmcoh

#endif
