#ifndef KMCOH_POLYNOMIAL_HPP
#define KMCOH_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <kmcoh/integer.hpp>

namespace kmcoh
{

// Dense univariate polynomial in q with unbounded integer coefficients,
// stored constant term first. The zero polynomial has no coefficients.
class Polynomial
{
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<long long> cs)
    {
        for (long long c : cs) {
            coeffs_.emplace_back(c);
        }
        trim();
    }
    explicit Polynomial(std::vector<Int> cs) : coeffs_(std::move(cs)) { trim(); }
    explicit Polynomial(const Int &c)
    {
        if (c != 0) {
            coeffs_.push_back(c);
        }
    }

    static Polynomial monomial(const Int &c, std::size_t degree)
    {
        std::vector<Int> cs(degree + 1);
        cs[degree] = c;
        return Polynomial(std::move(cs));
    }

    // 1 - c q^k
    static Polynomial one_minus(std::size_t k, const Int &c = 1)
    {
        std::vector<Int> cs(k + 1);
        cs[0] += 1;
        cs[k] -= c;
        return Polynomial(std::move(cs));
    }

    // [d]_q = 1 + q + ... + q^{d-1}
    static Polynomial q_integer(std::size_t d)
    {
        return Polynomial(std::vector<Int>(d, Int(1)));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Int> &coeffs() const noexcept { return coeffs_; }

    Int coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }
    const Int &leading() const { return coeffs_.back(); }

    // Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t valuation() const noexcept
    {
        std::size_t v = 0;
        while (v < coeffs_.size() && coeffs_[v] == 0) {
            ++v;
        }
        return v < coeffs_.size() ? v : 0;
    }

    Int content() const
    {
        Int g = 0;
        for (const Int &c : coeffs_) {
            g = int_gcd(g, c);
            if (g == 1) {
                break;
            }
        }
        return g;
    }

    Int eval(const Int &x) const
    {
        Int r = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            r = r * x + *it;
        }
        return r;
    }

    // p(q) -> p(q^k)
    Polynomial substitute_power(std::size_t k) const
    {
        if (is_zero()) {
            return {};
        }
        std::vector<Int> cs((coeffs_.size() - 1) * k + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            cs[i * k] = coeffs_[i];
        }
        return Polynomial(std::move(cs));
    }

    // q^{deg p} p(1/q)
    Polynomial reversed() const
    {
        std::vector<Int> cs(coeffs_.rbegin(), coeffs_.rend());
        return Polynomial(std::move(cs));
    }

    Polynomial shifted(std::size_t k) const
    {
        if (is_zero()) {
            return {};
        }
        std::vector<Int> cs(k);
        cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
        return Polynomial(std::move(cs));
    }

    Polynomial &operator+=(const Polynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }
    Polynomial &operator-=(const Polynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }
    Polynomial &operator*=(const Int &c)
    {
        if (c == 0) {
            coeffs_.clear();
        }
        for (Int &x : coeffs_) {
            x *= c;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (Int &x : a.coeffs_) {
            x = -x;
        }
        return a;
    }
    friend Polynomial operator*(Polynomial a, const Int &c) { return a *= c; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Int> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(cs));
    }
    Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

    friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial &a, const Polynomial &b) { return !(a == b); }

    Polynomial pow(unsigned e) const
    {
        Polynomial r(Int(1));
        Polynomial b = *this;
        while (e != 0) {
            if (e & 1U) {
                r *= b;
            }
            e >>= 1U;
            if (e != 0) {
                b *= b;
            }
        }
        return r;
    }

    // Divides every coefficient by c; c must divide each one.
    Polynomial divided_by(const Int &c) const
    {
        std::vector<Int> cs = coeffs_;
        for (Int &x : cs) {
            if (x % c != 0) {
                throw error(errc::internal_inconsistency, "inexact coefficient division");
            }
            x /= c;
        }
        return Polynomial(std::move(cs));
    }

    Polynomial primitive_part() const
    {
        if (is_zero()) {
            return {};
        }
        Int c = content();
        if (leading() < 0) {
            c = -c;
        }
        return divided_by(c);
    }

    // Exact division in Z[q]; throws if b does not divide a.
    friend Polynomial divide_exact(const Polynomial &a, const Polynomial &b)
    {
        if (b.is_zero()) {
            throw error(errc::internal_inconsistency, "polynomial division by zero");
        }
        if (a.degree() < b.degree()) {
            if (a.is_zero()) {
                return {};
            }
            throw error(errc::internal_inconsistency, "inexact polynomial division");
        }
        std::vector<Int> rem = a.coeffs_;
        const std::size_t db = b.coeffs_.size() - 1;
        std::vector<Int> quot(rem.size() - db);
        for (std::size_t k = quot.size(); k-- > 0;) {
            const Int &top = rem[k + db];
            if (top == 0) {
                continue;
            }
            if (top % b.leading() != 0) {
                throw error(errc::internal_inconsistency, "inexact polynomial division");
            }
            Int q = top / b.leading();
            for (std::size_t j = 0; j <= db; ++j) {
                rem[k + j] -= q * b.coeffs_[j];
            }
            quot[k] = std::move(q);
        }
        for (const Int &r : rem) {
            if (r != 0) {
                throw error(errc::internal_inconsistency, "inexact polynomial division");
            }
        }
        return Polynomial(std::move(quot));
    }

    // lc(b)^(deg a - deg b + 1) * a mod b
    friend Polynomial pseudo_remainder(const Polynomial &a, const Polynomial &b)
    {
        if (a.degree() < b.degree()) {
            return a;
        }
        std::vector<Int> rem = a.coeffs_;
        const std::size_t db = b.coeffs_.size() - 1;
        const Int &lb = b.leading();
        for (std::size_t top = rem.size(); top-- > db;) {
            Int t = rem[top];
            for (Int &x : rem) {
                x *= lb;
            }
            for (std::size_t j = 0; j <= db; ++j) {
                rem[top - db + j] -= t * b.coeffs_[j];
            }
        }
        rem.resize(db);
        return Polynomial(std::move(rem));
    }

    friend std::ostream &operator<<(std::ostream &os, const Polynomial &p) { return os << p.to_string(); }

    // Human-readable form, e.g. "1 + 2q^2 - q^3".
    std::string to_string(const std::string &var = "q") const
    {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Int &c = coeffs_[k];
            if (c == 0) {
                continue;
            }
            Int mag = abs(c);
            if (out.empty()) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (k == 0 || mag != 1) {
                out += mag.str();
            }
            if (k >= 1) {
                out += var;
            }
            if (k >= 2) {
                out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Int> coeffs_;
};

// Primitive gcd with positive leading coefficient, via the subresultant
// remainder sequence. gcd(0, 0) = 0.
inline Polynomial gcd(const Polynomial &x, const Polynomial &y)
{
    if (x.is_zero()) {
        return y.primitive_part();
    }
    if (y.is_zero()) {
        return x.primitive_part();
    }
    Polynomial a = x.primitive_part();
    Polynomial b = y.primitive_part();
    if (a.degree() < b.degree()) {
        std::swap(a, b);
    }
    Int g = 1;
    Int h = 1;
    while (true) {
        const long delta = a.degree() - b.degree();
        Polynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) {
            break;
        }
        if (r.degree() == 0) {
            return Polynomial(Int(1));
        }
        a = std::move(b);
        b = r.divided_by(g * int_pow(h, static_cast<unsigned>(delta)));
        g = a.leading();
        if (delta != 0) {
            h = int_pow(g, static_cast<unsigned>(delta)) / int_pow(h, static_cast<unsigned>(delta - 1));
        }
    }
    return b.primitive_part();
}

} // namespace kmcoh

#endif
