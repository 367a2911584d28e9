#ifndef KMCOH_INTEGER_HPP
#define KMCOH_INTEGER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace kmcoh
{

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error categories. Every failure raised by the library carries one of these.
enum class errc {
    not_square,
    diagonal_not_two,
    positive_off_diagonal,
    zero_pairing_violated,
    unknown_family,
    rank_out_of_range,
    rank_cap_exceeded,
    non_unit_constant_term,
    not_in_z1,
    non_integer_result,
    memory_budget_exceeded,
    non_canonical_decomposition,
    odd_support,
    not_indefinite,
    not_indecomposable,
    negative_rank,
    parse_error,
    internal_inconsistency,
};

inline const char *errc_name(errc c)
{
    switch (c) {
    case errc::not_square: return "NotSquare";
    case errc::diagonal_not_two: return "DiagonalNotTwo";
    case errc::positive_off_diagonal: return "PositiveOffDiagonal";
    case errc::zero_pairing_violated: return "ZeroPairingViolated";
    case errc::unknown_family: return "UnknownFamily";
    case errc::rank_out_of_range: return "RankOutOfRange";
    case errc::rank_cap_exceeded: return "RankCapExceeded";
    case errc::non_unit_constant_term: return "NonUnitConstantTerm";
    case errc::not_in_z1: return "NotInZ1";
    case errc::non_integer_result: return "NonIntegerResult";
    case errc::memory_budget_exceeded: return "MemoryBudgetExceeded";
    case errc::non_canonical_decomposition: return "NonCanonicalDecomposition";
    case errc::odd_support: return "OddSupport";
    case errc::not_indefinite: return "NotIndefinite";
    case errc::not_indecomposable: return "NotIndecomposable";
    case errc::negative_rank: return "NegativeRank";
    case errc::parse_error: return "ParseError";
    case errc::internal_inconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

class error : public std::runtime_error
{
public:
    error(errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// An error attached to one matrix entry (0-based row and column).
class entry_error : public error
{
public:
    entry_error(errc code, std::size_t row, std::size_t col, const std::string &what)
        : error(code, "(" + std::to_string(row) + "," + std::to_string(col) + ") " + what), row_(row),
          col_(col)
    {
    }
    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

inline std::string to_string(const Int &x) { return x.str(); }

// num/den with the sign moved to the numerator; den must be nonzero.
inline Rat make_rat(Int num, Int den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline std::string to_string(const Rat &x)
{
    if (denominator(x) == 1) {
        return numerator(x).str();
    }
    return numerator(x).str() + "/" + denominator(x).str();
}

inline Int int_pow(const Int &base, unsigned exp)
{
    Int result = 1;
    Int b = base;
    while (exp != 0) {
        if (exp & 1U) {
            result *= b;
        }
        exp >>= 1U;
        if (exp != 0) {
            b *= b;
        }
    }
    return result;
}

inline Int int_gcd(const Int &a, const Int &b)
{
    Int x = abs(a);
    Int y = abs(b);
    while (y != 0) {
        Int r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

// Binomial coefficient C(m, j) for any integer m (negative m allowed) and j >= 0.
inline Int generalized_binomial(const Int &m, unsigned j)
{
    Int num = 1;
    Int den = 1;
    for (unsigned t = 0; t < j; ++t) {
        num *= m - t;
        den *= t + 1;
    }
    return num / den;
}

} // namespace kmcoh

#endif
