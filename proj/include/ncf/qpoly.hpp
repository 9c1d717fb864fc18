#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncf {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. coeffs()[i] is the coefficient of q^i; trailing zeros are
/// always trimmed, so the zero polynomial has no coefficients.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<BigInt> coeffs);
    QPoly(std::initializer_list<long long> coeffs);

    static QPoly constant(BigInt c);
    static QPoly monomial(BigInt c, std::size_t degree);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const BigInt& leading() const { return coeffs_.back(); }

    BigInt eval(const BigInt& x) const;

    bool all_nonnegative() const;
    /// Palindromic coefficient sequence. The zero polynomial counts as symmetric.
    bool is_symmetric() const;
    /// Weakly increasing then weakly decreasing.
    bool is_unimodal() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const BigInt& c);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const BigInt& c) { return a *= c; }
    QPoly operator-() const;

    friend bool operator==(const QPoly&, const QPoly&) = default;

    /// "[c0, c1, ...]"; the zero polynomial prints as "[0]".
    std::string to_list_string() const;
    /// "1 + q^2 + q^4" style, ascending powers.
    std::string to_pretty_string() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

struct QPolyDivision {
    QPoly quotient;
    QPoly remainder;
};

/// Division with remainder in Z[q]. Every step must divide the leading
/// coefficient exactly, which always holds for a divisor with leading
/// coefficient +-1. Throws InputError on division by zero or when the
/// quotient would leave Z[q].
QPolyDivision divmod(const QPoly& numerator, const QPoly& divisor);

/// Quotient of an exact division. A nonzero remainder throws
/// InvariantViolation, naming `context`.
QPoly divide_exact(const QPoly& numerator, const QPoly& divisor, const std::string& context);

}  // namespace ncf
