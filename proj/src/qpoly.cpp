#include "ncf/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "ncf/errors.hpp"

namespace ncf {

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

QPoly QPoly::constant(BigInt c) { return QPoly(std::vector<BigInt>{std::move(c)}); }

QPoly QPoly::monomial(BigInt c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = std::move(c);
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool QPoly::all_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

bool QPoly::is_symmetric() const {
    // Palindromic about the centre of [lowest nonzero power, degree].
    auto lo = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
    return std::equal(lo, coeffs_.end(), coeffs_.rbegin());
}

bool QPoly::is_unimodal() const {
    std::size_t i = 1;
    while (i < coeffs_.size() && coeffs_[i] >= coeffs_[i - 1]) ++i;
    while (i < coeffs_.size() && coeffs_[i] <= coeffs_[i - 1]) ++i;
    return i >= coeffs_.size();
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const BigInt& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly out = *this;
    for (auto& x : out.coeffs_) x = -x;
    return out;
}

std::string QPoly::to_list_string() const {
    if (is_zero()) return "[0]";
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out << (i ? ", " : "") << coeffs_[i];
    out << "]";
    return out.str();
}

std::string QPoly::to_pretty_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) out << mag;
        if (i >= 1) out << "q";
        if (i >= 2) out << "^" << i;
    }
    return out.str();
}

QPolyDivision divmod(const QPoly& numerator, const QPoly& divisor) {
    if (divisor.is_zero()) throw InputError("polynomial division by zero");
    std::vector<BigInt> rem = numerator.coeffs();
    const auto& den = divisor.coeffs();
    const std::size_t dn = den.size();
    if (rem.size() < dn) return {QPoly{}, numerator};

    std::vector<BigInt> quot(rem.size() - dn + 1);
    const BigInt& lead = den.back();
    for (std::size_t top = rem.size(); top >= dn; --top) {
        const std::size_t i = top - 1;
        if (rem[i] == 0) continue;
        BigInt r;
        BigInt q;
        boost::multiprecision::divide_qr(rem[i], lead, q, r);
        if (r != 0) throw InputError("division leaves Z[q]: leading coefficient does not divide");
        const std::size_t shift = i - (dn - 1);
        quot[shift] = q;
        for (std::size_t j = 0; j < dn; ++j) rem[shift + j] -= q * den[j];
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly divide_exact(const QPoly& numerator, const QPoly& divisor, const std::string& context) {
    auto [quotient, remainder] = divmod(numerator, divisor);
    if (!remainder.is_zero()) {
        throw InvariantViolation(context + ": exact division left remainder " +
                                 remainder.to_list_string());
    }
    return quotient;
}

}  // namespace ncf
