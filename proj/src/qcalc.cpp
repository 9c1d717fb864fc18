#include "ncf/qcalc.hpp"

#include <map>
#include <mutex>

#include "ncf/errors.hpp"

namespace ncf {

BigInt binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt acc = 1;
    for (long long i = 1; i <= b; ++i) {
        acc *= a - b + i;
        acc /= i;  // exact: acc is C(a-b+i, i) after this step
    }
    return acc;
}

QPoly q_int(int a) {
    if (a < 0) throw InputError("q-integer of a negative number: " + std::to_string(a));
    return QPoly(std::vector<BigInt>(static_cast<std::size_t>(a), BigInt(1)));
}

QPoly q_factorial(int a) {
    if (a < 0) throw InputError("q-factorial of a negative number: " + std::to_string(a));
    QPoly acc = QPoly::constant(1);
    for (int i = 2; i <= a; ++i) acc *= q_int(i);
    return acc;
}

QPoly q_binomial(int a, int b) {
    if (a < 0) throw InputError("q-binomial needs a >= 0, got " + std::to_string(a));
    if (b < 0 || b > a) return {};
    if (b > a - b) b = a - b;
    QPoly acc = QPoly::constant(1);
    for (int j = 1; j <= b; ++j) {
        acc = divide_exact(acc * q_int(a - j + 1), q_int(j),
                           "q-binomial(" + std::to_string(a) + "," + std::to_string(j) + ")");
    }
    return acc;
}

namespace {

void check_nk(int n, int k) {
    if (n < 1 || k < 1 || k > n) {
        throw InputError("need 1 <= k <= n, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
    }
}

}  // namespace

QPoly f_poly(int n, int k) {
    check_nk(n, k);
    const QPoly product = q_binomial(n, k - 1) * q_binomial(3 * n - 2 * k - 1, n - k);
    QPoly f = divide_exact(product, q_int(2 * n - k),
                           "f_{" + std::to_string(n) + "," + std::to_string(k) + "}(q)");
    if (!f.all_nonnegative()) {
        throw InvariantViolation("f_{" + std::to_string(n) + "," + std::to_string(k) +
                                 "}(q) has a negative coefficient");
    }
    return f;
}

BigInt count_formula(int n, int k) {
    check_nk(n, k);
    const BigInt product = binomial(n, k - 1) * binomial(3 * n - 2 * k - 1, n - k);
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(product, BigInt(2 * n - k), q, r);
    if (r != 0) throw InvariantViolation("forest count formula is not an integer");
    return q;
}

const QPoly& cyclotomic(int d) {
    if (d < 1) throw InputError("cyclotomic index must be >= 1, got " + std::to_string(d));
    static std::mutex mutex;
    static std::map<int, QPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(d); it != cache.end()) return it->second;
    }
    // q^d - 1 divided by Phi_e for every proper divisor e. Computed unlocked
    // because it recurses into smaller d.
    QPoly p = QPoly::monomial(1, d) - QPoly::constant(1);
    for (int e = 1; e < d; ++e) {
        if (d % e == 0) p = divide_exact(p, cyclotomic(e), "cyclotomic(" + std::to_string(d) + ")");
    }
    std::lock_guard lock(mutex);
    return cache.emplace(d, std::move(p)).first->second;
}

CyclotomicResidue::CyclotomicResidue(int d, const QPoly& p)
    : d_(d), residue_(divmod(p, cyclotomic(d)).remainder) {}

BigInt CyclotomicResidue::as_integer() const {
    if (!is_integer()) {
        throw InputError("value is not a rational integer: residue " + residue_.to_list_string() +
                         " mod Phi_" + std::to_string(d_));
    }
    return residue_.coeff(0);
}

CyclotomicResidue operator+(const CyclotomicResidue& a, const CyclotomicResidue& b) {
    if (a.d_ != b.d_) throw InputError("adding residues modulo different cyclotomics");
    return CyclotomicResidue(a.d_, a.residue_ + b.residue_);
}

CyclotomicResidue operator*(const CyclotomicResidue& a, const CyclotomicResidue& b) {
    if (a.d_ != b.d_) throw InputError("multiplying residues modulo different cyclotomics");
    return CyclotomicResidue(a.d_, a.residue_ * b.residue_);
}

CyclotomicResidue operator*(const BigInt& c, const CyclotomicResidue& a) {
    return CyclotomicResidue(a.d_, a.residue_ * c);
}

CyclotomicResidue eval_at_root(const QPoly& p, int d) { return CyclotomicResidue(d, p); }

CyclotomicResidue q_lucas(int a, int b, int d) {
    if (a < 0 || b < 0) throw InputError("q-Lucas needs a, b >= 0");
    if (d < 2) throw InputError("q-Lucas needs d >= 2, got " + std::to_string(d));
    return binomial(a / d, b / d) * eval_at_root(q_binomial(a % d, b % d), d);
}

int cyclotomic_multiplicity(const QPoly& p, int d) {
    if (p.is_zero()) throw InputError("multiplicity of a root in the zero polynomial");
    const QPoly& phi = cyclotomic(d);
    int m = 0;
    QPoly cur = p;
    for (;;) {
        auto [quot, rem] = divmod(cur, phi);
        if (!rem.is_zero()) return m;
        cur = std::move(quot);
        ++m;
    }
}

QFactsVerdict q_facts_check(int a, int b, int d) {
    if (a < 1 || b < 1 || d < 1) throw InputError("q_facts_check needs a, b, d >= 1");
    QFactsVerdict out;
    const QPoly qa = q_int(a);
    const QPoly qb = q_int(b);
    auto tag = [](int x) { return "[" + std::to_string(x) + "]_q"; };

    const int mult_a = cyclotomic_multiplicity(qa, d);
    const int expected = (d != 1 && a % d == 0) ? 1 : 0;
    out.simple_zero = mult_a == expected;
    out.witnesses.push_back("multiplicity of Phi_" + std::to_string(d) + " in " + tag(a) + " = " +
                            std::to_string(mult_a) + " (expected " + std::to_string(expected) + ")");

    if (d >= 2 && a % d == 1 % d) {
        const auto value = eval_at_root(qa, d);
        out.unit_value = value.is_integer() && value.as_integer() == 1;
        out.witnesses.push_back(tag(a) + " at w_" + std::to_string(d) + " = " +
                                value.residue().to_list_string());
    }

    if ((a - b) % d == 0) {
        // Strip the common simple zero (if any) so the ratio is a value, not 0/0.
        const int mult_b = cyclotomic_multiplicity(qb, d);
        QPoly pa = qa;
        QPoly pb = qb;
        for (int i = 0; i < mult_a; ++i) pa = divide_exact(pa, cyclotomic(d), "strip Phi_d");
        for (int i = 0; i < mult_b; ++i) pb = divide_exact(pb, cyclotomic(d), "strip Phi_d");
        const auto ra = eval_at_root(pa, d);
        const auto rb = eval_at_root(pb, d);
        if (a % d == 0) {
            out.ratio = mult_a == mult_b && BigInt(b) * ra == BigInt(a) * rb;
            out.witnesses.push_back(tag(a) + "/" + tag(b) + " at w_" + std::to_string(d) +
                                    " compared with " + std::to_string(a) + "/" + std::to_string(b));
        } else {
            out.ratio = mult_a == 0 && mult_b == 0 && ra == rb && !ra.residue().is_zero();
            out.witnesses.push_back(tag(a) + "/" + tag(b) + " at w_" + std::to_string(d) +
                                    " compared with 1");
        }
    }
    return out;
}

}  // namespace ncf
