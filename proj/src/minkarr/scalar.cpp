#include "minkarr/scalar.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace minkarr {

Rational::Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw InputError("empty scalar string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        mpz_class n, d;
        if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
            throw InputError("cannot parse rational '" + text + "'");
        if (d == 0) throw InputError("rational with zero denominator: '" + text + "'");
        mpq_class q(n, d);
        q.canonicalize();
        return Rational(q);
    }
    auto dot = text.find('.');
    std::string digits = text;
    long frac_digits = 0;
    if (dot != std::string::npos) {
        frac_digits = static_cast<long>(text.size() - dot - 1);
        digits = text.substr(0, dot) + text.substr(dot + 1);
    }
    mpz_class n;
    if (digits.empty() || n.set_str(digits, 10) != 0)
        throw InputError("cannot parse scalar '" + text + "'");
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw InputError("non-finite scalar");
    mpq_class q(x);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow(const Rational& base, unsigned exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.q_.get_num().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.q_.get_den().get_mpz_t(), exp);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow2(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? Rational(mpq_class(p)) : Rational(mpq_class(1, p));
}

Rational Rational::inverse() const {
    if (is_zero()) throw InputError("division by zero");
    return Rational(mpq_class(1 / q_));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InputError("division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

long Rational::floor_log2() const {
    if (sign() <= 0) throw InputError("floor_log2 of non-positive value");
    const mpz_class& num = q_.get_num();
    const mpz_class& den = q_.get_den();
    long k = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    // sizeinbase is only an estimate of the ratio's exponent; settle exactly.
    auto ge_pow2 = [&](long e) {
        // num/den >= 2^e ?
        mpz_class lhs = num, rhs = den;
        if (e >= 0)
            mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(e));
        else
            mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<unsigned long>(-e));
        return lhs >= rhs;
    };
    while (!ge_pow2(k)) --k;
    while (ge_pow2(k + 1)) ++k;
    return k;
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const Rational& Scalar::rat() const {
    if (!exact()) throw InternalError("Scalar::rat() on a float value");
    return std::get<Rational>(v_);
}

double Scalar::to_double() const {
    if (exact()) return std::get<Rational>(v_).to_double();
    return std::get<double>(v_);
}

Scalar Scalar::operator-() const {
    if (exact()) return Scalar(-rat());
    return Scalar(-std::get<double>(v_));
}

Scalar Scalar::abs() const {
    if (exact()) return Scalar(rat().abs());
    return Scalar(std::fabs(std::get<double>(v_)));
}

namespace {
template <typename ExactOp, typename FloatOp>
Scalar combine(const Scalar& a, const Scalar& b, ExactOp eop, FloatOp fop) {
    if (a.exact() && b.exact()) return Scalar(eop(a.rat(), b.rat()));
    return Scalar(fop(a.to_double(), b.to_double()));
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x + y; },
                   [](double x, double y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x - y; },
                   [](double x, double y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x * y; },
                   [](double x, double y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
    if (!b.exact() && b.to_double() == 0.0) throw InputError("division by zero");
    return combine(a, b, [](const Rational& x, const Rational& y) { return x / y; },
                   [](double x, double y) { return x / y; });
}

int Scalar::cmp(const Scalar& other) const {
    if (exact() && other.exact()) {
        const Rational& a = rat();
        const Rational& b = other.rat();
        if (a < b) return -1;
        if (b < a) return 1;
        return 0;
    }
    const double a = to_double();
    const double b = other.to_double();
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
}

std::string Scalar::str() const {
    if (exact()) return rat().str();
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(v_));
    return buf;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

bool approx_le(const Scalar& a, const Scalar& b, Tol tol) {
    if (a.exact() && b.exact() && tol.eps == 0.0) return a.rat() <= b.rat();
    if (a.exact() && b.exact()) {
        // Exact data under a float tolerance: compare exactly against the pad.
        return a.rat() <= b.rat() + Rational::from_double(tol.eps);
    }
    return a.to_double() <= b.to_double() + tol.eps;
}

bool approx_lt(const Scalar& a, const Scalar& b, Tol tol) {
    if (a.exact() && b.exact() && tol.eps == 0.0) return a.rat() < b.rat();
    if (a.exact() && b.exact()) {
        return b.rat() - a.rat() > Rational::from_double(tol.eps);
    }
    return b.to_double() - a.to_double() > tol.eps;
}

bool approx_eq(const Scalar& a, const Scalar& b, Tol tol) {
    return approx_le(a, b, tol) && approx_le(b, a, tol);
}

}  // namespace minkarr
