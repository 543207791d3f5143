#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include "minkarr/errors.hpp"

namespace minkarr {

// Arbitrary-precision rational, canonical form. Thin value wrapper around
// mpq_class so the backend stays swappable and string I/O is ours.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "num", "num/den", and plain decimal strings ("0.5" -> 1/2).
    static Rational parse(const std::string& text);
    // Exact value of the binary double (every finite double is rational).
    static Rational from_double(double x);

    static Rational pow(const Rational& base, unsigned exp);
    // 2^k for possibly negative k.
    static Rational pow2(long k);

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational abs() const { return q_ < 0 ? -*this : *this; }
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    double to_double() const { return q_.get_d(); }

    // floor(log2(value)) for value > 0, exact.
    long floor_log2() const;

    // "num" when the denominator is 1, else "num/den".
    std::string str() const;

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// A run-mode-tagged number: exact rational or IEEE double. Arithmetic on two
// exact operands stays exact; anything touching a double becomes a double.
class Scalar {
public:
    Scalar() : v_(Rational()) {}
    Scalar(Rational r) : v_(std::move(r)) {}      // NOLINT: implicit by design
    Scalar(double x) : v_(x) {}                   // NOLINT: implicit by design
    Scalar(long n) : v_(Rational(n)) {}           // NOLINT: implicit by design
    Scalar(int n) : v_(Rational(n)) {}            // NOLINT: implicit by design

    bool exact() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rat() const;
    double to_double() const;

    Scalar operator-() const;
    Scalar abs() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    // Three-way compare; exact when both operands are exact.
    int cmp(const Scalar& other) const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.cmp(b) != 0; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return a.cmp(b) >= 0; }

    std::string str() const;

private:
    std::variant<Rational, double> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Absolute tolerance for comparisons. eps == 0 means exact semantics.
struct Tol {
    double eps = 0.0;
};

// a <= b up to tolerance.
bool approx_le(const Scalar& a, const Scalar& b, Tol tol);
// a < b with margin beyond the tolerance (eps == 0: plain strict).
bool approx_lt(const Scalar& a, const Scalar& b, Tol tol);
bool approx_eq(const Scalar& a, const Scalar& b, Tol tol);
inline bool approx_ge(const Scalar& a, const Scalar& b, Tol tol) { return approx_le(b, a, tol); }
inline bool approx_gt(const Scalar& a, const Scalar& b, Tol tol) { return approx_lt(b, a, tol); }

enum class NumericMode { Rational, Float };

// Per-run numeric policy. In rational mode comparisons on exact data are
// exact (tol().eps == 0); float_tol() is the tolerance used for checks that
// are inherently irrational (2^{1/N} margins) regardless of mode.
struct NumericContext {
    NumericMode mode = NumericMode::Float;
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
    int workers = 0;  // 0: use hardware concurrency

    bool rational() const { return mode == NumericMode::Rational; }
    Tol tol() const { return Tol{rational() ? 0.0 : tolerance}; }
    Tol float_tol() const { return Tol{tolerance}; }
    const char* mode_name() const { return rational() ? "rational" : "float"; }

    static NumericContext rational_mode() { return NumericContext{NumericMode::Rational, 1e-9, 0, 0}; }
    static NumericContext float_mode(double eps = 1e-9) { return NumericContext{NumericMode::Float, eps, 0, 0}; }
};

}  // namespace minkarr
