#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rearr {

/// Exact arbitrary-precision rational. Always canonical: denominator > 0,
/// lowest terms. The only scalar used in core computations.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n);
    Rational(long num, long den);

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parse "p", "-p" or "p/q" (decimal-free). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    /// 2^e for any integer e (negative allowed).
    static Rational pow2(long e);

    const mpq_class& raw() const noexcept { return v_; }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_negative() const noexcept { return sgn(v_) < 0; }
    bool is_positive() const noexcept { return sgn(v_) > 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational reciprocal() const;

    /// v^k with integer k; k < 0 requires v != 0.
    Rational pow(long k) const;

    /// Largest n with 2^n <= v. Requires v > 0.
    long floor_log2() const;

    /// Serialized form, always with an explicit denominator: "p/q".
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Value in [0, +inf]; used for integration limits and suprema.
class Extended {
public:
    Extended(Rational v) : finite_(std::move(v)), infinite_(false) {}
    static Extended infinity() { return Extended(true); }

    bool is_infinite() const noexcept { return infinite_; }

    /// Requires a finite value.
    const Rational& finite() const;

    friend bool operator==(const Extended& a, const Extended& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
        return a.finite_ == b.finite_;
    }
    friend bool operator<(const Extended& a, const Extended& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.finite_ < b.finite_;
    }
    friend bool operator<=(const Extended& a, const Extended& b) { return a == b || a < b; }

private:
    explicit Extended(bool) : finite_(0), infinite_(true) {}

    Rational finite_;
    bool infinite_;
};

} // namespace rearr
