#include "rearr/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace rearr {

Rational::Rational(long long n) : v_(0) {
    mpz_class z;
    bool neg = n < 0;
    unsigned long long mag = neg ? 0ULL - static_cast<unsigned long long>(n)
                                 : static_cast<unsigned long long>(n);
    // mpz_class has no long long constructor on LP64-agnostic paths; go via parts.
    z = static_cast<unsigned long>(mag >> 32);
    z <<= 32;
    z += static_cast<unsigned long>(mag & 0xffffffffULL);
    if (neg) z = -z;
    v_ = mpq_class(z);
}

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(std::move(q));
}

Rational Rational::pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(mpq_class(p)) : Rational(mpq_class(1, p));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(long k) const {
    if (k == 0) return Rational(1);
    if (k < 0) return reciprocal().pow(-k);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(mpq_class(n, d));
}

long Rational::floor_log2() const {
    if (!is_positive()) throw std::domain_error("floor_log2 of non-positive value");
    long n = static_cast<long>(mpz_sizeinbase(v_.get_num().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(v_.get_den().get_mpz_t(), 2));
    while (pow2(n) > *this) --n;
    while (pow2(n + 1) <= *this) ++n;
    return n;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const Rational& Extended::finite() const {
    if (infinite_) throw std::domain_error("extended value is infinite");
    return finite_;
}

} // namespace rearr
