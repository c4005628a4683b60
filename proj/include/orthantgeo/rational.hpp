#pragma once

// Exact arbitrary-precision rational number, the only scalar type allowed in
// geometric certificates.  Thin value wrapper around GMP's mpq_class that
// keeps every value canonical (lowest terms, positive denominator) and pins
// the "p/q" wire format used by all JSON payloads.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace og {

class Rational {
   public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(int n) : v_(static_cast<long>(n)) {}  // NOLINT
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Parses "p/q" or a bare integer "p".  Throws std::invalid_argument on
    // malformed input or zero denominator.
    static Rational from_string(const std::string& s);

    // Canonical serialization, always with an explicit denominator: "0/1", "-3/2".
    std::string str() const;

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    // Lossy conversion for presentation-only code (SVG plotting).  Never used
    // in a certificate path.
    double to_double() const { return v_.get_d(); }

   private:
    mpq_class v_;
};

using RatVec = std::vector<Rational>;

Rational dot(const RatVec& a, const RatVec& b);

}  // namespace og
