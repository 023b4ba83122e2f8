#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "bernsym/arith.hpp"

namespace bernsym {

// Exact rational scalar backed by GMP's mpq. Invariants (enforced on every
// construction path, preserved by every operation):
//   gcd(|num|, den) = 1,  den >= 1,  zero is 0/1.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(int n) : q_(static_cast<long>(n)) {}
    Rational(long n) : q_(n) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    // Accepts "p/q" or the integer shorthand "p" (optional leading sign,
    // decimal digits, no whitespace). Returns nullopt on anything else,
    // including a zero denominator.
    static std::optional<Rational> parse(std::string_view s);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // "p" when the denominator is 1, else "p/q" with q > 1.
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // q^e for any integer e; negative e inverts first (throws on zero).
    Rational pow(long e) const;

  private:
    mpq_class q_;  // always canonical
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// Customization points used by the generic polynomial / series templates.
inline bool is_zero_scalar(const Rational& q) { return q.is_zero(); }
inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
Rational invert_scalar(const Rational& q);

}  // namespace bernsym
