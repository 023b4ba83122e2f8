#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bernsym/polynomial.hpp"
#include "bernsym/rational.hpp"

namespace bernsym {

// The m-th cyclotomic polynomial (integer coefficients, returned over Q).
UniPoly<Rational> cyclotomic_poly(unsigned long m);

// Immutable description of Q(zeta_m) in the power basis 1, z, ..., z^(phi-1)
// modulo the m-th cyclotomic polynomial. Shared by every element of the
// field via shared_ptr; there is no global registry, and two fields of equal
// order are interchangeable (compatibility is checked by order, not pointer).
class CycloField {
  public:
    static std::shared_ptr<const CycloField> make(unsigned long m);

    unsigned long order() const { return m_; }
    unsigned long degree() const { return phi_; }
    const UniPoly<Rational>& modulus() const { return modulus_; }

    // Reduction of z^(phi + r) into the power basis, for 0 <= r <= phi - 2
    // (products of two reduced elements reach degree 2*phi - 2).
    const std::vector<Rational>& reduction_row(std::size_t r) const { return rows_[r]; }

  private:
    explicit CycloField(unsigned long m);

    unsigned long m_;
    unsigned long phi_;
    UniPoly<Rational> modulus_;
    std::vector<std::vector<Rational>> rows_;
};

// One element of Q(zeta_m), stored as its phi(m) power-basis coordinates.
// All arithmetic reduces eagerly, so equal values have equal coordinates.
// Binary operations require equal field order and never coerce between
// orders; Rational scalars embed implicitly (they live in every field).
class CycloElem {
  public:
    // Zero of Q(zeta_1) = Q, so containers of elements are constructible.
    CycloElem();

    static CycloElem zero(std::shared_ptr<const CycloField> f);
    static CycloElem one(std::shared_ptr<const CycloField> f);
    static CycloElem from_rational(std::shared_ptr<const CycloField> f, const Rational& q);
    // zeta_m^k for any integer k (reduced mod m, then into the basis).
    static CycloElem root_power(std::shared_ptr<const CycloField> f, long long k);

    unsigned long order() const { return f_->order(); }
    const std::shared_ptr<const CycloField>& field() const { return f_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    // True iff the element lies in Q (all basis coordinates past 1 vanish).
    bool is_rational() const;
    // The value as a Rational; throws unless is_rational().
    Rational rational_value() const;

    CycloElem operator-() const;
    CycloElem& operator+=(const CycloElem& o);
    CycloElem& operator-=(const CycloElem& o);
    CycloElem& operator*=(const CycloElem& o);
    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
    friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }

    // Multiplicative inverse; throws std::domain_error on zero.
    CycloElem invert() const;
    friend CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.invert(); }

    // Rational scalars act coordinatewise.
    CycloElem& operator*=(const Rational& s);
    friend CycloElem operator*(CycloElem a, const Rational& s) { return a *= s; }
    friend CycloElem operator*(const Rational& s, CycloElem a) { return a *= s; }

    friend bool operator==(const CycloElem& a, const CycloElem& b) {
        return a.order() == b.order() && a.c_ == b.c_;
    }
    friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

    // Image under zeta_m -> zeta_M^(M/m); requires order() | M.
    CycloElem lifted(const std::shared_ptr<const CycloField>& bigger) const;

    // Compact form "m:[c0,c1,...]" with rationals in p/q notation.
    std::string str() const;

  private:
    CycloElem(std::shared_ptr<const CycloField> f, std::vector<Rational> c);

    std::shared_ptr<const CycloField> f_;
    std::vector<Rational> c_;  // size phi(m), index = basis power
};

// Customization points for the generic templates.
inline bool is_zero_scalar(const CycloElem& v) { return v.is_zero(); }
inline CycloElem zero_like(const CycloElem& v) { return CycloElem::zero(v.field()); }
inline CycloElem one_like(const CycloElem& v) { return CycloElem::one(v.field()); }
inline CycloElem invert_scalar(const CycloElem& v) { return v.invert(); }

}  // namespace bernsym
