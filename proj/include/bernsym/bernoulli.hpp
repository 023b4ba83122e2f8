#pragma once

#include <mutex>
#include <vector>

#include "bernsym/dirichlet.hpp"
#include "bernsym/polynomial.hpp"
#include "bernsym/rational.hpp"

namespace bernsym {

// Ordinary Bernoulli numbers in the B_1 = -1/2 convention (the generating
// function t/(e^t - 1)), via the defining recurrence
//   sum_{k=0}^{n} C(n+1, k) B_k = 0  (n >= 1),  B_0 = 1.
// Process-wide memo behind a mutex; values are immutable once computed.
Rational bernoulli_number(unsigned n);

// Ordinary Bernoulli polynomial B_n(x) = sum_l C(n,l) B_l x^(n-l).
UniPoly<Rational> bernoulli_poly(unsigned n);

// Bernoulli numbers and polynomials attached to a d-periodic coefficient
// map f (in particular to a Dirichlet character). Caches everything it
// computes; safe for concurrent use once constructed.
class GenBernoulli {
  public:
    explicit GenBernoulli(PeriodicMap map);
    GenBernoulli(const GenBernoulli&) = delete;
    GenBernoulli& operator=(const GenBernoulli&) = delete;

    const PeriodicMap& map() const { return map_; }

    // The n-th attached Bernoulli number via the corrected closed form
    //   B_{n,f} = d^(n-1) * sum_{i=0}^{d-1} f(i) B_n(i/d).
    CycloElem number(unsigned n) const;

    // The attached polynomial B_{n,f}(x) = sum_l C(n,l) B_{l,f} x^(n-l).
    UniPoly<CycloElem> poly(unsigned n) const;

    // B_{n,f}(x0) for rational x0 (Horner on the cached polynomial).
    CycloElem poly_at(unsigned n, const Rational& x0) const;

    // Precompute numbers and polynomials through degree n_max.
    void warm(unsigned n_max) const;

  private:
    PeriodicMap map_;
    mutable std::mutex mu_;
    mutable std::vector<CycloElem> numbers_;
    mutable std::vector<UniPoly<CycloElem>> polys_;
};

// One-shot conveniences over a fresh cache.
CycloElem gen_bernoulli_number(const PeriodicMap& f, unsigned n);
UniPoly<CycloElem> gen_bernoulli_poly(const PeriodicMap& f, unsigned n);
CycloElem gen_bernoulli_poly_at(const PeriodicMap& f, unsigned n, const Rational& x0);

// The closed form exactly as printed in its source: d^n * sum_i f(i) B_i(i/d),
// with the polynomial index tied to the summation variable. It is wrong for
// every nonprincipal character in general; it exists only as a falsification
// target for the verification suite, which reports it under "lemma1-printed".
CycloElem gen_bernoulli_number_printed_form(const PeriodicMap& f, unsigned n);

// Weighted power sum T_k(f, n) = sum_{l=0}^{n} f(l) l^k, with 0^0 = 1.
CycloElem power_sum(const PeriodicMap& f, unsigned k, unsigned long n);

}  // namespace bernsym
