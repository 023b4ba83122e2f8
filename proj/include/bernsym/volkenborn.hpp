#pragma once

#include <vector>

#include "bernsym/rational.hpp"

namespace bernsym {

// p-adic valuation of a rational, with a dedicated +infinity for zero.
struct PadicValuation {
    bool infinite = false;
    long long v = 0;

    static PadicValuation infinity() { return {true, 0}; }
    static PadicValuation finite(long long v) { return {false, v}; }

    // v_p(q) = v_p(num) - v_p(den); throws std::invalid_argument unless p is
    // prime.
    static PadicValuation of(const Rational& q, unsigned long p);

    // Total order with infinity on top.
    bool operator>=(long long bound) const { return infinite || v >= bound; }
    friend bool operator==(const PadicValuation& a, const PadicValuation& b) {
        return a.infinite == b.infinite && (a.infinite || a.v == b.v);
    }

    std::string str() const;
};

// Level-N Riemann sum for the invariant integral of x^n over the p-adic
// integers: (1/p^N) * sum_{x=0}^{p^N - 1} x^n, evaluated in closed form as
//   (B_{n+1}(p^N) - B_{n+1}) / ((n+1) p^N)
// so no loop over p^N residues is ever taken. Throws unless p is prime.
Rational riemann_sum(unsigned n, unsigned long p, unsigned N);

// One level of the convergence table for integrating x^n at prime p.
struct ConvergenceRow {
    unsigned level;            // N
    Rational sum;              // riemann_sum(n, p, N)
    Rational error;            // sum - B_n (the integral's exact value)
    PadicValuation valuation;  // v_p(error)
    long long bound;           // N - v_p(n+1) - 1
    bool identity_ok;          // error equals the closed-form error sum
    bool bound_ok;             // valuation >= bound
};

// Exact convergence audit for levels 1..N_max: the error after level N is
//   err(N) = sum_{k=0}^{n-1} [ C(n+1, k) B_k / (n+1) ] * p^(N(n-k)),
// an identity checked literally, and its valuation is bounded below by
// N - v_p(n+1) - 1 (von Staudt-Clausen gives v_p(B_k) >= -1).
std::vector<ConvergenceRow> convergence_check(unsigned n, unsigned long p, unsigned N_max);

// The integral-shift identity specialized to f(x) = x^k at integer shift m:
//   integral of (x+m)^k  -  integral of x^k  =  k * sum_{i=0}^{m-1} i^(k-1),
// with both sides computed independently (lhs via binomial expansion over
// exact Bernoulli values, rhs as a literal sum).
struct ShiftCheckRow {
    unsigned k;
    unsigned long m;
    Rational lhs;
    Rational rhs;
    bool pass;
};

ShiftCheckRow shift_identity_check(unsigned k, unsigned long m);

}  // namespace bernsym
