#include "bernsym/volkenborn.hpp"

#include <stdexcept>

#include "bernsym/arith.hpp"
#include "bernsym/bernoulli.hpp"

namespace bernsym {

namespace {

void require_prime(unsigned long p) {
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

long long int_valuation(Integer n, unsigned long p) {
    // n != 0 on entry.
    long long v = 0;
    Integer q, r;
    const Integer P(static_cast<unsigned long>(p));
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), P.get_mpz_t());
        if (sgn(r) != 0)
            return v;
        ++v;
        n = q;
    }
}

}  // namespace

PadicValuation PadicValuation::of(const Rational& q, unsigned long p) {
    require_prime(p);
    if (q.is_zero())
        return infinity();
    return finite(int_valuation(q.num(), p) - int_valuation(q.den(), p));
}

std::string PadicValuation::str() const {
    return infinite ? "inf" : std::to_string(v);
}

Rational riemann_sum(unsigned n, unsigned long p, unsigned N) {
    require_prime(p);
    if (N == 0)
        throw std::invalid_argument("riemann_sum: level must be >= 1");
    // Faulhaber in Bernoulli-polynomial form:
    //   sum_{x=0}^{M-1} x^n = (B_{n+1}(M) - B_{n+1}) / (n+1),  M = p^N,
    // then divide by M for the normalized sum.
    Integer M = int_pow(p, N);
    const Rational MQ(M);
    const Rational diff = bernoulli_poly(n + 1).eval(MQ) - bernoulli_number(n + 1);
    return diff / Rational(static_cast<long>(n) + 1) / MQ;
}

std::vector<ConvergenceRow> convergence_check(unsigned n, unsigned long p, unsigned N_max) {
    require_prime(p);
    if (N_max == 0)
        throw std::invalid_argument("convergence_check: need at least one level");
    const Rational limit = bernoulli_number(n);
    const long long vp_n1 = int_valuation(Integer(static_cast<long>(n) + 1), p);

    std::vector<ConvergenceRow> rows;
    rows.reserve(N_max);
    for (unsigned N = 1; N <= N_max; ++N) {
        ConvergenceRow row;
        row.level = N;
        row.sum = riemann_sum(n, p, N);
        row.error = row.sum - limit;

        // Exact expansion of the error: expanding B_{n+1}(M)/( (n+1) M )
        // termwise around the leading B_n leaves
        //   err(N) = sum_{k=0}^{n-1} C(n+1,k) B_k / (n+1) * M^(n-k).
        const Rational MQ(int_pow(p, N));
        Rational expansion(0);
        for (unsigned k = 0; k < n; ++k)
            expansion += Rational(binomial(n + 1, k)) * bernoulli_number(k) /
                         Rational(static_cast<long>(n) + 1) * MQ.pow(static_cast<long>(n - k));
        row.identity_ok = (row.error == expansion);

        row.valuation = PadicValuation::of(row.error, p);
        row.bound = static_cast<long long>(N) - vp_n1 - 1;
        row.bound_ok = row.valuation >= row.bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

ShiftCheckRow shift_identity_check(unsigned k, unsigned long m) {
    ShiftCheckRow row;
    row.k = k;
    row.m = m;
    // integral of (x+m)^k = sum_j C(k,j) B_j m^(k-j), by linearity; the
    // unshifted integral of x^k is B_k.
    Rational lhs(0);
    for (unsigned j = 0; j <= k; ++j)
        lhs += Rational(binomial(k, j)) * bernoulli_number(j) *
               Rational(int_pow(m, k - j));
    lhs -= bernoulli_number(k);
    row.lhs = lhs;

    // Forward-difference side: sum over the shift range of the derivative,
    // k * i^(k-1), with the empty product 0^0 = 1 when k = 1 and a zero
    // derivative when k = 0.
    Rational rhs(0);
    if (k > 0)
        for (unsigned long i = 0; i < m; ++i)
            rhs += Rational(int_pow(i, k - 1));
    row.rhs = rhs * Rational(static_cast<long>(k));
    row.pass = (row.lhs == row.rhs);
    return row;
}

}  // namespace bernsym
