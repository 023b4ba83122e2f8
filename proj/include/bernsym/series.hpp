#pragma once

#include <stdexcept>
#include <vector>

#include "bernsym/arith.hpp"
#include "bernsym/bernoulli.hpp"
#include "bernsym/cyclotomic.hpp"
#include "bernsym/dirichlet.hpp"
#include "bernsym/rational.hpp"

namespace bernsym {

// Power series in t truncated at a fixed order N, over an exact scalar ring
// T. Ordinary coefficients are stored (coefficient k multiplies t^k) and the
// vector always holds exactly N+1 entries, zeros included, so every series
// carries a sample of its ring. The exponential-generating-function view is
// egf_coeff(k) = k! * coeff(k).
template <class T>
class TruncSeries {
  public:
    explicit TruncSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty())
            throw std::invalid_argument("TruncSeries: need at least the constant term");
    }

    static TruncSeries zero_of(unsigned order, const T& ring_sample) {
        return TruncSeries(std::vector<T>(order + 1, zero_like(ring_sample)));
    }

    unsigned truncation_order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& coeff(unsigned k) const { return c_.at(k); }
    T egf_coeff(unsigned k) const { return c_.at(k) * Rational(factorial(k)); }

    TruncSeries operator-() const {
        TruncSeries r(*this);
        for (T& v : r.c_)
            v = -v;
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_order(b);
        TruncSeries r(a);
        for (std::size_t k = 0; k < r.c_.size(); ++k)
            r.c_[k] += b.c_[k];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_order(b);
        std::vector<T> c(a.c_.size(), zero_like(a.c_.front()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_scalar(a.c_[i]))
                continue;
            for (std::size_t j = 0; i + j < c.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return TruncSeries(std::move(c));
    }

    // Scalar action of the coefficient ring (and of Rational on cyclotomic
    // coefficient rings, via T * S -> T).
    template <class S>
    TruncSeries scaled_by(const S& s) const {
        TruncSeries r(*this);
        for (T& v : r.c_)
            v = v * s;
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    // num / den with den(0) a unit; throws std::domain_error otherwise.
    // Classic recurrence: q_k = (a_k - sum_{j<k} q_j b_{k-j}) * b_0^{-1}.
    static TruncSeries div_unit(const TruncSeries& num, const TruncSeries& den) {
        num.require_same_order(den);
        if (is_zero_scalar(den.c_.front()))
            throw std::domain_error("TruncSeries: denominator is not a unit (constant term 0)");
        const T inv0 = invert_scalar(den.c_.front());
        std::vector<T> q(num.c_.size(), zero_like(num.c_.front()));
        for (std::size_t k = 0; k < q.size(); ++k) {
            T acc = num.c_[k];
            for (std::size_t j = 0; j < k; ++j)
                acc -= q[j] * den.c_[k - j];
            q[k] = acc * inv0;
        }
        return TruncSeries(std::move(q));
    }

  private:
    void require_same_order(const TruncSeries& o) const {
        if (c_.size() != o.c_.size())
            throw std::invalid_argument("TruncSeries: mixed truncation orders");
    }

    std::vector<T> c_;
};

// ---- Builders over Q ----

// e^(c t) through order N.
TruncSeries<Rational> exp_series(const Rational& c, unsigned N);

// (e^(c t) - 1) / t through order N: coefficient k is c^(k+1)/(k+1)!.
// Dividing out t symbolically keeps every denominator a unit.
TruncSeries<Rational> expm1_over_t_series(const Rational& c, unsigned N);

// t / (e^t - 1): EGF of the ordinary Bernoulli numbers (B_1 = -1/2).
TruncSeries<Rational> bernoulli_gf_series(unsigned N);

// ---- Builders over Q(zeta) ----

// Coefficientwise embedding of a rational series into a cyclotomic field.
TruncSeries<CycloElem> embedded(const TruncSeries<Rational>& s,
                                const std::shared_ptr<const CycloField>& field);

// e^(c t) with coefficients embedded in the given field.
TruncSeries<CycloElem> exp_series_in(const std::shared_ptr<const CycloField>& field,
                                     const Rational& c, unsigned N);

// sum_{i=0}^{d-1} f(i) e^(w i t) for a d-periodic map f.
TruncSeries<CycloElem> weighted_exp_sum_series(const PeriodicMap& f, unsigned long w, unsigned N);

// EGF of the attached Bernoulli numbers:
//   sum_i f(i) e^(i t) / ((e^(d t) - 1)/t) ... the 1/t fold makes the
// denominator a unit, so this is exact in the truncated ring.
TruncSeries<CycloElem> gen_bernoulli_series(const PeriodicMap& f, unsigned N);

// EGF of the attached Bernoulli polynomials at x0: the series above times
// e^(x0 t).
TruncSeries<CycloElem> gen_bernoulli_poly_series(const PeriodicMap& f, const Rational& x0,
                                                 unsigned N);

// EGF whose k-th coefficient is the power sum T_k(f, d*w - 1):
//   ((e^(d w t) - 1)/t) * sum_i f(i) e^(i t) / ((e^(d t) - 1)/t).
TruncSeries<CycloElem> power_sum_series(const PeriodicMap& f, unsigned long w, unsigned N);

// The two-weight symmetric product series at rational offset x0:
//   ((e^(d w1 w2 t) - 1)/t) * e^(w1 w2 x0 t)
//     * (sum_a f(a) e^(w1 a t)) * (sum_b f(b) e^(w2 b t))
//     / ( ((e^(w1 d t) - 1)/t) * ((e^(w2 d t) - 1)/t) ).
// Symmetric in (w1, w2) by construction; its EGF coefficients tie the
// polynomial identities to an independent computation route.
TruncSeries<CycloElem> symmetric_product_series(const PeriodicMap& f, unsigned long w1,
                                                unsigned long w2, const Rational& x0, unsigned N);

}  // namespace bernsym
