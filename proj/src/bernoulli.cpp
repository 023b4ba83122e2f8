#include "bernsym/bernoulli.hpp"

#include "bernsym/arith.hpp"

namespace bernsym {

namespace {

// Shared memo for the ordinary Bernoulli numbers. Guarded by a mutex so the
// parallel verification workers can fault values in safely.
class BernoulliTable {
  public:
    Rational get(unsigned n) {
        std::lock_guard<std::mutex> lock(mu_);
        while (values_.size() <= n) {
            const unsigned m = static_cast<unsigned>(values_.size());
            // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m = -(1/(m+1)) * rest
            Rational acc(0);
            for (unsigned k = 0; k < m; ++k)
                acc += Rational(binomial(m + 1, k)) * values_[k];
            values_.push_back(m == 0 ? Rational(1) : -acc / Rational(static_cast<long>(m) + 1));
        }
        return values_[n];
    }

  private:
    std::mutex mu_;
    std::vector<Rational> values_{};
};

BernoulliTable& bernoulli_table() {
    static BernoulliTable t;
    return t;
}

}  // namespace

Rational bernoulli_number(unsigned n) {
    return bernoulli_table().get(n);
}

UniPoly<Rational> bernoulli_poly(unsigned n) {
    // Coefficient of x^j is C(n, j) * B_{n-j}.
    std::vector<Rational> c(n + 1, Rational(0));
    for (unsigned j = 0; j <= n; ++j)
        c[j] = Rational(binomial(n, j)) * bernoulli_number(n - j);
    return UniPoly<Rational>(std::move(c));
}

GenBernoulli::GenBernoulli(PeriodicMap map) : map_(std::move(map)) {}

CycloElem GenBernoulli::number(unsigned n) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (numbers_.size() <= n) {
        const unsigned m = static_cast<unsigned>(numbers_.size());
        const unsigned long d = map_.modulus();
        const UniPoly<Rational> bm = bernoulli_poly(m);
        CycloElem acc = CycloElem::zero(map_.field());
        for (unsigned long i = 0; i < d; ++i) {
            const CycloElem& fi = map_.at(static_cast<long long>(i));
            if (fi.is_zero())
                continue;
            acc += fi * bm.eval(Rational(static_cast<long>(i), static_cast<long>(d)));
        }
        // d^(m-1), where m = 0 gives the 1/d factor exactly.
        numbers_.push_back(acc * Rational(static_cast<long>(d)).pow(static_cast<long>(m) - 1));
    }
    return numbers_[n];
}

UniPoly<CycloElem> GenBernoulli::poly(unsigned n) const {
    number(n);  // make sure the numbers through n exist
    std::lock_guard<std::mutex> lock(mu_);
    while (polys_.size() <= n) {
        const unsigned m = static_cast<unsigned>(polys_.size());
        // Coefficient of x^j is C(m, j) * B_{m-j, f}.
        std::vector<CycloElem> c;
        c.reserve(m + 1);
        for (unsigned j = 0; j <= m; ++j)
            c.push_back(numbers_[m - j] * Rational(binomial(m, j)));
        polys_.push_back(UniPoly<CycloElem>(std::move(c)));
    }
    return polys_[n];
}

CycloElem GenBernoulli::poly_at(unsigned n, const Rational& x0) const {
    return poly(n).eval_mixed(x0, CycloElem::zero(map_.field()));
}

void GenBernoulli::warm(unsigned n_max) const {
    poly(n_max);
}

CycloElem gen_bernoulli_number(const PeriodicMap& f, unsigned n) {
    return GenBernoulli(f).number(n);
}

UniPoly<CycloElem> gen_bernoulli_poly(const PeriodicMap& f, unsigned n) {
    return GenBernoulli(f).poly(n);
}

CycloElem gen_bernoulli_poly_at(const PeriodicMap& f, unsigned n, const Rational& x0) {
    return GenBernoulli(f).poly_at(n, x0);
}

CycloElem gen_bernoulli_number_printed_form(const PeriodicMap& f, unsigned n) {
    const unsigned long d = f.modulus();
    CycloElem acc = CycloElem::zero(f.field());
    for (unsigned long i = 0; i < d; ++i) {
        const CycloElem& fi = f.at(static_cast<long long>(i));
        if (fi.is_zero())
            continue;
        // Note the index: B_i evaluated at i/d, as printed.
        acc += fi * bernoulli_poly(static_cast<unsigned>(i))
                        .eval(Rational(static_cast<long>(i), static_cast<long>(d)));
    }
    return acc * Rational(static_cast<long>(d)).pow(static_cast<long>(n));
}

CycloElem power_sum(const PeriodicMap& f, unsigned k, unsigned long n) {
    CycloElem acc = CycloElem::zero(f.field());
    for (unsigned long l = 0; l <= n; ++l) {
        const CycloElem& fl = f.at(static_cast<long long>(l));
        if (fl.is_zero())
            continue;
        // 0^0 = 1 by the library-wide convention.
        acc += fl * Rational(int_pow(l, k));
    }
    return acc;
}

}  // namespace bernsym
