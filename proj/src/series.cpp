#include "bernsym/series.hpp"

namespace bernsym {

TruncSeries<Rational> exp_series(const Rational& c, unsigned N) {
    std::vector<Rational> v(N + 1, Rational(0));
    v[0] = Rational(1);
    for (unsigned k = 1; k <= N; ++k)
        v[k] = v[k - 1] * c / Rational(static_cast<long>(k));
    return TruncSeries<Rational>(std::move(v));
}

TruncSeries<Rational> expm1_over_t_series(const Rational& c, unsigned N) {
    std::vector<Rational> v(N + 1, Rational(0));
    Rational term = c;  // c^(k+1) / (k+1)!
    v[0] = term;
    for (unsigned k = 1; k <= N; ++k) {
        term = term * c / Rational(static_cast<long>(k) + 1);
        v[k] = term;
    }
    return TruncSeries<Rational>(std::move(v));
}

TruncSeries<Rational> bernoulli_gf_series(unsigned N) {
    std::vector<Rational> one(N + 1, Rational(0));
    one[0] = Rational(1);
    return TruncSeries<Rational>::div_unit(TruncSeries<Rational>(std::move(one)),
                                           expm1_over_t_series(Rational(1), N));
}

TruncSeries<CycloElem> embedded(const TruncSeries<Rational>& s,
                                const std::shared_ptr<const CycloField>& field) {
    std::vector<CycloElem> v;
    v.reserve(s.coeffs().size());
    for (const Rational& q : s.coeffs())
        v.push_back(CycloElem::from_rational(field, q));
    return TruncSeries<CycloElem>(std::move(v));
}

TruncSeries<CycloElem> exp_series_in(const std::shared_ptr<const CycloField>& field,
                                     const Rational& c, unsigned N) {
    return embedded(exp_series(c, N), field);
}

TruncSeries<CycloElem> weighted_exp_sum_series(const PeriodicMap& f, unsigned long w, unsigned N) {
    auto acc = TruncSeries<CycloElem>::zero_of(N, CycloElem::zero(f.field()));
    for (unsigned long i = 0; i < f.modulus(); ++i) {
        const CycloElem& fi = f.at(static_cast<long long>(i));
        if (fi.is_zero())
            continue;
        acc = acc + exp_series_in(f.field(), Rational(static_cast<long>(w * i)), N).scaled_by(fi);
    }
    return acc;
}

TruncSeries<CycloElem> gen_bernoulli_series(const PeriodicMap& f, unsigned N) {
    const Rational d(static_cast<long>(f.modulus()));
    return TruncSeries<CycloElem>::div_unit(weighted_exp_sum_series(f, 1, N),
                                            embedded(expm1_over_t_series(d, N), f.field()));
}

TruncSeries<CycloElem> gen_bernoulli_poly_series(const PeriodicMap& f, const Rational& x0,
                                                 unsigned N) {
    return gen_bernoulli_series(f, N) * exp_series_in(f.field(), x0, N);
}

TruncSeries<CycloElem> power_sum_series(const PeriodicMap& f, unsigned long w, unsigned N) {
    const long d = static_cast<long>(f.modulus());
    const auto num = embedded(expm1_over_t_series(Rational(d * static_cast<long>(w)), N),
                              f.field()) *
                     weighted_exp_sum_series(f, 1, N);
    return TruncSeries<CycloElem>::div_unit(num,
                                            embedded(expm1_over_t_series(Rational(d), N),
                                                     f.field()));
}

TruncSeries<CycloElem> symmetric_product_series(const PeriodicMap& f, unsigned long w1,
                                                unsigned long w2, const Rational& x0, unsigned N) {
    const long d = static_cast<long>(f.modulus());
    const long lw1 = static_cast<long>(w1), lw2 = static_cast<long>(w2);
    const auto& field = f.field();
    const auto num = embedded(expm1_over_t_series(Rational(d * lw1 * lw2), N), field) *
                     exp_series_in(field, Rational(lw1 * lw2) * x0, N) *
                     weighted_exp_sum_series(f, w1, N) * weighted_exp_sum_series(f, w2, N);
    const auto den = embedded(expm1_over_t_series(Rational(d * lw1), N), field) *
                     embedded(expm1_over_t_series(Rational(d * lw2), N), field);
    return TruncSeries<CycloElem>::div_unit(num, den);
}

}  // namespace bernsym
