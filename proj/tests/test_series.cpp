#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "bernsym/bernoulli.hpp"
#include "bernsym/dirichlet.hpp"
#include "bernsym/series.hpp"

using bernsym::CycloElem;
using bernsym::CycloField;
using bernsym::PeriodicMap;
using bernsym::Rational;
using bernsym::TruncSeries;

namespace {

PeriodicMap chi4() {
    return bernsym::characters(4)[1].map();
}

PeriodicMap trivial() {
    return bernsym::characters(1)[0].map();
}

}  // namespace

TEST_CASE("exponential builders") {
    const auto e2 = bernsym::exp_series(Rational(2), 5);
    CHECK(e2.truncation_order() == 5);
    CHECK(e2.coeff(0) == Rational(1));
    CHECK(e2.coeff(3) == Rational(4, 3));  // 8/3!
    CHECK(e2.egf_coeff(3) == Rational(8));
    CHECK(e2.egf_coeff(5) == Rational(32));

    const auto u3 = bernsym::expm1_over_t_series(Rational(3), 4);
    CHECK(u3.coeff(0) == Rational(3));
    CHECK(u3.coeff(2) == Rational(9, 2));  // 27/3!
}

TEST_CASE("series ring arithmetic") {
    const auto a = bernsym::exp_series(Rational(2), 8);
    const auto b = bernsym::exp_series(Rational(3), 8);
    CHECK(a * b == bernsym::exp_series(Rational(5), 8));
    CHECK(TruncSeries<Rational>::div_unit(bernsym::exp_series(Rational(5), 8), b) == a);
    CHECK(a - a == TruncSeries<Rational>::zero_of(8, Rational(0)));
    CHECK((a + (-a)).coeff(4) == Rational(0));

    CHECK_THROWS_AS(a + bernsym::exp_series(Rational(2), 7), std::invalid_argument);
    CHECK_THROWS_AS(TruncSeries<Rational>(std::vector<Rational>{}), std::invalid_argument);

    // Same truncation order as `a`, but vanishing constant term.
    std::vector<Rational> tail(9, Rational(0));
    tail[1] = Rational(1);
    const TruncSeries<Rational> no_unit(tail);
    CHECK_THROWS_AS(TruncSeries<Rational>::div_unit(a, no_unit), std::domain_error);
}

TEST_CASE("Bernoulli generating function") {
    const auto gf = bernsym::bernoulli_gf_series(14);
    for (unsigned n = 0; n <= 14; ++n)
        CHECK(gf.egf_coeff(n) == bernsym::bernoulli_number(n));
    // Defining property: gf * (e^t - 1)/t == 1.
    const auto unit = bernsym::expm1_over_t_series(Rational(1), 14);
    auto prod = gf * unit;
    CHECK(prod.coeff(0) == Rational(1));
    for (unsigned n = 1; n <= 14; ++n)
        CHECK(prod.coeff(n) == Rational(0));
}

TEST_CASE("embedding into a cyclotomic field") {
    const auto field = CycloField::make(4);
    const auto e = bernsym::embedded(bernsym::exp_series(Rational(1), 4), field);
    CHECK(e.coeff(0) == CycloElem::one(field));
    CHECK(e.coeff(2) == CycloElem::from_rational(field, Rational(1, 2)));
    CHECK(bernsym::exp_series_in(field, Rational(1), 4) == e);
}

TEST_CASE("weighted exponential sums") {
    // For the nonprincipal character mod 4: chi(1) e^(wt) + chi(3) e^(3wt).
    const auto s = bernsym::weighted_exp_sum_series(chi4(), 1, 5);
    CHECK(s.egf_coeff(0).is_zero());                              // 1 - 1
    CHECK(s.egf_coeff(1).rational_value() == Rational(-2));      // 1 - 3
    CHECK(s.egf_coeff(2).rational_value() == Rational(-8));      // 1 - 9
    const auto s2 = bernsym::weighted_exp_sum_series(chi4(), 2, 5);
    CHECK(s2.egf_coeff(1).rational_value() == Rational(-4));     // 2 - 6
}

TEST_CASE("attached Bernoulli series is the closed form's oracle") {
    const auto s = bernsym::gen_bernoulli_series(chi4(), 8);
    bernsym::GenBernoulli gb(chi4());
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(s.egf_coeff(n) == gb.number(n));
    CHECK(s.egf_coeff(1).rational_value() == Rational(-1, 2));
    CHECK(s.egf_coeff(3).rational_value() == Rational(3, 2));

    // Trivial map: the ordinary numbers.
    const auto t = bernsym::gen_bernoulli_series(trivial(), 10);
    for (unsigned n = 0; n <= 10; ++n)
        CHECK(t.egf_coeff(n).rational_value() == bernsym::bernoulli_number(n));
}

TEST_CASE("polynomial series shifts by an exponential factor") {
    // Trivial map at x0 = 1/2: EGF coefficients are B_n(1/2).
    const auto s = bernsym::gen_bernoulli_poly_series(trivial(), Rational(1, 2), 8);
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(s.egf_coeff(n).rational_value() ==
              bernsym::bernoulli_poly(n).eval(Rational(1, 2)));
    CHECK(s.egf_coeff(2).rational_value() == Rational(-1, 12));

    // At x0 = 0 it degenerates to the plain series.
    CHECK(bernsym::gen_bernoulli_poly_series(chi4(), Rational(0), 6) ==
          bernsym::gen_bernoulli_series(chi4(), 6));
}

TEST_CASE("power-sum series matches the literal sums") {
    for (unsigned long w = 1; w <= 3; ++w) {
        const auto s = bernsym::power_sum_series(chi4(), w, 6);
        for (unsigned k = 0; k <= 6; ++k)
            CHECK(s.egf_coeff(k) == bernsym::power_sum(chi4(), k, 4 * w - 1));
    }
    CHECK(bernsym::power_sum_series(chi4(), 2, 6).egf_coeff(2).rational_value() ==
          Rational(-32));
}

TEST_CASE("symmetric product series") {
    // Trivial map, unit weights, x0 = 0: t/(e^t - 1), i.e. the ordinary
    // Bernoulli EGF.
    const auto s = bernsym::symmetric_product_series(trivial(), 1, 1, Rational(0), 8);
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(s.egf_coeff(n).rational_value() == bernsym::bernoulli_number(n));

    // Symmetry in the two weights, by construction and numerically.
    const auto a = bernsym::symmetric_product_series(chi4(), 2, 3, Rational(1, 2), 6);
    const auto b = bernsym::symmetric_product_series(chi4(), 3, 2, Rational(1, 2), 6);
    CHECK(a == b);
}
