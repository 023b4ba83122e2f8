#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "bernsym/bernoulli.hpp"
#include "bernsym/volkenborn.hpp"

using bernsym::PadicValuation;
using bernsym::Rational;

TEST_CASE("p-adic valuations") {
    CHECK(PadicValuation::of(Rational(12), 2) == PadicValuation::finite(2));
    CHECK(PadicValuation::of(Rational(3, 4), 2) == PadicValuation::finite(-2));
    CHECK(PadicValuation::of(Rational(9, 5), 3) == PadicValuation::finite(2));
    CHECK(PadicValuation::of(Rational(7), 3) == PadicValuation::finite(0));
    CHECK(PadicValuation::of(Rational(0), 5).infinite);
    CHECK(PadicValuation::of(Rational(0), 5) >= 1000000);
    CHECK(PadicValuation::finite(-2) >= -2);
    CHECK(!(PadicValuation::finite(-2) >= -1));
    CHECK(PadicValuation::infinity().str() == "inf");
    CHECK(PadicValuation::finite(-2).str() == "-2");
    CHECK_THROWS_AS(PadicValuation::of(Rational(1), 4), std::invalid_argument);
    CHECK_THROWS_AS(PadicValuation::of(Rational(1), 1), std::invalid_argument);
}

TEST_CASE("level sums in closed form") {
    CHECK(bernsym::riemann_sum(1, 2, 3) == Rational(7, 2));
    CHECK(bernsym::riemann_sum(2, 3, 2) == Rational(68, 3));
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
        for (unsigned N = 1; N <= 4; ++N)
            CHECK(bernsym::riemann_sum(0, p, N) == Rational(1));

    // The closed form equals the literal average (checked on small grids).
    for (unsigned n = 0; n <= 4; ++n)
        for (unsigned N = 1; N <= 3; ++N) {
            const unsigned long pn = 1ul << N;  // p = 2
            Rational literal;
            for (unsigned long x = 0; x < pn; ++x) {
                Rational power(1);
                for (unsigned e = 0; e < n; ++e)
                    power *= Rational(static_cast<long>(x));
                literal += power;
            }
            literal /= Rational(static_cast<long>(pn));
            CHECK(bernsym::riemann_sum(n, 2, N) == literal);
        }

    CHECK_THROWS_AS(bernsym::riemann_sum(1, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(bernsym::riemann_sum(1, 2, 0), std::invalid_argument);
}

TEST_CASE("convergence audit for x at p = 2") {
    const auto rows = bernsym::convergence_check(1, 2, 3);
    REQUIRE(rows.size() == 3);
    const auto& last = rows[2];
    CHECK(last.level == 3);
    CHECK(last.sum == Rational(7, 2));
    CHECK(last.error == Rational(4));
    CHECK(last.valuation == PadicValuation::finite(2));
    CHECK(last.bound == 1);  // 3 - v_2(2) - 1
    CHECK(last.identity_ok);
    CHECK(last.bound_ok);
}

TEST_CASE("constant functions integrate exactly") {
    for (const auto& row : bernsym::convergence_check(0, 5, 4)) {
        CHECK(row.error.is_zero());
        CHECK(row.valuation.infinite);
        CHECK(row.identity_ok);
        CHECK(row.bound_ok);
    }
}

TEST_CASE("error identity and valuation bound across the grid") {
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
        for (unsigned n = 0; n <= 8; ++n)
            for (const auto& row : bernsym::convergence_check(n, p, 6)) {
                CHECK(row.identity_ok);
                CHECK(row.bound_ok);
                // The error really is sum - B_n.
                CHECK(row.error ==
                      bernsym::riemann_sum(n, p, row.level) - bernsym::bernoulli_number(n));
            }
}

TEST_CASE("integral shift identity") {
    const auto r = bernsym::shift_identity_check(2, 3);
    CHECK(r.lhs == Rational(6));
    CHECK(r.rhs == Rational(6));
    CHECK(r.pass);

    const auto r2 = bernsym::shift_identity_check(3, 2);
    CHECK(r2.lhs == Rational(3));
    CHECK(r2.pass);

    // k = 0 and m = 0 edges: both sides vanish.
    CHECK(bernsym::shift_identity_check(0, 5).lhs.is_zero());
    CHECK(bernsym::shift_identity_check(0, 5).pass);
    CHECK(bernsym::shift_identity_check(4, 0).lhs.is_zero());
    CHECK(bernsym::shift_identity_check(4, 0).pass);

    for (unsigned k = 0; k <= 10; ++k)
        for (unsigned long m = 0; m <= 8; ++m)
            CHECK(bernsym::shift_identity_check(k, m).pass);
}
