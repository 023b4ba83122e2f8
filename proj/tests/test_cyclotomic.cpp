#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "bernsym/cyclotomic.hpp"
#include "bernsym/rational.hpp"

using bernsym::CycloElem;
using bernsym::CycloField;
using bernsym::Rational;
using Poly = bernsym::UniPoly<Rational>;

namespace {

Poly ipoly(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs)
        c.emplace_back(v);
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(bernsym::cyclotomic_poly(1) == ipoly({-1, 1}));
    CHECK(bernsym::cyclotomic_poly(2) == ipoly({1, 1}));
    CHECK(bernsym::cyclotomic_poly(3) == ipoly({1, 1, 1}));
    CHECK(bernsym::cyclotomic_poly(4) == ipoly({1, 0, 1}));
    CHECK(bernsym::cyclotomic_poly(5) == ipoly({1, 1, 1, 1, 1}));
    CHECK(bernsym::cyclotomic_poly(6) == ipoly({1, -1, 1}));
    CHECK(bernsym::cyclotomic_poly(8) == ipoly({1, 0, 0, 0, 1}));
    CHECK(bernsym::cyclotomic_poly(9) == ipoly({1, 0, 0, 1, 0, 0, 1}));
    CHECK(bernsym::cyclotomic_poly(12) == ipoly({1, 0, -1, 0, 1}));
}

TEST_CASE("field descriptors") {
    CHECK(CycloField::make(1)->degree() == 1);
    CHECK(CycloField::make(2)->degree() == 1);
    CHECK(CycloField::make(8)->degree() == 4);
    CHECK(CycloField::make(12)->degree() == 4);
    CHECK(CycloField::make(12)->order() == 12);
}

TEST_CASE("root powers and degenerate orders") {
    const auto f1 = CycloField::make(1);
    const auto f2 = CycloField::make(2);
    const auto f4 = CycloField::make(4);

    CHECK(CycloElem::root_power(f1, 1).is_one());
    CHECK(CycloElem::root_power(f2, 1).rational_value() == Rational(-1));
    CHECK(CycloElem::root_power(f4, 2).rational_value() == Rational(-1));
    CHECK(CycloElem::root_power(f4, 4).is_one());
    CHECK(CycloElem::root_power(f4, -1) == CycloElem::root_power(f4, 3));
    CHECK(CycloElem::root_power(f4, 1).str() == "4:[0,1]");
    CHECK(CycloElem::from_rational(f1, Rational(5)).str() == "1:[5]");
}

TEST_CASE("reduction into the power basis") {
    const auto f3 = CycloField::make(3);
    const CycloElem z = CycloElem::root_power(f3, 1);
    // z^2 = -1 - z modulo 1 + x + x^2.
    const CycloElem z2 = z * z;
    CHECK(z2.coeffs() == std::vector<Rational>{Rational(-1), Rational(-1)});
    // 1 + z + z^2 = 0.
    CHECK((CycloElem::one(f3) + z + z2).is_zero());

    const auto f5 = CycloField::make(5);
    CycloElem sum = CycloElem::zero(f5);
    for (long k = 1; k <= 4; ++k)
        sum += CycloElem::root_power(f5, k);
    CHECK(sum.is_rational());
    CHECK(sum.rational_value() == Rational(-1));
}

TEST_CASE("ring and field operations") {
    const auto f8 = CycloField::make(8);
    const CycloElem z = CycloElem::root_power(f8, 1);
    CHECK(z * CycloElem::root_power(f8, 3) == CycloElem::from_rational(f8, Rational(-1)));

    const auto f4 = CycloField::make(4);
    const CycloElem i = CycloElem::root_power(f4, 1);
    const CycloElem one = CycloElem::one(f4);
    CHECK((one + i) * (one - i) == CycloElem::from_rational(f4, Rational(2)));

    // Scalar action.
    CHECK((i * Rational(3)).coeffs() == std::vector<Rational>{Rational(0), Rational(3)});
    CHECK((Rational(0) * i).is_zero());
}

TEST_CASE("inversion and division") {
    const auto f3 = CycloField::make(3);
    const CycloElem z = CycloElem::root_power(f3, 1);
    const CycloElem a = CycloElem::one(f3) + z;
    CHECK((a.invert() * a).is_one());
    CHECK(a.invert() == -z);  // (1+z)(-z) = -z - z^2 = 1

    const auto f12 = CycloField::make(12);
    for (long k = 1; k < 12; ++k) {
        const CycloElem zk = CycloElem::root_power(f12, k);
        CHECK(zk.invert() == CycloElem::root_power(f12, 12 - k));
    }

    const auto f4 = CycloField::make(4);
    const CycloElem i = CycloElem::root_power(f4, 1);
    CHECK(CycloElem::from_rational(f4, Rational(2)) / i ==
          i * Rational(-2));  // 2/i = -2i

    CHECK_THROWS_AS(CycloElem::zero(f4).invert(), std::domain_error);

    // Rational elements of a bigger field invert through the same path.
    const CycloElem half = CycloElem::from_rational(f12, Rational(1, 2));
    CHECK(half.invert() == CycloElem::from_rational(f12, Rational(2)));
}

TEST_CASE("order lifting") {
    const auto f3 = CycloField::make(3);
    const auto f12 = CycloField::make(12);
    const CycloElem z3 = CycloElem::root_power(f3, 1);
    CHECK(z3.lifted(f12) == CycloElem::root_power(f12, 4));

    const auto f2 = CycloField::make(2);
    const auto f6 = CycloField::make(6);
    CHECK(CycloElem::root_power(f2, 1).lifted(f6) == CycloElem::root_power(f6, 3));

    // Lifting respects arithmetic: (1+z3)^2 lifts to (1+z12^4)^2.
    const CycloElem a = CycloElem::one(f3) + z3;
    CHECK((a * a).lifted(f12) == a.lifted(f12) * a.lifted(f12));

    CHECK_THROWS_AS(z3.lifted(CycloField::make(4)), std::invalid_argument);
}

TEST_CASE("mixed orders are rejected") {
    const CycloElem z3 = CycloElem::root_power(CycloField::make(3), 1);
    const CycloElem i = CycloElem::root_power(CycloField::make(4), 1);
    CHECK_THROWS_AS(z3 + i, std::invalid_argument);
    CHECK_THROWS_AS(z3 * i, std::invalid_argument);
}

TEST_CASE("fields of equal order are interchangeable") {
    const CycloElem a = CycloElem::root_power(CycloField::make(6), 1);
    const CycloElem b = CycloElem::root_power(CycloField::make(6), 1);
    CHECK(a == b);
    CHECK((a - b).is_zero());
}

TEST_CASE("rationality predicate") {
    const auto f6 = CycloField::make(6);
    CHECK(CycloElem::root_power(f6, 3).is_rational());  // = -1
    CHECK(CycloElem::root_power(f6, 3).rational_value() == Rational(-1));
    CHECK(!CycloElem::root_power(f6, 1).is_rational());
    CHECK_THROWS_AS(CycloElem::root_power(f6, 1).rational_value(), std::domain_error);
    CHECK(CycloElem().is_zero());  // default element is 0 in Q(zeta_1)
    CHECK(CycloElem().order() == 1);
}
