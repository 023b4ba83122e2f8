#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "bernsym/cyclotomic.hpp"
#include "bernsym/dirichlet.hpp"
#include "bernsym/identities.hpp"

using bernsym::CycloElem;
using bernsym::CycloField;
using bernsym::IdentityKind;
using bernsym::PeriodicMap;
using bernsym::Rational;
using bernsym::SuiteGrid;
using bernsym::VerificationReport;
using bernsym::XMode;

namespace {

PeriodicMap chi4() {
    return bernsym::characters(4)[1].map();
}

// A deliberately non-multiplicative periodic map: the identities depend on
// periodicity alone, so they must hold here too.
PeriodicMap lumpy3() {
    const auto f = CycloField::make(1);
    return PeriodicMap(3, f,
                       {CycloElem::from_rational(f, Rational(1)),
                        CycloElem::from_rational(f, Rational(2)),
                        CycloElem::from_rational(f, Rational(-5, 3))});
}

bool reports_equal(const VerificationReport& a, const VerificationReport& b) {
    return a.instance.kind == b.instance.kind && a.instance.modulus == b.instance.modulus &&
           a.instance.char_index == b.instance.char_index && a.instance.w1 == b.instance.w1 &&
           a.instance.w2 == b.instance.w2 && a.instance.degree == b.instance.degree &&
           a.instance.mode == b.instance.mode && a.pass == b.pass && a.lhs == b.lhs &&
           a.rhs == b.rhs && a.discrepancy == b.discrepancy;
}

}  // namespace

TEST_CASE("identity ids round trip") {
    const std::vector<IdentityKind> kinds{
        IdentityKind::Lemma1,       IdentityKind::Lemma1Printed, IdentityKind::Eq13,
        IdentityKind::Thm2,         IdentityKind::Thm2AtZero,    IdentityKind::Thm3,
        IdentityKind::RemarkAtZero, IdentityKind::RemarkUnitW2,  IdentityKind::SeriesCross,
    };
    for (IdentityKind k : kinds) {
        const auto id = bernsym::identity_id(k);
        const auto back = bernsym::identity_from_id(id);
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK(bernsym::identity_id(IdentityKind::Lemma1) == "lemma1");
    CHECK(bernsym::identity_id(IdentityKind::Lemma1Printed) == "lemma1-printed");
    CHECK(bernsym::identity_id(IdentityKind::Eq13) == "eq13");
    CHECK(bernsym::identity_id(IdentityKind::Thm2) == "thm2");
    CHECK(bernsym::identity_id(IdentityKind::Thm2AtZero) == "thm2-x0");
    CHECK(bernsym::identity_id(IdentityKind::Thm3) == "thm3");
    CHECK(bernsym::identity_id(IdentityKind::RemarkAtZero) == "remark-x0");
    CHECK(bernsym::identity_id(IdentityKind::RemarkUnitW2) == "remark-w2-1");
    CHECK(bernsym::identity_id(IdentityKind::SeriesCross) == "series-cross");
    CHECK(!bernsym::identity_from_id("bogus").has_value());

    for (IdentityKind k : kinds)
        CHECK(bernsym::identity_expected_to_hold(k) == (k != IdentityKind::Lemma1Printed));
}

TEST_CASE("x modes") {
    CHECK(XMode::sym().str() == "symbolic");
    CHECK(XMode::at(Rational(1, 2)).str() == "x0=1/2");
    CHECK(XMode::at(Rational(-3)).str() == "x0=-3");
}

TEST_CASE("closed form versus series oracle, including the printed variant") {
    const auto reports = bernsym::verify_lemma1(chi4(), 1, 12);
    REQUIRE(reports.size() == 26);
    int printed_failures = 0;
    for (const auto& rep : reports) {
        if (rep.instance.kind == IdentityKind::Lemma1) {
            CHECK(rep.pass);
            CHECK(rep.discrepancy.empty());
        } else {
            REQUIRE(rep.instance.kind == IdentityKind::Lemma1Printed);
            if (!rep.pass)
                ++printed_failures;
            if (rep.instance.degree == 1) {
                CHECK(!rep.pass);
                REQUIRE(rep.discrepancy.size() == 1);
                CHECK(rep.discrepancy[0].rational_value() == Rational(-5, 16));
                CHECK(rep.lhs[0].rational_value() == Rational(-13, 16));
                CHECK(rep.rhs[0].rational_value() == Rational(-1, 2));
            }
            if (rep.instance.degree == 0) {
                // The miscopied inner sum is constant in n, so it already
                // misses at n = 0: -13/64 against the true 0.
                CHECK(!rep.pass);
                REQUIRE(rep.lhs.size() == 1);
                CHECK(rep.lhs[0].rational_value() == Rational(-13, 64));
                CHECK(rep.rhs[0].is_zero());
            }
        }
    }
    CHECK(printed_failures > 0);
}

TEST_CASE("difference formula") {
    const auto rep = bernsym::verify_eq13(chi4(), 1, 2, 1);
    CHECK(rep.pass);
    REQUIRE(rep.lhs.size() == 1);
    CHECK(rep.lhs[0].rational_value() == Rational(-4));
    CHECK(rep.rhs[0].rational_value() == Rational(-4));
    CHECK(rep.instance.degree == 2);
    CHECK(rep.instance.w1 == 1);

    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned long n = 1; n <= 3; ++n)
            CHECK(bernsym::verify_eq13(chi4(), 1, k, n).pass);

    CHECK_THROWS_AS(bernsym::verify_eq13(chi4(), 1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(bernsym::verify_eq13(chi4(), 1, 2, 0), std::invalid_argument);
}

TEST_CASE("power-sum symmetry holds for any periodic map") {
    const auto map = lumpy3();
    for (unsigned long w1 = 1; w1 <= 3; ++w1)
        for (unsigned long w2 = 1; w2 <= 3; ++w2)
            for (unsigned ell = 0; ell <= 5; ++ell) {
                CHECK(bernsym::verify_thm2(map, -1, w1, w2, ell, XMode::sym()).pass);
                CHECK(bernsym::verify_thm2(map, -1, w1, w2, ell, XMode::at(Rational(-3, 7)))
                          .pass);
                CHECK(bernsym::verify_thm2_at_zero(map, -1, w1, w2, ell).pass);
            }
}

TEST_CASE("multiplication symmetry holds for any periodic map") {
    const auto map = lumpy3();
    for (unsigned long w1 = 1; w1 <= 3; ++w1)
        for (unsigned long w2 = 1; w2 <= 3; ++w2)
            for (unsigned k = 0; k <= 5; ++k) {
                CHECK(bernsym::verify_thm3(map, -1, w1, w2, k, XMode::sym()).pass);
                CHECK(bernsym::verify_remark_at_zero(map, -1, w1, w2, k).pass);
            }
    for (unsigned long w1 = 1; w1 <= 4; ++w1)
        for (unsigned k = 0; k <= 5; ++k)
            CHECK(bernsym::verify_remark_unit_w2(map, -1, w1, k).pass);
}

TEST_CASE("unit second weight on the mod-4 character") {
    const auto rep = bernsym::verify_remark_unit_w2(chi4(), 1, 2, 1);
    CHECK(rep.pass);
    CHECK(rep.lhs[0].is_zero());
    CHECK(rep.rhs[0].is_zero());
    CHECK(rep.instance.w2 == 1);
}

TEST_CASE("series and closed-form routes cross-check") {
    for (unsigned long w1 = 1; w1 <= 3; ++w1)
        for (unsigned long w2 = 1; w2 <= 3; ++w2)
            for (unsigned ell = 0; ell <= 5; ++ell) {
                CHECK(bernsym::verify_series_cross(chi4(), 1, w1, w2, ell, Rational(0)).pass);
                CHECK(bernsym::verify_series_cross(chi4(), 1, w1, w2, ell, Rational(1, 2))
                          .pass);
                CHECK(bernsym::verify_series_cross(lumpy3(), -1, w1, w2, ell, Rational(2, 3))
                          .pass);
            }
}

TEST_CASE("suite over a small grid") {
    SuiteGrid grid;
    grid.kinds = {IdentityKind::Thm2, IdentityKind::Thm3};
    grid.d_max = 5;
    grid.w_max = 2;
    grid.degree_max = 4;
    grid.n_max = 0;
    const auto result = bernsym::run_suite(grid);
    // Subjects: phi(1)+...+phi(5) = 10 characters; per subject 2*2 weight
    // pairs, 5 degrees, 2 kinds.
    CHECK(result.total == 10 * 4 * 5 * 2);
    CHECK(result.expected_total == result.total);
    CHECK(result.failed == 0);
    CHECK(result.erratum_total == 0);
    for (const auto& rep : result.reports)
        CHECK(rep.pass);
}

TEST_CASE("suite covers the erratum") {
    SuiteGrid grid;
    grid.kinds = {IdentityKind::Lemma1, IdentityKind::Lemma1Printed};
    grid.d_max = 4;
    grid.n_max = 4;
    const auto result = bernsym::run_suite(grid);
    // 6 characters, 5 depths, 2 kinds.
    CHECK(result.total == 60);
    CHECK(result.erratum_total == 30);
    CHECK(result.failed == 0);
    CHECK(result.erratum_failures > 0);
}

TEST_CASE("fuzzed maps reproduce deterministically") {
    const auto a = bernsym::random_periodic_maps(6, 4, 42);
    const auto b = bernsym::random_periodic_maps(6, 4, 42);
    REQUIRE(a.size() == 6);
    for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(a[j].modulus() == b[j].modulus());
        CHECK(a[j].modulus() >= 1);
        CHECK(a[j].modulus() <= 4);
        CHECK(a[j].values() == b[j].values());
        for (const auto& v : a[j].values()) {
            CHECK(v.is_rational());
            CHECK(Rational(-3) <= v.rational_value());
            CHECK(v.rational_value() <= Rational(3));
        }
    }
    CHECK_THROWS_AS(bernsym::random_periodic_maps(2, 0, 1), std::invalid_argument);
}

TEST_CASE("fuzz-only suite passes and labels subjects negatively") {
    SuiteGrid grid;
    grid.kinds = {IdentityKind::Thm2AtZero, IdentityKind::RemarkAtZero};
    grid.d_max = 0;  // no character subjects
    grid.w_max = 2;
    grid.degree_max = 4;
    grid.n_max = 0;
    grid.fuzz_count = 8;
    grid.fuzz_d_max = 4;
    grid.seed = 99;
    const auto result = bernsym::run_suite(grid);
    CHECK(result.total == 8 * 4 * 5 * 2);
    CHECK(result.failed == 0);
    for (const auto& rep : result.reports) {
        CHECK(rep.pass);
        CHECK(rep.instance.char_index < 0);
    }
}

TEST_CASE("worker count never changes the reports") {
    SuiteGrid grid;
    grid.kinds = {IdentityKind::Thm2, IdentityKind::Thm3, IdentityKind::SeriesCross,
                  IdentityKind::RemarkUnitW2};
    grid.d_max = 4;
    grid.w_max = 2;
    grid.degree_max = 3;
    grid.n_max = 0;
    grid.fuzz_count = 3;
    grid.fuzz_d_max = 3;
    grid.seed = 7;

    grid.workers = 1;
    const auto serial = bernsym::run_suite(grid);
    grid.workers = 4;
    const auto parallel = bernsym::run_suite(grid);
    grid.workers = 7;
    const auto lopsided = bernsym::run_suite(grid);

    REQUIRE(serial.total == parallel.total);
    REQUIRE(serial.total == lopsided.total);
    CHECK(serial.failed == 0);
    for (std::size_t i = 0; i < serial.reports.size(); ++i) {
        CHECK(reports_equal(serial.reports[i], parallel.reports[i]));
        CHECK(reports_equal(serial.reports[i], lopsided.reports[i]));
    }
}

TEST_CASE("scalar identities report single-entry sides") {
    const auto rep = bernsym::verify_thm2_at_zero(chi4(), 1, 2, 3, 4);
    CHECK(rep.lhs.size() == 1);
    CHECK(rep.rhs.size() == 1);
    CHECK(rep.instance.mode == "scalar");
    CHECK(rep.pass);

    const auto sym = bernsym::verify_thm2(chi4(), 1, 2, 3, 4, XMode::sym());
    CHECK(sym.instance.mode == "symbolic");
    CHECK(sym.lhs.size() == sym.rhs.size());
    CHECK(sym.pass);
}
