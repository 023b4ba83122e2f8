#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bernsym/bernoulli.hpp"
#include "bernsym/dirichlet.hpp"
#include "bernsym/rational.hpp"

namespace bernsym {

// Every identity the verification machinery knows how to check. The wire
// ids (stable across output formats and the CLI) are:
//   lemma1          closed form for the attached Bernoulli numbers vs the
//                   generating-series oracle
//   lemma1-printed  the miscopied closed-form variant, kept as a known-bad
//                   falsification target (failures are expected)
//   eq13            difference formula: B_{k,f}(nd) - B_{k,f} = k T_{k-1}(f, nd-1)
//   thm2            two-weight power-sum symmetry, polynomial form
//   thm2-x0         its x = 0 corollary, via the attached numbers directly
//   thm3            two-weight multiplication symmetry, polynomial form
//   remark-x0       multiplication symmetry at x = 0, scalar route
//   remark-w2-1     multiplication symmetry with the second weight fixed to 1
//   series-cross    symmetric product series vs termwise sums, per degree
enum class IdentityKind {
    Lemma1,
    Lemma1Printed,
    Eq13,
    Thm2,
    Thm2AtZero,
    Thm3,
    RemarkAtZero,
    RemarkUnitW2,
    SeriesCross,
};

std::string_view identity_id(IdentityKind kind);
std::optional<IdentityKind> identity_from_id(std::string_view id);

// Expected-to-fail identities (currently exactly lemma1-printed) report
// their failures as confirmations, not errors.
bool identity_expected_to_hold(IdentityKind kind);

// How the free variable x is treated: full polynomial comparison, or
// evaluation at one rational point.
struct XMode {
    bool symbolic = true;
    Rational x0;  // meaningful only when !symbolic

    static XMode sym() { return {}; }
    static XMode at(Rational v) { return {false, std::move(v)}; }
    std::string str() const;  // "symbolic" or "x0=<rational>"
};

// One fully-bound check. char_index is the canonical character index for
// genuine characters and -(1+j) for the j-th fuzzed periodic map. For scalar
// identities the unused weight slots hold 0; eq13 carries its period
// multiple n in w1.
struct IdentityInstance {
    IdentityKind kind = IdentityKind::Lemma1;
    unsigned long modulus = 1;
    long char_index = 0;
    unsigned long w1 = 0;
    unsigned long w2 = 0;
    unsigned degree = 0;
    std::string mode = "scalar";
};

// Outcome of one check. lhs/rhs are coefficient vectors over the subject's
// cyclotomic field, index = power of x, padded to a common length (scalar
// identities use length 1); pass holds iff lhs - rhs vanishes identically,
// and discrepancy spells that difference out (empty when passing).
struct VerificationReport {
    IdentityInstance instance;
    std::vector<CycloElem> lhs;
    std::vector<CycloElem> rhs;
    bool pass = false;
    std::vector<CycloElem> discrepancy;
};

// ---- Single-identity verifiers ----
// Each takes the d-periodic subject map f plus the index to stamp into
// reports. They recompute everything they need; the suite below shares
// caches across a whole grid instead.

// Both lemma1 (corrected closed form vs series oracle) and lemma1-printed
// (known-bad variant vs the same oracle) for n = 0..n_max, in that order per
// degree.
std::vector<VerificationReport> verify_lemma1(const PeriodicMap& f, long char_index,
                                              unsigned n_max);

// B_{k,f}(nd) - B_{k,f} = k T_{k-1}(f, nd - 1), n >= 1, k >= 1.
VerificationReport verify_eq13(const PeriodicMap& f, long char_index, unsigned k,
                               unsigned long n);

// sum_i C(l,i) B_{i,f}(w2 x) T_{l-i}(f, d w1 - 1) w1^(i-1) w2^(l-i), checked
// equal with (w1, w2) swapped; polynomial in x (or a point evaluation).
VerificationReport verify_thm2(const PeriodicMap& f, long char_index, unsigned long w1,
                               unsigned long w2, unsigned ell, const XMode& mode);

// The same bilinear sum at x = 0 through the attached numbers directly
// (no polynomial machinery), as an independent corollary route.
VerificationReport verify_thm2_at_zero(const PeriodicMap& f, long char_index, unsigned long w1,
                                       unsigned long w2, unsigned ell);

// w1^(k-1) sum_{i<d w1} f(i) B_{k,f}(w2 x + (w2/w1) i), checked equal with
// (w1, w2) swapped; polynomial in x (or a point evaluation).
VerificationReport verify_thm3(const PeriodicMap& f, long char_index, unsigned long w1,
                               unsigned long w2, unsigned k, const XMode& mode);

// Multiplication symmetry at x = 0 via point evaluations only.
VerificationReport verify_remark_at_zero(const PeriodicMap& f, long char_index, unsigned long w1,
                                         unsigned long w2, unsigned k);

// Second weight fixed to 1: w1^(k-1) sum_{i<d w1} f(i) B_{k,f}(i/w1)
// against sum_{i<d} f(i) B_{k,f}(w1 i).
VerificationReport verify_remark_unit_w2(const PeriodicMap& f, long char_index, unsigned long w1,
                                         unsigned k);

// Degree-l EGF coefficient of the symmetric product series against the
// termwise bilinear sum at x0 — the series route and the closed-form route
// must agree exactly.
VerificationReport verify_series_cross(const PeriodicMap& f, long char_index, unsigned long w1,
                                       unsigned long w2, unsigned ell, const Rational& x0);

// ---- Grid suite ----

struct SuiteGrid {
    std::set<IdentityKind> kinds;      // empty = all kinds
    unsigned long d_max = 12;          // characters of every modulus 1..d_max
    unsigned long w_max = 4;           // all weight pairs in [1,w_max]^2
    unsigned degree_max = 8;           // polynomial degrees 0..degree_max
    unsigned n_max = 12;               // lemma1 depth
    unsigned long eq13_n_max = 3;      // period multiples for eq13
    std::vector<Rational> cross_points{Rational(0), Rational(1, 2)};  // series-cross x0 grid
    unsigned fuzz_count = 0;           // extra random periodic-map subjects
    unsigned long fuzz_d_max = 6;      // their maximal period
    std::uint64_t seed = 0;            // fuzz generator seed
    unsigned workers = 1;              // verification threads
};

struct SuiteResult {
    std::vector<VerificationReport> reports;
    std::size_t total = 0;              // all reports
    std::size_t expected_total = 0;     // reports for identities expected to hold
    std::size_t failed = 0;             // failures among those — must be 0
    std::size_t erratum_total = 0;      // known-bad-target reports
    std::size_t erratum_failures = 0;   // their failures — expected to be > 0
};

// Runs every instance of the requested kinds over every character of
// modulus 1..d_max (plus fuzzed maps when fuzz_count > 0), deterministically:
// the instance list and report order depend only on the grid, never on
// scheduling. workers > 1 splits the precomputed instance list across
// threads that write result slots by index.
SuiteResult run_suite(const SuiteGrid& grid);

// The seeded fuzz subjects: `count` maps, the j-th having period
// 1 + (draw mod d_max) and small-rational entries, reproducible from the
// seed alone.
std::vector<PeriodicMap> random_periodic_maps(unsigned count, unsigned long d_max,
                                              std::uint64_t seed);

}  // namespace bernsym
