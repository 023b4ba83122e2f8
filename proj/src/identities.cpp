#include "bernsym/identities.hpp"

#include <atomic>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <thread>

#include "bernsym/arith.hpp"
#include "bernsym/polynomial.hpp"
#include "bernsym/series.hpp"

namespace bernsym {

std::string_view identity_id(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::Lemma1: return "lemma1";
        case IdentityKind::Lemma1Printed: return "lemma1-printed";
        case IdentityKind::Eq13: return "eq13";
        case IdentityKind::Thm2: return "thm2";
        case IdentityKind::Thm2AtZero: return "thm2-x0";
        case IdentityKind::Thm3: return "thm3";
        case IdentityKind::RemarkAtZero: return "remark-x0";
        case IdentityKind::RemarkUnitW2: return "remark-w2-1";
        case IdentityKind::SeriesCross: return "series-cross";
    }
    throw std::logic_error("identity_id: unknown kind");
}

std::optional<IdentityKind> identity_from_id(std::string_view id) {
    for (IdentityKind k :
         {IdentityKind::Lemma1, IdentityKind::Lemma1Printed, IdentityKind::Eq13,
          IdentityKind::Thm2, IdentityKind::Thm2AtZero, IdentityKind::Thm3,
          IdentityKind::RemarkAtZero, IdentityKind::RemarkUnitW2, IdentityKind::SeriesCross})
        if (identity_id(k) == id)
            return k;
    return std::nullopt;
}

bool identity_expected_to_hold(IdentityKind kind) {
    return kind != IdentityKind::Lemma1Printed;
}

std::string XMode::str() const {
    return symbolic ? "symbolic" : "x0=" + x0.str();
}

namespace {

// Shared per-subject state for a grid run: the subject map, its Bernoulli
// cache, and memoized power sums / series keyed by their parameters. warm()
// precomputes everything a grid will touch so that the verification phase
// can read concurrently without taking locks beyond GenBernoulli's.
struct Subject {
    PeriodicMap map;
    long index;
    GenBernoulli gb;
    std::map<std::pair<unsigned long, unsigned>, CycloElem> sums;  // (w, k) -> T_k(f, dw-1)
    std::map<std::pair<unsigned long, unsigned long>, std::map<std::string, TruncSeries<CycloElem>>>
        cross_series;  // (w1, w2) -> x0 -> symmetric product series

    Subject(PeriodicMap m, long idx) : map(std::move(m)), index(idx), gb(map) {}

    const CycloElem& sum(unsigned long w, unsigned k) const {
        auto it = sums.find({w, k});
        if (it != sums.end())
            return it->second;
        throw std::logic_error("Subject: power sum not warmed");
    }
};

CycloElem subject_power_sum(const PeriodicMap& f, unsigned long w, unsigned k) {
    return power_sum(f, k, f.modulus() * w - 1);
}

// Pads both sides to a common coefficient length over the subject's field.
VerificationReport make_report(IdentityInstance inst, const PeriodicMap& f,
                               std::vector<CycloElem> lhs, std::vector<CycloElem> rhs) {
    const CycloElem zero = CycloElem::zero(f.field());
    const std::size_t len = std::max(lhs.size(), rhs.size());
    lhs.resize(len, zero);
    rhs.resize(len, zero);
    VerificationReport rep;
    rep.instance = std::move(inst);
    rep.pass = true;
    for (std::size_t i = 0; i < len; ++i)
        if (lhs[i] != rhs[i])
            rep.pass = false;
    if (!rep.pass) {
        rep.discrepancy.reserve(len);
        for (std::size_t i = 0; i < len; ++i)
            rep.discrepancy.push_back(lhs[i] - rhs[i]);
    }
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    return rep;
}

VerificationReport make_scalar_report(IdentityInstance inst, const PeriodicMap& f, CycloElem lhs,
                                      CycloElem rhs) {
    return make_report(std::move(inst), f, {std::move(lhs)}, {std::move(rhs)});
}

std::vector<CycloElem> poly_coeffs(const UniPoly<CycloElem>& p) {
    return p.coeffs();
}

// ---- Bilinear power-sum symmetry (thm2) ----
// One side, as a polynomial in x:
//   sum_{i=0}^{l} C(l,i) wa^(i-1) wb^(l-i) T_{l-i}(f, d wa - 1) B_{i,f}(wb x).
// The wa^(i-1) factor at i = 0 is the honest rational 1/wa.
UniPoly<CycloElem> thm2_side(const Subject& s, unsigned long wa, unsigned long wb, unsigned ell) {
    const Rational qwa(static_cast<long>(wa)), qwb(static_cast<long>(wb));
    UniPoly<CycloElem> acc;
    for (unsigned i = 0; i <= ell; ++i) {
        const Rational scalar = Rational(binomial(ell, i)) * qwa.pow(static_cast<long>(i) - 1) *
                                qwb.pow(static_cast<long>(ell - i));
        const CycloElem weight = s.sum(wa, ell - i) * scalar;
        if (weight.is_zero())
            continue;
        acc += scaled(scale_arg(s.gb.poly(i), qwb), weight);
    }
    return acc;
}

// The same side evaluated at one rational point, through the scalar
// evaluation route rather than polynomial algebra.
CycloElem thm2_side_at(const Subject& s, unsigned long wa, unsigned long wb, unsigned ell,
                       const Rational& x0) {
    const Rational qwa(static_cast<long>(wa)), qwb(static_cast<long>(wb));
    CycloElem acc = CycloElem::zero(s.map.field());
    for (unsigned i = 0; i <= ell; ++i) {
        const Rational scalar = Rational(binomial(ell, i)) * qwa.pow(static_cast<long>(i) - 1) *
                                qwb.pow(static_cast<long>(ell - i));
        acc += s.sum(wa, ell - i) * s.gb.poly_at(i, qwb * x0) * scalar;
    }
    return acc;
}

// ---- The same bilinear sum at x = 0 through the attached numbers only ----
CycloElem thm2_zero_side(const Subject& s, unsigned long wa, unsigned long wb, unsigned ell) {
    const Rational qwa(static_cast<long>(wa)), qwb(static_cast<long>(wb));
    CycloElem acc = CycloElem::zero(s.map.field());
    for (unsigned i = 0; i <= ell; ++i) {
        const Rational scalar = Rational(binomial(ell, i)) * qwa.pow(static_cast<long>(i) - 1) *
                                qwb.pow(static_cast<long>(ell - i));
        acc += s.sum(wa, ell - i) * s.gb.number(i) * scalar;
    }
    return acc;
}

// ---- Multiplication symmetry (thm3) ----
// One side, as a polynomial in x:
//   wa^(k-1) sum_{i=0}^{d wa - 1} f(i) B_{k,f}(wb x + (wb/wa) i).
// Composition is grouped by the (periodic) value of f to spend the
// cyclotomic multiplications once per distinct value, not once per i.
UniPoly<CycloElem> thm3_side(const Subject& s, unsigned long wa, unsigned long wb, unsigned k) {
    const unsigned long d = s.map.modulus();
    const Rational qwb(static_cast<long>(wb));
    const UniPoly<CycloElem> base = s.gb.poly(k);
    // Group indices by residue: f(i) = f(i mod d), but the inner shift
    // (wb/wa) i still depends on i itself.
    UniPoly<CycloElem> acc;
    for (unsigned long r = 0; r < d; ++r) {
        const CycloElem& fr = s.map.at(static_cast<long long>(r));
        if (fr.is_zero())
            continue;
        UniPoly<CycloElem> bucket;
        for (unsigned long i = r; i < d * wa; i += d)
            bucket += compose_affine(base, qwb,
                                     Rational(static_cast<long>(wb * i), static_cast<long>(wa)));
        acc += scaled(bucket, fr);
    }
    return scaled(acc, Rational(static_cast<long>(wa)).pow(static_cast<long>(k) - 1));
}

CycloElem thm3_side_at(const Subject& s, unsigned long wa, unsigned long wb, unsigned k,
                       const Rational& x0) {
    const unsigned long d = s.map.modulus();
    const Rational qwb(static_cast<long>(wb));
    CycloElem acc = CycloElem::zero(s.map.field());
    for (unsigned long i = 0; i < d * wa; ++i) {
        const CycloElem& fi = s.map.at(static_cast<long long>(i));
        if (fi.is_zero())
            continue;
        acc += fi * s.gb.poly_at(k, qwb * x0 + Rational(static_cast<long>(wb * i),
                                                        static_cast<long>(wa)));
    }
    return acc * Rational(static_cast<long>(wa)).pow(static_cast<long>(k) - 1);
}

IdentityInstance instance_for(const Subject& s, IdentityKind kind, unsigned long w1,
                              unsigned long w2, unsigned degree, std::string mode) {
    IdentityInstance inst;
    inst.kind = kind;
    inst.modulus = s.map.modulus();
    inst.char_index = s.index;
    inst.w1 = w1;
    inst.w2 = w2;
    inst.degree = degree;
    inst.mode = std::move(mode);
    return inst;
}

// ---- Single-instance dispatch against a warmed subject ----

VerificationReport check_lemma1(const Subject& s, unsigned n, const TruncSeries<CycloElem>& oracle,
                                bool printed) {
    const CycloElem reference = oracle.egf_coeff(n);
    const CycloElem value = printed ? gen_bernoulli_number_printed_form(s.map, n)
                                    : s.gb.number(n);
    return make_scalar_report(
        instance_for(s, printed ? IdentityKind::Lemma1Printed : IdentityKind::Lemma1, 0, 0, n,
                     "scalar"),
        s.map, value, reference);
}

VerificationReport check_eq13(const Subject& s, unsigned k, unsigned long n) {
    const unsigned long d = s.map.modulus();
    const CycloElem lhs =
        s.gb.poly_at(k, Rational(static_cast<long>(n * d))) - s.gb.number(k);
    const CycloElem rhs =
        power_sum(s.map, k - 1, n * d - 1) * Rational(static_cast<long>(k));
    IdentityInstance inst = instance_for(s, IdentityKind::Eq13, n, 0, k, "scalar");
    return make_scalar_report(std::move(inst), s.map, lhs, rhs);
}

VerificationReport check_thm2(const Subject& s, unsigned long w1, unsigned long w2, unsigned ell,
                              const XMode& mode) {
    IdentityInstance inst = instance_for(s, IdentityKind::Thm2, w1, w2, ell, mode.str());
    if (mode.symbolic)
        return make_report(std::move(inst), s.map, poly_coeffs(thm2_side(s, w1, w2, ell)),
                           poly_coeffs(thm2_side(s, w2, w1, ell)));
    return make_scalar_report(std::move(inst), s.map, thm2_side_at(s, w1, w2, ell, mode.x0),
                              thm2_side_at(s, w2, w1, ell, mode.x0));
}

VerificationReport check_thm2_at_zero(const Subject& s, unsigned long w1, unsigned long w2,
                                      unsigned ell) {
    IdentityInstance inst = instance_for(s, IdentityKind::Thm2AtZero, w1, w2, ell, "scalar");
    return make_scalar_report(std::move(inst), s.map, thm2_zero_side(s, w1, w2, ell),
                              thm2_zero_side(s, w2, w1, ell));
}

VerificationReport check_thm3(const Subject& s, unsigned long w1, unsigned long w2, unsigned k,
                              const XMode& mode) {
    IdentityInstance inst = instance_for(s, IdentityKind::Thm3, w1, w2, k, mode.str());
    if (mode.symbolic)
        return make_report(std::move(inst), s.map, poly_coeffs(thm3_side(s, w1, w2, k)),
                           poly_coeffs(thm3_side(s, w2, w1, k)));
    return make_scalar_report(std::move(inst), s.map, thm3_side_at(s, w1, w2, k, mode.x0),
                              thm3_side_at(s, w2, w1, k, mode.x0));
}

VerificationReport check_remark_at_zero(const Subject& s, unsigned long w1, unsigned long w2,
                                        unsigned k) {
    IdentityInstance inst = instance_for(s, IdentityKind::RemarkAtZero, w1, w2, k, "scalar");
    return make_scalar_report(std::move(inst), s.map, thm3_side_at(s, w1, w2, k, Rational(0)),
                              thm3_side_at(s, w2, w1, k, Rational(0)));
}

VerificationReport check_remark_unit_w2(const Subject& s, unsigned long w1, unsigned k) {
    const unsigned long d = s.map.modulus();
    // w1^(k-1) sum_{i < d w1} f(i) B_{k,f}(i / w1)  ==  sum_{i<d} f(i) B_{k,f}(w1 i).
    CycloElem lhs = CycloElem::zero(s.map.field());
    for (unsigned long i = 0; i < d * w1; ++i) {
        const CycloElem& fi = s.map.at(static_cast<long long>(i));
        if (fi.is_zero())
            continue;
        lhs += fi * s.gb.poly_at(k, Rational(static_cast<long>(i), static_cast<long>(w1)));
    }
    lhs *= Rational(static_cast<long>(w1)).pow(static_cast<long>(k) - 1);
    CycloElem rhs = CycloElem::zero(s.map.field());
    for (unsigned long i = 0; i < d; ++i) {
        const CycloElem& fi = s.map.at(static_cast<long long>(i));
        if (fi.is_zero())
            continue;
        rhs += fi * s.gb.poly_at(k, Rational(static_cast<long>(w1 * i)));
    }
    IdentityInstance inst = instance_for(s, IdentityKind::RemarkUnitW2, w1, 1, k, "scalar");
    return make_scalar_report(std::move(inst), s.map, lhs, rhs);
}

VerificationReport check_series_cross(const Subject& s, unsigned long w1, unsigned long w2,
                                      unsigned ell, const Rational& x0,
                                      const TruncSeries<CycloElem>& series) {
    // Series route: the degree-l EGF coefficient of the symmetric product.
    const CycloElem lhs = series.egf_coeff(ell);
    // Closed-form route: the bilinear sum at the same point.
    const CycloElem rhs = thm2_side_at(s, w1, w2, ell, x0);
    IdentityInstance inst =
        instance_for(s, IdentityKind::SeriesCross, w1, w2, ell, XMode::at(x0).str());
    return make_scalar_report(std::move(inst), s.map, lhs, rhs);
}

}  // namespace

// ---- Public one-shot verifiers ----

std::vector<VerificationReport> verify_lemma1(const PeriodicMap& f, long char_index,
                                              unsigned n_max) {
    Subject s(f, char_index);
    const auto oracle = gen_bernoulli_series(f, n_max);
    std::vector<VerificationReport> reports;
    reports.reserve(2 * (n_max + 1));
    for (unsigned n = 0; n <= n_max; ++n) {
        reports.push_back(check_lemma1(s, n, oracle, false));
        reports.push_back(check_lemma1(s, n, oracle, true));
    }
    return reports;
}

VerificationReport verify_eq13(const PeriodicMap& f, long char_index, unsigned k,
                               unsigned long n) {
    if (k == 0 || n == 0)
        throw std::invalid_argument("verify_eq13: needs k >= 1 and n >= 1");
    Subject s(f, char_index);
    return check_eq13(s, k, n);
}

namespace {

void warm_sums(Subject& s, unsigned long w_max, unsigned degree_max) {
    for (unsigned long w = 1; w <= w_max; ++w)
        for (unsigned k = 0; k <= degree_max; ++k)
            s.sums.emplace(std::make_pair(w, k), subject_power_sum(s.map, w, k));
}

}  // namespace

VerificationReport verify_thm2(const PeriodicMap& f, long char_index, unsigned long w1,
                               unsigned long w2, unsigned ell, const XMode& mode) {
    Subject s(f, char_index);
    warm_sums(s, std::max(w1, w2), ell);
    return check_thm2(s, w1, w2, ell, mode);
}

VerificationReport verify_thm2_at_zero(const PeriodicMap& f, long char_index, unsigned long w1,
                                       unsigned long w2, unsigned ell) {
    Subject s(f, char_index);
    warm_sums(s, std::max(w1, w2), ell);
    return check_thm2_at_zero(s, w1, w2, ell);
}

VerificationReport verify_thm3(const PeriodicMap& f, long char_index, unsigned long w1,
                               unsigned long w2, unsigned k, const XMode& mode) {
    Subject s(f, char_index);
    return check_thm3(s, w1, w2, k, mode);
}

VerificationReport verify_remark_at_zero(const PeriodicMap& f, long char_index, unsigned long w1,
                                         unsigned long w2, unsigned k) {
    Subject s(f, char_index);
    return check_remark_at_zero(s, w1, w2, k);
}

VerificationReport verify_remark_unit_w2(const PeriodicMap& f, long char_index, unsigned long w1,
                                         unsigned k) {
    Subject s(f, char_index);
    return check_remark_unit_w2(s, w1, k);
}

VerificationReport verify_series_cross(const PeriodicMap& f, long char_index, unsigned long w1,
                                       unsigned long w2, unsigned ell, const Rational& x0) {
    Subject s(f, char_index);
    warm_sums(s, std::max(w1, w2), ell);
    const auto series = symmetric_product_series(f, w1, w2, x0, ell);
    return check_series_cross(s, w1, w2, ell, x0, series);
}

// ---- Grid suite ----

std::vector<PeriodicMap> random_periodic_maps(unsigned count, unsigned long d_max,
                                              std::uint64_t seed) {
    if (d_max == 0)
        throw std::invalid_argument("random_periodic_maps: d_max must be >= 1");
    std::mt19937_64 rng(seed);
    // Entries are small rationals in a fixed trivial field; draw order is
    // fixed (period first, then numerators and denominators per entry) so a
    // seed pins the whole family.
    const auto field = CycloField::make(1);
    std::vector<PeriodicMap> maps;
    maps.reserve(count);
    for (unsigned j = 0; j < count; ++j) {
        const unsigned long d = 1 + static_cast<unsigned long>(rng() % d_max);
        std::vector<CycloElem> values;
        values.reserve(d);
        for (unsigned long i = 0; i < d; ++i) {
            const long num = static_cast<long>(rng() % 7) - 3;  // -3..3
            const long den = 1 + static_cast<long>(rng() % 4);  // 1..4
            values.push_back(CycloElem::from_rational(field, Rational(num, den)));
        }
        maps.emplace_back(d, field, std::move(values));
    }
    return maps;
}

namespace {

struct PlannedInstance {
    std::size_t subject;
    IdentityKind kind;
    unsigned long w1 = 0;
    unsigned long w2 = 0;
    unsigned degree = 0;
    unsigned long n = 0;       // eq13 multiple
    std::size_t cross_point = 0;  // index into grid.cross_points
};

bool wants(const SuiteGrid& grid, IdentityKind k) {
    return grid.kinds.empty() || grid.kinds.count(k) > 0;
}

}  // namespace

SuiteResult run_suite(const SuiteGrid& grid) {
    // Subjects: all characters of every modulus up to d_max, then the
    // fuzzed maps. Their order — and therefore the report order — is fixed.
    std::vector<std::unique_ptr<Subject>> subjects;
    for (unsigned long d = 1; d <= grid.d_max; ++d) {
        auto chars = characters(d);
        for (auto& chi : chars)
            subjects.push_back(
                std::make_unique<Subject>(chi.map(), static_cast<long>(chi.index())));
    }
    if (grid.fuzz_count > 0) {
        auto maps = random_periodic_maps(grid.fuzz_count, grid.fuzz_d_max, grid.seed);
        for (unsigned j = 0; j < maps.size(); ++j)
            subjects.push_back(std::make_unique<Subject>(std::move(maps[j]), -1 - static_cast<long>(j)));
    }

    const bool any_weighted = wants(grid, IdentityKind::Thm2) ||
                              wants(grid, IdentityKind::Thm2AtZero) ||
                              wants(grid, IdentityKind::SeriesCross);

    // Warm every cache the planned instances can touch, before the threads
    // start: Bernoulli polynomials, power sums, and cross-check series.
    const unsigned warm_degree = std::max(grid.degree_max, grid.n_max);
    for (auto& s : subjects) {
        s->gb.warm(warm_degree);
        if (any_weighted)
            warm_sums(*s, grid.w_max, grid.degree_max);
        if (wants(grid, IdentityKind::SeriesCross)) {
            for (unsigned long w1 = 1; w1 <= grid.w_max; ++w1)
                for (unsigned long w2 = 1; w2 <= grid.w_max; ++w2) {
                    std::map<std::string, TruncSeries<CycloElem>> at;
                    for (const Rational& x0 : grid.cross_points)
                        at.emplace(x0.str(),
                                   symmetric_product_series(s->map, w1, w2, x0,
                                                            grid.degree_max));
                    s->cross_series.emplace(std::make_pair(w1, w2), std::move(at));
                }
        }
    }

    // Deterministic instance plan: subjects outermost, kinds in enum order,
    // parameters lexicographic.
    std::vector<PlannedInstance> plan;
    std::vector<TruncSeries<CycloElem>> lemma_oracles;
    if (wants(grid, IdentityKind::Lemma1) || wants(grid, IdentityKind::Lemma1Printed)) {
        lemma_oracles.reserve(subjects.size());
        for (auto& s : subjects)
            lemma_oracles.push_back(gen_bernoulli_series(s->map, grid.n_max));
    }
    for (std::size_t si = 0; si < subjects.size(); ++si) {
        for (unsigned n = 0; n <= grid.n_max; ++n) {
            if (wants(grid, IdentityKind::Lemma1))
                plan.push_back({si, IdentityKind::Lemma1, 0, 0, n, 0, 0});
            if (wants(grid, IdentityKind::Lemma1Printed))
                plan.push_back({si, IdentityKind::Lemma1Printed, 0, 0, n, 0, 0});
        }
        if (wants(grid, IdentityKind::Eq13))
            for (unsigned k = 1; k <= grid.degree_max; ++k)
                for (unsigned long n = 1; n <= grid.eq13_n_max; ++n)
                    plan.push_back({si, IdentityKind::Eq13, 0, 0, k, n, 0});
        for (unsigned long w1 = 1; w1 <= grid.w_max; ++w1)
            for (unsigned long w2 = 1; w2 <= grid.w_max; ++w2)
                for (unsigned deg = 0; deg <= grid.degree_max; ++deg) {
                    if (wants(grid, IdentityKind::Thm2))
                        plan.push_back({si, IdentityKind::Thm2, w1, w2, deg, 0, 0});
                    if (wants(grid, IdentityKind::Thm2AtZero))
                        plan.push_back({si, IdentityKind::Thm2AtZero, w1, w2, deg, 0, 0});
                    if (wants(grid, IdentityKind::Thm3))
                        plan.push_back({si, IdentityKind::Thm3, w1, w2, deg, 0, 0});
                    if (wants(grid, IdentityKind::RemarkAtZero))
                        plan.push_back({si, IdentityKind::RemarkAtZero, w1, w2, deg, 0, 0});
                    if (wants(grid, IdentityKind::SeriesCross))
                        for (std::size_t cp = 0; cp < grid.cross_points.size(); ++cp)
                            plan.push_back({si, IdentityKind::SeriesCross, w1, w2, deg, 0, cp});
                }
        if (wants(grid, IdentityKind::RemarkUnitW2))
            for (unsigned long w1 = 1; w1 <= grid.w_max; ++w1)
                for (unsigned deg = 0; deg <= grid.degree_max; ++deg)
                    plan.push_back({si, IdentityKind::RemarkUnitW2, w1, 0, deg, 0, 0});
    }

    std::vector<VerificationReport> reports(plan.size());
    auto run_one = [&](std::size_t pi) {
        const PlannedInstance& ins = plan[pi];
        const Subject& s = *subjects[ins.subject];
        switch (ins.kind) {
            case IdentityKind::Lemma1:
                reports[pi] = check_lemma1(s, ins.degree, lemma_oracles[ins.subject], false);
                break;
            case IdentityKind::Lemma1Printed:
                reports[pi] = check_lemma1(s, ins.degree, lemma_oracles[ins.subject], true);
                break;
            case IdentityKind::Eq13:
                reports[pi] = check_eq13(s, ins.degree, ins.n);
                break;
            case IdentityKind::Thm2:
                reports[pi] = check_thm2(s, ins.w1, ins.w2, ins.degree, XMode::sym());
                break;
            case IdentityKind::Thm2AtZero:
                reports[pi] = check_thm2_at_zero(s, ins.w1, ins.w2, ins.degree);
                break;
            case IdentityKind::Thm3:
                reports[pi] = check_thm3(s, ins.w1, ins.w2, ins.degree, XMode::sym());
                break;
            case IdentityKind::RemarkAtZero:
                reports[pi] = check_remark_at_zero(s, ins.w1, ins.w2, ins.degree);
                break;
            case IdentityKind::RemarkUnitW2:
                reports[pi] = check_remark_unit_w2(s, ins.w1, ins.degree);
                break;
            case IdentityKind::SeriesCross:
                reports[pi] = check_series_cross(
                    s, ins.w1, ins.w2, ins.degree, grid.cross_points[ins.cross_point],
                    s.cross_series.at({ins.w1, ins.w2}).at(grid.cross_points[ins.cross_point].str()));
                break;
        }
    };

    const unsigned workers = std::max(1u, grid.workers);
    if (workers == 1 || plan.size() < 2) {
        for (std::size_t pi = 0; pi < plan.size(); ++pi)
            run_one(pi);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t pi = next.fetch_add(1);
                    if (pi >= plan.size())
                        return;
                    run_one(pi);
                }
            });
        for (auto& th : pool)
            th.join();
    }

    SuiteResult result;
    result.reports = std::move(reports);
    result.total = result.reports.size();
    for (const VerificationReport& r : result.reports) {
        if (identity_expected_to_hold(r.instance.kind)) {
            ++result.expected_total;
            if (!r.pass)
                ++result.failed;
        } else {
            ++result.erratum_total;
            if (!r.pass)
                ++result.erratum_failures;
        }
    }
    return result;
}

}  // namespace bernsym
