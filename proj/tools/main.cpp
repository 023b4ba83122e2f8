// Command-line front end: exact Bernoulli data, Dirichlet character tables,
// power sums, p-adic integral checks, series dumps, and the identity
// verification suite, in JSON, CSV, or plain text.
//
// Exit codes: 0 = success (expected results only, including known-bad
// falsification targets failing as they should), 1 = at least one identity
// that must hold failed, 2 = usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bernsym/arith.hpp"
#include "bernsym/bernoulli.hpp"
#include "bernsym/dirichlet.hpp"
#include "bernsym/identities.hpp"
#include "bernsym/serialize.hpp"
#include "bernsym/series.hpp"
#include "bernsym/volkenborn.hpp"

namespace {

using bernsym::ordered_json;

struct OutputOptions {
    std::string format = "json";
    std::string path;  // empty = stdout
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    cmd->add_option("--output", out.path, "Write to a file instead of stdout");
}

// Every command renders its result three ways; this dispatches and writes.
struct Rendered {
    ordered_json json;
    std::string csv;
    std::string plain;
};

int write_rendered(const Rendered& r, const OutputOptions& out) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.path.empty()) {
        file.open(out.path);
        if (!file) {
            std::cerr << "error: cannot open output file '" << out.path << "'\n";
            return 2;
        }
        os = &file;
    }
    if (out.format == "json")
        *os << r.json.dump(2) << '\n';
    else if (out.format == "csv")
        *os << r.csv;
    else
        *os << r.plain;
    return 0;
}

// Characters are addressed by --modulus d --char i throughout the CLI.
bernsym::DirichletChar resolve_char(unsigned long d, unsigned long index) {
    if (d == 0)
        throw CLI::ValidationError("--modulus", "modulus must be >= 1");
    auto chars = bernsym::characters(d);
    if (index >= chars.size())
        throw CLI::ValidationError("--char", "character index out of range; modulus " +
                                                 std::to_string(d) + " has " +
                                                 std::to_string(chars.size()) + " characters");
    return chars[static_cast<std::size_t>(index)];
}

bernsym::Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    auto q = bernsym::Rational::parse(text);
    if (!q)
        throw CLI::ValidationError(flag, "expected an exact rational like 3, -1/2");
    return *q;
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            line += ',';
        line += bernsym::csv_quote(cells[i]);
    }
    line += '\n';
    return line;
}

std::string poly_cells(const std::vector<bernsym::Rational>& coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i)
            out += ';';
        out += coeffs[i].str();
    }
    return out;
}

// ---- bern ----

int run_bern(unsigned max_n, const OutputOptions& out) {
    Rendered r;
    ordered_json rows = ordered_json::array();
    r.csv = csv_line({"n", "number", "poly"});
    for (unsigned n = 0; n <= max_n; ++n) {
        const bernsym::Rational b = bernsym::bernoulli_number(n);
        const auto poly = bernsym::bernoulli_poly(n);
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : poly.coeffs())
            coeffs.push_back(c.str());
        rows.push_back({{"n", n}, {"number", b.str()}, {"poly", coeffs}});
        r.csv += csv_line({std::to_string(n), b.str(), poly_cells(poly.coeffs())});
        r.plain += "B_" + std::to_string(n) + " = " + b.str() +
                   "   coeffs[x^0..] = " + poly_cells(poly.coeffs()) + "\n";
    }
    r.json = {{"command", "bern"}, {"max", max_n}, {"rows", rows}};
    return write_rendered(r, out);
}

// ---- chars ----

int run_chars(unsigned long d, const OutputOptions& out) {
    Rendered r;
    ordered_json rows = ordered_json::array();
    r.csv = csv_line({"modulus", "index", "exponents", "order", "parity", "conductor", "values"});
    for (const auto& chi : bernsym::characters(d)) {
        rows.push_back(bernsym::to_json(chi));
        std::string exps;
        for (std::size_t i = 0; i < chi.exponents().size(); ++i) {
            if (i)
                exps += ';';
            exps += std::to_string(chi.exponents()[i]);
        }
        r.csv += csv_line({std::to_string(chi.modulus()), std::to_string(chi.index()), exps,
                           std::to_string(chi.order()), std::to_string(chi.parity()),
                           std::to_string(chi.conductor()),
                           bernsym::csv_cyclo_vector(chi.map().values())});
        r.plain += "chi " + std::to_string(chi.modulus()) + ":" + std::to_string(chi.index()) +
                   "  order=" + std::to_string(chi.order()) +
                   "  parity=" + std::to_string(chi.parity()) +
                   "  conductor=" + std::to_string(chi.conductor()) +
                   "  values=" + bernsym::csv_cyclo_vector(chi.map().values()) + "\n";
    }
    r.json = {{"command", "chars"}, {"modulus", d}, {"characters", rows}};
    return write_rendered(r, out);
}

// ---- gbern ----

int run_gbern(unsigned long d, unsigned long char_index, unsigned max_n,
              const OutputOptions& out) {
    const auto chi = resolve_char(d, char_index);
    bernsym::GenBernoulli gb(chi.map());
    // Every row is recomputed through the generating series and flagged, so
    // the closed form and the series route check each other on every run.
    const auto oracle = bernsym::gen_bernoulli_series(chi.map(), max_n);

    Rendered r;
    ordered_json rows = ordered_json::array();
    r.csv = csv_line({"n", "number", "poly", "series", "series_match"});
    bool all_match = true;
    for (unsigned n = 0; n <= max_n; ++n) {
        const auto value = gb.number(n);
        const auto poly = gb.poly(n);
        const auto from_series = oracle.egf_coeff(n);
        const bool match = (value == from_series);
        all_match = all_match && match;
        rows.push_back({{"n", n},
                        {"number", bernsym::to_json(value)},
                        {"poly", bernsym::to_json(poly.coeffs())},
                        {"series", bernsym::to_json(from_series)},
                        {"series_match", match}});
        r.csv += csv_line({std::to_string(n), value.str(),
                           bernsym::csv_cyclo_vector(poly.coeffs()), from_series.str(),
                           match ? "true" : "false"});
        r.plain += "B_" + std::to_string(n) + " = " + value.str() +
                   (match ? "" : "   (series disagrees: " + from_series.str() + ")") + "\n";
    }
    r.json = {{"command", "gbern"},
              {"d", chi.modulus()},
              {"char_index", chi.index()},
              {"max", max_n},
              {"rows", rows},
              {"all_series_match", all_match}};
    const int write_rc = write_rendered(r, out);
    if (write_rc != 0)
        return write_rc;
    return all_match ? 0 : 1;
}

// ---- psum ----

int run_psum(unsigned long d, unsigned long char_index, unsigned k, unsigned long n,
             const OutputOptions& out) {
    const auto chi = resolve_char(d, char_index);
    const auto value = bernsym::power_sum(chi.map(), k, n);
    Rendered r;
    r.json = {{"command", "psum"}, {"d", chi.modulus()}, {"char_index", chi.index()},
              {"k", k},            {"n", n},             {"value", bernsym::to_json(value)}};
    r.csv = csv_line({"d", "char_index", "k", "n", "value"});
    r.csv += csv_line({std::to_string(chi.modulus()), std::to_string(chi.index()),
                       std::to_string(k), std::to_string(n), value.str()});
    r.plain = "T_" + std::to_string(k) + "(chi, " + std::to_string(n) + ") = " + value.str() + "\n";
    return write_rendered(r, out);
}

// ---- volkenborn ----

int run_volkenborn(unsigned n, unsigned long p, unsigned max_level, unsigned shift_k_max,
                   unsigned long shift_m_max, const OutputOptions& out) {
    std::vector<bernsym::ConvergenceRow> conv;
    try {
        conv = bernsym::convergence_check(n, p, max_level);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    bool all_pass = true;
    Rendered r;
    ordered_json conv_rows = ordered_json::array();
    r.csv = csv_line({"id", "n", "p", "level", "sum", "error", "valuation", "bound", "pass"});
    for (const auto& row : conv) {
        conv_rows.push_back(bernsym::to_json(row, n, p));
        const bool pass = row.identity_ok && row.bound_ok;
        all_pass = all_pass && pass;
        r.csv += csv_line({"volkenborn-convergence", std::to_string(n), std::to_string(p),
                           std::to_string(row.level), row.sum.str(), row.error.str(),
                           row.valuation.str(), std::to_string(row.bound),
                           pass ? "true" : "false"});
        r.plain += std::string(pass ? "[PASS]" : "[FAIL]") + " level " + std::to_string(row.level) +
                   ": sum=" + row.sum.str() + " v_p(err)=" + row.valuation.str() +
                   " bound=" + std::to_string(row.bound) + "\n";
    }

    ordered_json shift_rows = ordered_json::array();
    if (shift_k_max > 0) {
        r.csv += "\n" + csv_line({"id", "k", "m", "lhs", "rhs", "pass"});
        for (unsigned k = 0; k <= shift_k_max; ++k)
            for (unsigned long m = 0; m <= shift_m_max; ++m) {
                const auto row = bernsym::shift_identity_check(k, m);
                all_pass = all_pass && row.pass;
                shift_rows.push_back(bernsym::to_json(row));
                r.csv += csv_line({"volkenborn-shift", std::to_string(k), std::to_string(m),
                                   row.lhs.str(), row.rhs.str(), row.pass ? "true" : "false"});
                r.plain += std::string(row.pass ? "[PASS]" : "[FAIL]") + " shift k=" +
                           std::to_string(k) + " m=" + std::to_string(m) + "\n";
            }
    }

    r.json = {{"command", "volkenborn"},
              {"n", n},
              {"p", p},
              {"convergence", conv_rows},
              {"shift", shift_rows},
              {"all_pass", all_pass}};
    const int write_rc = write_rendered(r, out);
    if (write_rc != 0)
        return write_rc;
    return all_pass ? 0 : 1;
}

// ---- series ----

int run_series(const std::string& kind, unsigned long d, unsigned long char_index,
               const std::string& x0_text, unsigned long w1, unsigned long w2, unsigned order,
               const OutputOptions& out) {
    Rendered r;
    ordered_json rows = ordered_json::array();
    r.csv = csv_line({"k", "coeff", "egf"});

    auto render_rational = [&](const bernsym::TruncSeries<bernsym::Rational>& s) {
        for (unsigned k = 0; k <= s.truncation_order(); ++k) {
            rows.push_back({{"k", k},
                            {"coeff", s.coeff(k).str()},
                            {"egf", s.egf_coeff(k).str()}});
            r.csv += csv_line({std::to_string(k), s.coeff(k).str(), s.egf_coeff(k).str()});
            r.plain += "t^" + std::to_string(k) + ": " + s.coeff(k).str() +
                       "  (egf " + s.egf_coeff(k).str() + ")\n";
        }
    };
    auto render_cyclo = [&](const bernsym::TruncSeries<bernsym::CycloElem>& s) {
        for (unsigned k = 0; k <= s.truncation_order(); ++k) {
            rows.push_back({{"k", k},
                            {"coeff", bernsym::to_json(s.coeff(k))},
                            {"egf", bernsym::to_json(s.egf_coeff(k))}});
            r.csv += csv_line({std::to_string(k), s.coeff(k).str(), s.egf_coeff(k).str()});
            r.plain += "t^" + std::to_string(k) + ": " + s.coeff(k).str() +
                       "  (egf " + s.egf_coeff(k).str() + ")\n";
        }
    };

    if (kind == "bern") {
        render_rational(bernsym::bernoulli_gf_series(order));
    } else {
        const auto chi = resolve_char(d, char_index);
        if (kind == "gbern") {
            render_cyclo(bernsym::gen_bernoulli_series(chi.map(), order));
        } else if (kind == "gbern-poly") {
            const auto x0 = parse_rational_flag(x0_text, "--x0");
            render_cyclo(bernsym::gen_bernoulli_poly_series(chi.map(), x0, order));
        } else if (kind == "psum") {
            render_cyclo(bernsym::power_sum_series(chi.map(), w1, order));
        } else if (kind == "sym") {
            const auto x0 = parse_rational_flag(x0_text, "--x0");
            render_cyclo(bernsym::symmetric_product_series(chi.map(), w1, w2, x0, order));
        } else {
            throw CLI::ValidationError("--kind", "unknown series kind '" + kind + "'");
        }
    }

    r.json = {{"command", "series"}, {"kind", kind}, {"order", order}, {"rows", rows}};
    return write_rendered(r, out);
}

// ---- verify ----

struct VerifyOptions {
    std::vector<std::string> suites{"all"};
    unsigned long d_max = 12;
    unsigned long w_max = 4;
    unsigned degree_max = 8;
    unsigned n_max = 12;
    unsigned fuzz = 0;
    unsigned long fuzz_d_max = 6;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

int run_verify(const VerifyOptions& vo, const OutputOptions& out) {
    bool run_identities = false;
    bool run_volkenborn_suite = false;
    bernsym::SuiteGrid grid;
    grid.d_max = vo.d_max;
    grid.w_max = vo.w_max;
    grid.degree_max = vo.degree_max;
    grid.n_max = vo.n_max;
    grid.fuzz_count = vo.fuzz;
    grid.fuzz_d_max = vo.fuzz_d_max;
    grid.seed = vo.seed;
    grid.workers = vo.jobs;

    bool want_all = false;
    for (const std::string& s : vo.suites) {
        if (s == "all") {
            want_all = true;
            run_identities = true;
            run_volkenborn_suite = true;
        } else if (s == "volkenborn") {
            run_volkenborn_suite = true;
        } else if (s == "lemma1") {
            // The corrected and printed closed forms travel together so the
            // erratum section is never empty.
            run_identities = true;
            grid.kinds.insert(bernsym::IdentityKind::Lemma1);
            grid.kinds.insert(bernsym::IdentityKind::Lemma1Printed);
        } else if (s == "remark") {
            // The corollary forms: both identities specialized at x = 0, and
            // the unit-second-weight form, each through its own code path.
            run_identities = true;
            grid.kinds.insert(bernsym::IdentityKind::Thm2AtZero);
            grid.kinds.insert(bernsym::IdentityKind::RemarkAtZero);
            grid.kinds.insert(bernsym::IdentityKind::RemarkUnitW2);
        } else if (auto kind = bernsym::identity_from_id(s)) {
            run_identities = true;
            grid.kinds.insert(*kind);
        } else {
            std::cerr << "error: unknown suite '" << s << "'\n";
            return 2;
        }
    }
    if (want_all)
        grid.kinds.clear();

    Rendered r;
    ordered_json reports = ordered_json::array();
    ordered_json erratum = ordered_json::array();
    std::size_t failed = 0, passed = 0, erratum_total = 0, erratum_failures = 0, total = 0;

    r.csv = csv_line({"id", "d", "char_index", "w1", "w2", "degree", "mode", "pass", "lhs", "rhs",
                      "discrepancy"});
    auto csv_report = [&](const bernsym::VerificationReport& rep) {
        r.csv += csv_line({std::string(bernsym::identity_id(rep.instance.kind)),
                           std::to_string(rep.instance.modulus),
                           std::to_string(rep.instance.char_index),
                           std::to_string(rep.instance.w1), std::to_string(rep.instance.w2),
                           std::to_string(rep.instance.degree), rep.instance.mode,
                           rep.pass ? "true" : "false", bernsym::csv_cyclo_vector(rep.lhs),
                           bernsym::csv_cyclo_vector(rep.rhs),
                           bernsym::csv_cyclo_vector(rep.discrepancy)});
    };
    auto plain_report = [&](const bernsym::VerificationReport& rep, bool expected) {
        const char* tag = rep.pass ? "[PASS]" : (expected ? "[FAIL]" : "[ERRATUM]");
        r.plain += std::string(tag) + " " + std::string(bernsym::identity_id(rep.instance.kind)) +
                   " d=" + std::to_string(rep.instance.modulus) +
                   " chi=" + std::to_string(rep.instance.char_index) +
                   " w1=" + std::to_string(rep.instance.w1) +
                   " w2=" + std::to_string(rep.instance.w2) +
                   " degree=" + std::to_string(rep.instance.degree) + " " + rep.instance.mode +
                   "\n";
    };

    if (run_identities) {
        const bernsym::SuiteResult result = bernsym::run_suite(grid);
        total += result.total;
        failed += result.failed;
        passed += result.expected_total - result.failed;
        erratum_total = result.erratum_total;
        erratum_failures = result.erratum_failures;
        for (const auto& rep : result.reports) {
            const bool expected = bernsym::identity_expected_to_hold(rep.instance.kind);
            (expected ? reports : erratum).push_back(bernsym::to_json(rep));
            csv_report(rep);
            plain_report(rep, expected);
        }
    }

    ordered_json volk = ordered_json::object();
    std::size_t volk_total = 0, volk_failed = 0;
    if (run_volkenborn_suite) {
        ordered_json conv_rows = ordered_json::array();
        ordered_json shift_rows = ordered_json::array();
        std::string volk_csv = csv_line({"id", "n", "p", "level", "sum", "error", "valuation",
                                         "bound", "pass"});
        for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
            for (unsigned n = 0; n <= 8; ++n)
                for (const auto& row : bernsym::convergence_check(n, p, 6)) {
                    const bool pass = row.identity_ok && row.bound_ok;
                    ++volk_total;
                    if (!pass)
                        ++volk_failed;
                    conv_rows.push_back(bernsym::to_json(row, n, p));
                    volk_csv += csv_line({"volkenborn-convergence", std::to_string(n),
                                          std::to_string(p), std::to_string(row.level),
                                          row.sum.str(), row.error.str(), row.valuation.str(),
                                          std::to_string(row.bound), pass ? "true" : "false"});
                    if (!pass)
                        r.plain += "[FAIL] volkenborn-convergence n=" + std::to_string(n) +
                                   " p=" + std::to_string(p) +
                                   " level=" + std::to_string(row.level) + "\n";
                }
        std::string shift_csv = csv_line({"id", "k", "m", "lhs", "rhs", "pass"});
        for (unsigned k = 0; k <= 10; ++k)
            for (unsigned long m = 0; m <= 8; ++m) {
                const auto row = bernsym::shift_identity_check(k, m);
                ++volk_total;
                if (!row.pass) {
                    ++volk_failed;
                    r.plain += "[FAIL] volkenborn-shift k=" + std::to_string(k) +
                               " m=" + std::to_string(m) + "\n";
                }
                shift_rows.push_back(bernsym::to_json(row));
                shift_csv += csv_line({"volkenborn-shift", std::to_string(k), std::to_string(m),
                                       row.lhs.str(), row.rhs.str(), row.pass ? "true" : "false"});
            }
        volk = {{"convergence", conv_rows}, {"shift", shift_rows}};
        r.csv += "\n" + volk_csv + "\n" + shift_csv;
        r.plain += "volkenborn: " + std::to_string(volk_total - volk_failed) + "/" +
                   std::to_string(volk_total) + " passed\n";
    }

    const std::size_t unexpected = failed + volk_failed;
    const int exit_code = unexpected == 0 ? 0 : 1;
    ordered_json summary{{"total", total + volk_total},
                         {"passed", passed + (volk_total - volk_failed)},
                         {"failed", unexpected},
                         {"erratum_total", erratum_total},
                         {"erratum_failures", erratum_failures},
                         {"exit_code", exit_code}};
    r.json = {{"command", "verify"},
              {"suites", vo.suites},
              // The worker count is deliberately absent: output must be
              // byte-identical for the same flags regardless of --jobs.
              {"grid",
               {{"d_max", vo.d_max},
                {"w_max", vo.w_max},
                {"degree_max", vo.degree_max},
                {"n_max", vo.n_max},
                {"fuzz", vo.fuzz},
                {"fuzz_d_max", vo.fuzz_d_max},
                {"seed", vo.seed}}},
              {"reports", reports},
              {"erratum", erratum}};
    if (run_volkenborn_suite)
        r.json["volkenborn"] = volk;
    r.json["summary"] = summary;
    r.plain += "summary: failed=" + std::to_string(unexpected) +
               " erratum_failures=" + std::to_string(erratum_failures) + "\n";

    const int write_rc = write_rendered(r, out);
    if (write_rc != 0)
        return write_rc;
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generalized Bernoulli numbers, Dirichlet characters, power sums,\n"
                 "p-adic invariant integrals, and machine verification of their symmetry\n"
                 "identities in cyclotomic arithmetic."};
    app.require_subcommand(1);

    // bern
    auto* bern = app.add_subcommand("bern", "Ordinary Bernoulli numbers and polynomials");
    unsigned bern_max = 12;
    OutputOptions bern_out;
    bern->add_option("--max", bern_max, "Largest index")->capture_default_str();
    add_output_options(bern, bern_out);

    // chars
    auto* chars = app.add_subcommand("chars", "Dirichlet character table for one modulus");
    unsigned long chars_d = 1;
    OutputOptions chars_out;
    chars->add_option("--modulus", chars_d, "Modulus d >= 1")->required();
    add_output_options(chars, chars_out);

    // gbern
    auto* gbern = app.add_subcommand("gbern", "Attached Bernoulli numbers and polynomials");
    unsigned long gbern_d = 1;
    unsigned long gbern_char = 0;
    unsigned gbern_max = 8;
    OutputOptions gbern_out;
    gbern->add_option("--modulus", gbern_d, "Character modulus d >= 1")->required();
    gbern->add_option("--char", gbern_char, "Character index within the modulus")
        ->capture_default_str();
    gbern->add_option("--max", gbern_max, "Largest index")->capture_default_str();
    add_output_options(gbern, gbern_out);

    // psum
    auto* psum = app.add_subcommand("psum", "Weighted power sum T_k(chi, n)");
    unsigned long psum_d = 1;
    unsigned long psum_char = 0;
    unsigned psum_k = 0;
    unsigned long psum_n = 0;
    OutputOptions psum_out;
    psum->add_option("--modulus", psum_d, "Character modulus d >= 1")->required();
    psum->add_option("--char", psum_char, "Character index within the modulus")
        ->capture_default_str();
    psum->add_option("--k", psum_k, "Power")->required();
    psum->add_option("--n", psum_n, "Upper summation limit")->required();
    add_output_options(psum, psum_out);

    // volkenborn
    auto* volk = app.add_subcommand("volkenborn",
                                    "Finite-level invariant-integral checks at a prime");
    unsigned volk_n = 2;
    unsigned long volk_p = 2;
    unsigned volk_levels = 6;
    unsigned volk_shift_k = 0;
    unsigned long volk_shift_m = 8;
    OutputOptions volk_out;
    volk->add_option("--n", volk_n, "Monomial degree x^n")->capture_default_str();
    volk->add_option("--p", volk_p, "Prime")->capture_default_str();
    volk->add_option("--level", volk_levels, "Deepest level N")->capture_default_str();
    volk->add_option("--shift-k-max", volk_shift_k,
                     "Also run shift checks for k = 0..K (0 = skip)")
        ->capture_default_str();
    volk->add_option("--shift-m-max", volk_shift_m, "Shift range m = 0..M")
        ->capture_default_str();
    add_output_options(volk, volk_out);

    // series
    auto* series = app.add_subcommand("series", "Dump a truncated generating series");
    std::string series_kind = "bern";
    unsigned long series_d = 0;
    unsigned long series_char = 0;
    std::string series_x0 = "0";
    unsigned long series_w1 = 1, series_w2 = 1;
    unsigned series_order = 16;
    OutputOptions series_out;
    series->add_option("--kind", series_kind, "bern | gbern | gbern-poly | psum | sym")
        ->check(CLI::IsMember({"bern", "gbern", "gbern-poly", "psum", "sym"}))
        ->capture_default_str();
    series->add_option("--modulus", series_d, "Character modulus (all kinds except bern)");
    series->add_option("--char", series_char, "Character index within the modulus")
        ->capture_default_str();
    series->add_option("--x0", series_x0, "Rational offset (gbern-poly, sym)")
        ->capture_default_str();
    series->add_option("--w1", series_w1, "First weight (psum, sym)")->capture_default_str();
    series->add_option("--w2", series_w2, "Second weight (sym)")->capture_default_str();
    series->add_option("--order", series_order, "Truncation order")->capture_default_str();
    add_output_options(series, series_out);

    // verify
    auto* verify = app.add_subcommand("verify", "Run identity verification suites");
    VerifyOptions vo;
    OutputOptions verify_out;
    verify
        ->add_option("--suite", vo.suites,
                     "all | lemma1 | eq13 | thm2 | thm3 | remark | series-cross | volkenborn "
                     "(repeatable; single-identity ids such as thm2-x0 are also accepted)")
        ->capture_default_str();
    verify->add_option("--d-max", vo.d_max, "Largest character modulus")->capture_default_str();
    verify->add_option("--w-max", vo.w_max, "Largest weight")->capture_default_str();
    verify->add_option("--deg-max", vo.degree_max, "Largest polynomial degree")
        ->capture_default_str();
    verify->add_option("--n-max", vo.n_max, "Closed-form depth for lemma1")
        ->capture_default_str();
    verify->add_option("--fuzz", vo.fuzz, "Number of random periodic-map subjects")
        ->capture_default_str();
    verify->add_option("--fuzz-d-max", vo.fuzz_d_max, "Largest random period")
        ->capture_default_str();
    verify->add_option("--seed", vo.seed, "Fuzz seed")->capture_default_str();
    verify->add_option("--jobs", vo.jobs, "Verification threads (0 = hardware)")
        ->capture_default_str();
    add_output_options(verify, verify_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        // CLI11 returns 0 for --help/--version; everything else is usage.
        return rc == 0 ? 0 : 2;
    }

    try {
        if (bern->parsed())
            return run_bern(bern_max, bern_out);
        if (chars->parsed())
            return run_chars(chars_d, chars_out);
        if (gbern->parsed())
            return run_gbern(gbern_d, gbern_char, gbern_max, gbern_out);
        if (psum->parsed())
            return run_psum(psum_d, psum_char, psum_k, psum_n, psum_out);
        if (volk->parsed())
            return run_volkenborn(volk_n, volk_p, volk_levels, volk_shift_k, volk_shift_m,
                                  volk_out);
        if (series->parsed()) {
            if (series_kind != "bern" && series_d == 0) {
                std::cerr << "error: --modulus is required for series kind '" << series_kind
                          << "'\n";
                return 2;
            }
            return run_series(series_kind, series_d, series_char, series_x0, series_w1,
                              series_w2, series_order, series_out);
        }
        if (verify->parsed()) {
            if (vo.jobs == 0)
                vo.jobs = std::max(1u, std::thread::hardware_concurrency());
            return run_verify(vo, verify_out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
