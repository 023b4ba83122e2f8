// Python face of the library: thin wrappers that return plain Python
// structures (exact values travel as strings or {"order", "coeffs"} dicts,
// matching the CLI's JSON), so no GMP types cross the language boundary.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bernsym/arith.hpp"
#include "bernsym/bernoulli.hpp"
#include "bernsym/dirichlet.hpp"
#include "bernsym/identities.hpp"
#include "bernsym/serialize.hpp"
#include "bernsym/series.hpp"
#include "bernsym/volkenborn.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const bernsym::ordered_json& j) {
    using value_t = bernsym::ordered_json::value_t;
    switch (j.type()) {
        case value_t::null:
            return py::none();
        case value_t::boolean:
            return py::bool_(j.get<bool>());
        case value_t::number_integer:
            return py::int_(j.get<long long>());
        case value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case value_t::number_float:
            return py::float_(j.get<double>());
        case value_t::string:
            return py::str(j.get<std::string>());
        case value_t::array: {
            py::list out;
            for (const auto& item : j)
                out.append(json_to_py(item));
            return out;
        }
        case value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            throw std::runtime_error("unsupported JSON payload");
    }
}

bernsym::DirichletChar char_at(unsigned long d, unsigned long index) {
    auto chars = bernsym::characters(d);
    if (index >= chars.size())
        throw py::index_error("modulus " + std::to_string(d) + " has only " +
                              std::to_string(chars.size()) + " characters");
    return chars[index];
}

bernsym::Rational parse_rational(const std::string& text) {
    auto q = bernsym::Rational::parse(text);
    if (!q)
        throw py::value_error("expected an exact rational like '3' or '-1/2', got '" + text +
                              "'");
    return *q;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact generalized Bernoulli numbers, Dirichlet characters, power sums, "
              "p-adic invariant integrals, and identity verification.";

    m.def("bernoulli_number", [](unsigned n) { return bernsym::bernoulli_number(n).str(); },
          py::arg("n"), "Ordinary Bernoulli number B_n as an exact rational string.");

    m.def(
        "bernoulli_poly",
        [](unsigned n) {
            const auto poly = bernsym::bernoulli_poly(n);
            std::vector<std::string> out;
            for (const auto& c : poly.coeffs())
                out.push_back(c.str());
            return out;
        },
        py::arg("n"), "Coefficients of B_n(x), ascending powers, as rational strings.");

    m.def("euler_phi", &bernsym::euler_phi, py::arg("n"));

    m.def(
        "characters",
        [](unsigned long d) {
            py::list out;
            for (const auto& chi : bernsym::characters(d))
                out.append(json_to_py(bernsym::to_json(chi)));
            return out;
        },
        py::arg("d"), "All Dirichlet characters mod d, in canonical index order.");

    m.def(
        "chi_eval",
        [](unsigned long d, unsigned long index, long long a) {
            return json_to_py(bernsym::to_json(char_at(d, index).eval(a)));
        },
        py::arg("d"), py::arg("index"), py::arg("a"),
        "chi(a) as an {'order', 'coeffs'} dict.");

    m.def(
        "gen_bernoulli_number",
        [](unsigned long d, unsigned long index, unsigned n) {
            return json_to_py(bernsym::to_json(
                bernsym::gen_bernoulli_number(char_at(d, index).map(), n)));
        },
        py::arg("d"), py::arg("index"), py::arg("n"),
        "Attached Bernoulli number for the given character.");

    m.def(
        "gen_bernoulli_poly",
        [](unsigned long d, unsigned long index, unsigned n) {
            return json_to_py(bernsym::to_json(
                bernsym::gen_bernoulli_poly(char_at(d, index).map(), n).coeffs()));
        },
        py::arg("d"), py::arg("index"), py::arg("n"),
        "Coefficients of the attached Bernoulli polynomial, ascending powers.");

    m.def(
        "power_sum",
        [](unsigned long d, unsigned long index, unsigned k, unsigned long n) {
            return json_to_py(bernsym::to_json(
                bernsym::power_sum(char_at(d, index).map(), k, n)));
        },
        py::arg("d"), py::arg("index"), py::arg("k"), py::arg("n"),
        "Weighted power sum T_k(chi, n), with 0^0 = 1.");

    m.def(
        "riemann_sum",
        [](unsigned n, unsigned long p, unsigned N) {
            return bernsym::riemann_sum(n, p, N).str();
        },
        py::arg("n"), py::arg("p"), py::arg("level"),
        "Level-N Riemann sum of the invariant integral of x^n at prime p.");

    m.def(
        "padic_valuation",
        [](const std::string& q, unsigned long p) -> py::object {
            const auto v = bernsym::PadicValuation::of(parse_rational(q), p);
            if (v.infinite)
                return py::none();
            return py::int_(v.v);
        },
        py::arg("q"), py::arg("p"),
        "p-adic valuation of the rational string q; None for the zero value.");

    m.def(
        "shift_check",
        [](unsigned k, unsigned long m) {
            return json_to_py(bernsym::to_json(bernsym::shift_identity_check(k, m)));
        },
        py::arg("k"), py::arg("m"), "Integral shift identity for x^k shifted by m.");

    m.def(
        "convergence",
        [](unsigned n, unsigned long p, unsigned max_level) {
            py::list out;
            for (const auto& row : bernsym::convergence_check(n, p, max_level))
                out.append(json_to_py(bernsym::to_json(row, n, p)));
            return out;
        },
        py::arg("n"), py::arg("p"), py::arg("max_level"),
        "Exact convergence audit of the level-N Riemann sums.");

    m.def(
        "verify",
        [](const std::vector<std::string>& suites, unsigned long d_max, unsigned long w_max,
           unsigned degree_max, unsigned n_max, unsigned fuzz, unsigned long fuzz_d_max,
           std::uint64_t seed, unsigned jobs, bool include_reports) {
            bernsym::SuiteGrid grid;
            grid.d_max = d_max;
            grid.w_max = w_max;
            grid.degree_max = degree_max;
            grid.n_max = n_max;
            grid.fuzz_count = fuzz;
            grid.fuzz_d_max = fuzz_d_max;
            grid.seed = seed;
            grid.workers = jobs;
            for (const std::string& s : suites) {
                if (s == "all") {
                    grid.kinds.clear();
                    break;
                }
                const auto kind = bernsym::identity_from_id(s);
                if (!kind)
                    throw py::value_error("unknown identity id '" + s + "'");
                grid.kinds.insert(*kind);
            }
            bernsym::SuiteResult result;
            {
                py::gil_scoped_release release;
                result = bernsym::run_suite(grid);
            }
            bernsym::ordered_json doc{{"total", result.total},
                                      {"expected_total", result.expected_total},
                                      {"failed", result.failed},
                                      {"erratum_total", result.erratum_total},
                                      {"erratum_failures", result.erratum_failures}};
            if (include_reports) {
                bernsym::ordered_json reports = bernsym::ordered_json::array();
                for (const auto& rep : result.reports)
                    reports.push_back(bernsym::to_json(rep));
                doc["reports"] = std::move(reports);
            }
            return json_to_py(doc);
        },
        py::arg("suites") = std::vector<std::string>{"all"}, py::arg("d_max") = 4,
        py::arg("w_max") = 2, py::arg("degree_max") = 4, py::arg("n_max") = 6,
        py::arg("fuzz") = 0, py::arg("fuzz_d_max") = 6, py::arg("seed") = 0,
        py::arg("jobs") = 1, py::arg("include_reports") = false,
        "Run the identity verification suite over a parameter grid.");

    m.def(
        "gen_bernoulli_series_egf",
        [](unsigned long d, unsigned long index, unsigned order) {
            py::list out;
            const auto s = bernsym::gen_bernoulli_series(char_at(d, index).map(), order);
            for (unsigned k = 0; k <= s.truncation_order(); ++k)
                out.append(json_to_py(bernsym::to_json(s.egf_coeff(k))));
            return out;
        },
        py::arg("d"), py::arg("index"), py::arg("order"),
        "EGF coefficients of the attached Bernoulli generating series.");
}
