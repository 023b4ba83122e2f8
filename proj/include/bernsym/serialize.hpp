#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bernsym/cyclotomic.hpp"
#include "bernsym/dirichlet.hpp"
#include "bernsym/identities.hpp"
#include "bernsym/rational.hpp"
#include "bernsym/volkenborn.hpp"

namespace bernsym {

// All structured output flows through these adapters so the JSON and CSV
// views of a value can never drift apart. Key order is fixed (ordered_json)
// to keep byte-identical runs byte-identical.
using ordered_json = nlohmann::ordered_json;

// Rationals serialize as "p/q", or bare "p" for integers.
ordered_json to_json(const Rational& q);

// {"order": m, "coeffs": ["p/q", ...]} with phi(m) coefficients.
ordered_json to_json(const CycloElem& v);

ordered_json to_json(const std::vector<CycloElem>& coeffs);

// {"modulus", "index", "exponents", "order", "parity", "conductor", "values"}.
ordered_json to_json(const DirichletChar& chi);

// Flat record {"id", "d", "char_index", "w1", "w2", "degree", "mode",
// "pass", "lhs", "rhs", "discrepancy"}.
ordered_json to_json(const VerificationReport& report);

ordered_json to_json(const ConvergenceRow& row, unsigned n, unsigned long p);
ordered_json to_json(const ShiftCheckRow& row);

// CSV plumbing: quote a cell per RFC 4180 (always quoted, quotes doubled).
std::string csv_quote(const std::string& cell);
// Cyclotomic CSV cell: "m:[c0,c1,...]"; vectors join with ';'.
std::string csv_cyclo(const CycloElem& v);
std::string csv_cyclo_vector(const std::vector<CycloElem>& vs);

}  // namespace bernsym
