#include "bernsym/serialize.hpp"

#include "bernsym/bernoulli.hpp"

namespace bernsym {

ordered_json to_json(const Rational& q) {
    return q.str();
}

ordered_json to_json(const CycloElem& v) {
    ordered_json coeffs = ordered_json::array();
    for (const Rational& c : v.coeffs())
        coeffs.push_back(c.str());
    return ordered_json{{"order", v.order()}, {"coeffs", std::move(coeffs)}};
}

ordered_json to_json(const std::vector<CycloElem>& coeffs) {
    ordered_json arr = ordered_json::array();
    for (const CycloElem& v : coeffs)
        arr.push_back(to_json(v));
    return arr;
}

ordered_json to_json(const DirichletChar& chi) {
    ordered_json values = ordered_json::array();
    for (const CycloElem& v : chi.map().values())
        values.push_back(to_json(v));
    return ordered_json{{"modulus", chi.modulus()},   {"index", chi.index()},
                        {"exponents", chi.exponents()}, {"order", chi.order()},
                        {"parity", chi.parity()},     {"conductor", chi.conductor()},
                        {"values", std::move(values)}};
}

ordered_json to_json(const VerificationReport& report) {
    return ordered_json{{"id", std::string(identity_id(report.instance.kind))},
                        {"d", report.instance.modulus},
                        {"char_index", report.instance.char_index},
                        {"w1", report.instance.w1},
                        {"w2", report.instance.w2},
                        {"degree", report.instance.degree},
                        {"mode", report.instance.mode},
                        {"pass", report.pass},
                        {"lhs", to_json(report.lhs)},
                        {"rhs", to_json(report.rhs)},
                        {"discrepancy", to_json(report.discrepancy)}};
}

ordered_json to_json(const ConvergenceRow& row, unsigned n, unsigned long p) {
    return ordered_json{{"id", "volkenborn-convergence"},
                        {"n", n},
                        {"p", p},
                        {"level", row.level},
                        {"sum", row.sum.str()},
                        {"error", row.error.str()},
                        {"valuation", row.valuation.str()},
                        {"bound", row.bound},
                        {"pass", row.identity_ok && row.bound_ok},
                        {"lhs", row.sum.str()},
                        {"rhs", bernoulli_number(n).str()}};
}

ordered_json to_json(const ShiftCheckRow& row) {
    return ordered_json{{"id", "volkenborn-shift"}, {"k", row.k},
                        {"m", row.m},               {"lhs", row.lhs.str()},
                        {"rhs", row.rhs.str()},     {"pass", row.pass}};
}

std::string csv_quote(const std::string& cell) {
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_cyclo(const CycloElem& v) {
    return v.str();
}

std::string csv_cyclo_vector(const std::vector<CycloElem>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            out += ';';
        out += vs[i].str();
    }
    return out;
}

}  // namespace bernsym
