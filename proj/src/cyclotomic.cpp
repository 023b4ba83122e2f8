#include "bernsym/cyclotomic.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "bernsym/arith.hpp"

namespace bernsym {

UniPoly<Rational> cyclotomic_poly(unsigned long m) {
    if (m == 0)
        throw std::invalid_argument("cyclotomic_poly: order must be >= 1");
    // Phi_d for every divisor d of m, in ascending order, by repeatedly
    // dividing x^d - 1 by the earlier factors. Local memo only.
    std::map<unsigned long, UniPoly<Rational>> phi;
    for (unsigned long d : divisors(m)) {
        std::vector<Rational> c(d + 1, Rational(0));
        c[0] = Rational(-1);
        c[d] = Rational(1);
        UniPoly<Rational> p(std::move(c));  // x^d - 1
        for (unsigned long e : divisors(d))
            if (e < d)
                p = exact_div(p, phi.at(e));
        phi.emplace(d, std::move(p));
    }
    return phi.at(m);
}

CycloField::CycloField(unsigned long m) : m_(m), phi_(euler_phi(m)), modulus_(cyclotomic_poly(m)) {
    // Row r holds z^(phi + r) in the power basis. Row 0 comes straight from
    // the modulus; each later row is the previous one shifted once, with any
    // overflow at z^phi folded back through row 0.
    if (phi_ < 2)
        return;
    std::vector<Rational> row0(phi_, Rational(0));
    for (std::size_t j = 0; j < phi_; ++j)
        row0[j] = -modulus_.coeff_or(j, Rational(0));
    rows_.push_back(row0);
    for (std::size_t r = 1; r + 1 < phi_; ++r) {
        const std::vector<Rational>& prev = rows_.back();
        std::vector<Rational> next(phi_, Rational(0));
        const Rational& top = prev[phi_ - 1];
        for (std::size_t j = 0; j < phi_; ++j) {
            next[j] = top * row0[j];
            if (j > 0)
                next[j] += prev[j - 1];
        }
        rows_.push_back(std::move(next));
    }
}

std::shared_ptr<const CycloField> CycloField::make(unsigned long m) {
    return std::shared_ptr<const CycloField>(new CycloField(m));
}

namespace {

const std::shared_ptr<const CycloField>& trivial_field() {
    static const std::shared_ptr<const CycloField> f = CycloField::make(1);
    return f;
}

}  // namespace

CycloElem::CycloElem(std::shared_ptr<const CycloField> f, std::vector<Rational> c)
    : f_(std::move(f)), c_(std::move(c)) {}

CycloElem::CycloElem() : CycloElem(trivial_field(), {Rational(0)}) {}

CycloElem CycloElem::zero(std::shared_ptr<const CycloField> f) {
    std::vector<Rational> c(f->degree(), Rational(0));
    return CycloElem(std::move(f), std::move(c));
}

CycloElem CycloElem::one(std::shared_ptr<const CycloField> f) {
    return from_rational(std::move(f), Rational(1));
}

CycloElem CycloElem::from_rational(std::shared_ptr<const CycloField> f, const Rational& q) {
    CycloElem v = zero(std::move(f));
    v.c_[0] = q;
    return v;
}

CycloElem CycloElem::root_power(std::shared_ptr<const CycloField> f, long long k) {
    const long long m = static_cast<long long>(f->order());
    const std::size_t e = static_cast<std::size_t>(((k % m) + m) % m);
    if (e < f->degree()) {
        CycloElem v = zero(std::move(f));
        v.c_[e] = Rational(1);
        return v;
    }
    // z^e with phi <= e < m: reduce the monomial against the modulus.
    auto [q, r] = divmod(UniPoly<Rational>::monomial(e, Rational(1)), f->modulus());
    (void)q;
    CycloElem v = zero(f);
    for (std::size_t j = 0; j < f->degree(); ++j)
        v.c_[j] = r.coeff_or(j, Rational(0));
    return v;
}

bool CycloElem::is_zero() const {
    for (const Rational& q : c_)
        if (!q.is_zero())
            return false;
    return true;
}

bool CycloElem::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (!c_[j].is_zero())
            return false;
    return true;
}

bool CycloElem::is_one() const {
    return c_[0].is_one() && is_rational();
}

Rational CycloElem::rational_value() const {
    if (!is_rational())
        throw std::domain_error("CycloElem: value is not rational");
    return c_[0];
}

CycloElem CycloElem::operator-() const {
    CycloElem r(*this);
    for (Rational& q : r.c_)
        q = -q;
    return r;
}

namespace {

void require_same_order(const CycloElem& a, const CycloElem& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("CycloElem: mixed field orders (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + "); lift explicitly");
}

}  // namespace

CycloElem& CycloElem::operator+=(const CycloElem& o) {
    require_same_order(*this, o);
    for (std::size_t j = 0; j < c_.size(); ++j)
        c_[j] += o.c_[j];
    return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
    require_same_order(*this, o);
    for (std::size_t j = 0; j < c_.size(); ++j)
        c_[j] -= o.c_[j];
    return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
    require_same_order(*this, o);
    const std::size_t phi = c_.size();
    // Schoolbook product, then fold degrees >= phi back via the
    // precomputed reduction rows.
    std::vector<Rational> conv(2 * phi - 1, Rational(0));
    for (std::size_t i = 0; i < phi; ++i) {
        if (c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < phi; ++j) {
            if (o.c_[j].is_zero())
                continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rational> out(conv.begin(), conv.begin() + phi);
    for (std::size_t r = 0; phi + r < conv.size(); ++r) {
        const Rational& hi = conv[phi + r];
        if (hi.is_zero())
            continue;
        const std::vector<Rational>& row = f_->reduction_row(r);
        for (std::size_t j = 0; j < phi; ++j)
            out[j] += hi * row[j];
    }
    c_ = std::move(out);
    return *this;
}

CycloElem& CycloElem::operator*=(const Rational& s) {
    for (Rational& q : c_)
        q *= s;
    return *this;
}

CycloElem CycloElem::invert() const {
    if (is_zero())
        throw std::domain_error("CycloElem: division by zero");
    if (f_->degree() == 1)
        return from_rational(f_, Rational(1) / c_[0]);
    // Extended Euclid on (element, modulus) over Q[x]: s*a + t*Phi = g with
    // g a nonzero constant, so a^{-1} = s/g in the quotient ring.
    UniPoly<Rational> a{std::vector<Rational>(c_)};
    UniPoly<Rational> b = f_->modulus();
    UniPoly<Rational> s0 = UniPoly<Rational>::constant(Rational(1));
    UniPoly<Rational> s1;
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        UniPoly<Rational> s2 = s0 - q * s1;
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // a = gcd(element, Phi_m); Phi_m is irreducible over Q, so a is constant.
    if (a.degree() != 0)
        throw std::logic_error("CycloElem: modulus not coprime to element");
    UniPoly<Rational> inv = scaled(s0, Rational(1) / a[0]);
    CycloElem v = zero(f_);
    for (std::size_t j = 0; j < f_->degree(); ++j)
        v.c_[j] = inv.coeff_or(j, Rational(0));
    return v;
}

CycloElem CycloElem::lifted(const std::shared_ptr<const CycloField>& bigger) const {
    const unsigned long m = order(), M = bigger->order();
    if (M % m != 0)
        throw std::invalid_argument("CycloElem: can only lift into a field of divisible order");
    const unsigned long step = M / m;
    CycloElem acc = zero(bigger);
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero())
            continue;
        acc += root_power(bigger, static_cast<long long>(j * step)) * c_[j];
    }
    return acc;
}

std::string CycloElem::str() const {
    std::ostringstream os;
    os << order() << ":[";
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (j)
            os << ',';
        os << c_[j].str();
    }
    os << ']';
    return os.str();
}

}  // namespace bernsym
