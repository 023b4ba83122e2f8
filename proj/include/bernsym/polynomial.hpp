#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bernsym {

// Dense univariate polynomial over an exact scalar ring T. Coefficient i is
// the coefficient of x^i. Canonical form: no trailing zero coefficients, so
// the zero polynomial is the empty vector and equal values compare equal with
// operator== on the storage. The scalar ring plugs in through three ADL
// customization points: is_zero_scalar(T), zero_like(T), one_like(T).
template <class T>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { strip(); }

    static UniPoly constant(T v) { return UniPoly(std::vector<T>{std::move(v)}); }

    static UniPoly monomial(std::size_t deg, T lead) {
        if (is_zero_scalar(lead))
            return UniPoly();
        std::vector<T> c(deg + 1, zero_like(lead));
        c[deg] = std::move(lead);
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }

    const T& operator[](std::size_t i) const { return c_.at(i); }

    // Coefficient of x^i, with an explicit zero for indices past the degree
    // (callers supply the ring's zero; the zero polynomial has no sample).
    T coeff_or(std::size_t i, const T& zero) const { return i < c_.size() ? c_[i] : zero; }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (T& v : r.c_)
            v = -v;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (c_.size() < o.c_.size())
            c_.resize(o.c_.size(), o.c_.empty() ? T() : zero_like(o.c_.front()));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        strip();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero())
            return UniPoly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, zero_like(a.c_.front()));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Horner evaluation at a point of the coefficient ring.
    T eval(const T& x) const { return eval_mixed(x, zero_like(x)); }

    // Horner evaluation at a point of any ring X with T*X -> T; the caller
    // supplies the accumulator's zero (needed when the polynomial is zero).
    template <class X>
    T eval_mixed(const X& x, const T& zero) const {
        T acc = zero;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

  private:
    void strip() {
        while (!c_.empty() && is_zero_scalar(c_.back()))
            c_.pop_back();
    }

    std::vector<T> c_;
};

// s * p, where S multiplies into the coefficient ring (T*S -> T).
template <class T, class S>
UniPoly<T> scaled(const UniPoly<T>& p, const S& s) {
    std::vector<T> c;
    c.reserve(p.coeffs().size());
    for (const T& v : p.coeffs())
        c.push_back(v * s);
    return UniPoly<T>(std::move(c));
}

// p(s*x): coefficient i picks up a factor s^i.
template <class T, class S>
UniPoly<T> scale_arg(const UniPoly<T>& p, const S& s) {
    std::vector<T> c = p.coeffs();
    if (c.empty())
        return UniPoly<T>();
    S pw = one_like(s);
    for (std::size_t i = 1; i < c.size(); ++i) {
        pw = pw * s;
        c[i] = c[i] * pw;
    }
    return UniPoly<T>(std::move(c));
}

// p(a*x + b) by Horner: fold in one linear factor per coefficient.
template <class T, class S>
UniPoly<T> compose_affine(const UniPoly<T>& p, const S& a, const S& b) {
    const auto& c = p.coeffs();
    UniPoly<T> acc;
    for (std::size_t i = c.size(); i-- > 0;) {
        // acc <- acc*(a x + b) + c_i
        UniPoly<T> next = scaled(acc, b) + UniPoly<T>::constant(c[i]);
        UniPoly<T> shifted = scaled(acc, a);
        if (!shifted.is_zero()) {
            std::vector<T> sc(shifted.coeffs().size() + 1, zero_like(shifted.coeffs().front()));
            for (std::size_t j = 0; j < shifted.coeffs().size(); ++j)
                sc[j + 1] = shifted.coeffs()[j];
            next += UniPoly<T>(std::move(sc));
        }
        acc = std::move(next);
    }
    return acc;
}

// Euclidean division over a field: a = q*b + r with deg r < deg b.
// Throws on division by the zero polynomial.
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> divmod(const UniPoly<T>& a, const UniPoly<T>& b) {
    if (b.is_zero())
        throw std::domain_error("UniPoly: division by zero polynomial");
    if (a.degree() < b.degree())
        return {UniPoly<T>(), a};
    const T lead_inv = invert_scalar(b.coeffs().back());
    std::vector<T> rem = a.coeffs();
    const std::size_t qlen = rem.size() - b.coeffs().size() + 1;
    std::vector<T> quo(qlen, zero_like(rem.front()));
    for (std::size_t k = qlen; k-- > 0;) {
        T q = rem[k + b.coeffs().size() - 1] * lead_inv;
        if (is_zero_scalar(q))
            continue;
        quo[k] = q;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            rem[k + j] -= q * b.coeffs()[j];
    }
    rem.resize(b.coeffs().size() - 1, a.coeffs().empty() ? T() : zero_like(a.coeffs().front()));
    return {UniPoly<T>(std::move(quo)), UniPoly<T>(std::move(rem))};
}

// Exact division: throws if b does not divide a.
template <class T>
UniPoly<T> exact_div(const UniPoly<T>& a, const UniPoly<T>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw std::domain_error("UniPoly: inexact division");
    return q;
}

}  // namespace bernsym
