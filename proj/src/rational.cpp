#include "bernsym/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace bernsym {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (sgn(den) == 0)
        throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

namespace {

// One signed decimal integer: optional '+'/'-', then at least one digit.
// On success drops a leading '+' (GMP's string constructor dislikes it).
std::optional<Integer> parse_int_token(std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-'))
        digits.remove_prefix(1);
    if (digits.empty())
        return std::nullopt;
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return std::nullopt;
    const bool neg = s.front() == '-';
    Integer v(std::string(digits), 10);
    return neg ? Integer(-v) : v;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view s) {
    const auto slash = s.find('/');
    const auto num = parse_int_token(s.substr(0, slash));
    if (!num)
        return std::nullopt;
    if (slash == std::string_view::npos)
        return Rational(*num);
    const auto den = parse_int_token(s.substr(slash + 1));
    if (!den || sgn(*den) == 0)
        return std::nullopt;
    return Rational(*num, *den);
}

std::string Rational::str() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0)
        return Rational(1);
    Integer n = num(), d = den();
    if (e < 0) {
        if (is_zero())
            throw std::domain_error("Rational: zero has no negative power");
        std::swap(n, d);
        e = -e;
    }
    Integer pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(pd.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(pn, pd);  // sign lands in the numerator via canonicalize
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

Rational invert_scalar(const Rational& q) {
    return Rational(1) / q;
}

}  // namespace bernsym
