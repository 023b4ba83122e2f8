#include "bernsym/dirichlet.hpp"

#include <numeric>
#include <stdexcept>

#include "bernsym/arith.hpp"

namespace bernsym {

namespace {

unsigned long mul_mod(unsigned long a, unsigned long b, unsigned long d) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % d);
}

unsigned long pow_mod(unsigned long base, unsigned long exp, unsigned long d) {
    unsigned long r = 1 % d;
    base %= d;
    while (exp) {
        if (exp & 1)
            r = mul_mod(r, base, d);
        base = mul_mod(base, base, d);
        exp >>= 1;
    }
    return r;
}

// Multiplicative order of a mod q (a must be a unit).
unsigned long order_mod(unsigned long a, unsigned long q) {
    const unsigned long phi = euler_phi(q);
    unsigned long ord = phi;
    for (auto [p, e] : factorize(phi)) {
        (void)e;
        while (ord % p == 0 && pow_mod(a, ord / p, q) == 1)
            ord /= p;
    }
    return ord;
}

// Smallest primitive root mod the odd prime power q = p^e.
unsigned long primitive_root(unsigned long p, unsigned e) {
    const unsigned long q = [&] {
        unsigned long v = 1;
        for (unsigned i = 0; i < e; ++i)
            v *= p;
        return v;
    }();
    // Find the smallest primitive root mod p, then fix it up for p^e: g works
    // mod p^e unless g^(p-1) = 1 mod p^2, in which case g + p does.
    unsigned long g = 2;
    for (;; ++g)
        if (order_mod(g % p, p) == p - 1)
            break;
    if (e == 1)
        return g % q;
    if (pow_mod(g, p - 1, p * p) == 1)
        g += p;
    return g % q;
}

// x = r (mod q), x = 1 (mod d/q): the lift of a local generator to mod d.
unsigned long crt_lift(unsigned long r, unsigned long q, unsigned long d) {
    const unsigned long rest = d / q;
    if (rest == 1)
        return r % d;
    // x = 1 + rest * k with rest * k = r - 1 (mod q); rest is invertible
    // mod q since q and d/q are coprime. Extended Euclid for the inverse.
    long long a0 = static_cast<long long>(q), a1 = static_cast<long long>(rest % q);
    long long t0 = 0, t1 = 1;
    while (a1) {
        const long long qq = a0 / a1;
        const long long a2 = a0 - qq * a1;
        const long long t2 = t0 - qq * t1;
        a0 = a1;
        a1 = a2;
        t0 = t1;
        t1 = t2;
    }
    const long long m = static_cast<long long>(q);
    const unsigned long inv = static_cast<unsigned long>(((t0 % m) + m) % m);
    const unsigned long diff = (r % q + q - 1) % q;
    const unsigned long k = mul_mod(diff, inv, q);
    return (1 + rest * k) % d;
}

}  // namespace

UnitGroupStructure UnitGroupStructure::build(unsigned long d) {
    if (d == 0)
        throw std::invalid_argument("unit_group: modulus must be >= 1");
    UnitGroupStructure G;
    G.d_ = d;

    for (auto [p, e] : factorize(d)) {
        unsigned long q = 1;
        for (unsigned i = 0; i < e; ++i)
            q *= p;
        if (p == 2) {
            if (e == 1)
                continue;  // (Z/2)^* is trivial
            if (e == 2) {
                G.factors_.push_back({crt_lift(3, 4, d), 2});
            } else {
                // (Z/2^e)^* = <-1> x <5>
                G.factors_.push_back({crt_lift(q - 1, q, d), 2});
                G.factors_.push_back({crt_lift(5, q, d), q / 4});
            }
        } else {
            G.factors_.push_back({crt_lift(primitive_root(p, e), q, d), euler_phi(q)});
        }
    }
    for (const auto& f : G.factors_)
        G.size_ *= f.order;

    // Fill the discrete-log table by walking every exponent tuple in mixed-
    // radix order, tracking the corresponding residue incrementally.
    G.dlog_.assign(d, {});
    G.unit_.assign(d, false);
    const std::size_t nf = G.factors_.size();
    std::vector<unsigned long> tuple(nf, 0);
    // powers[j][t] = g_j^t mod d
    std::vector<std::vector<unsigned long>> powers(nf);
    for (std::size_t j = 0; j < nf; ++j) {
        powers[j].resize(G.factors_[j].order);
        powers[j][0] = 1 % d;
        for (unsigned long t = 1; t < G.factors_[j].order; ++t)
            powers[j][t] = mul_mod(powers[j][t - 1], G.factors_[j].generator, d);
    }
    for (unsigned long count = 0; count < G.size_; ++count) {
        unsigned long a = 1 % d;
        for (std::size_t j = 0; j < nf; ++j)
            a = mul_mod(a, powers[j][tuple[j]], d);
        G.dlog_[a] = tuple;
        G.unit_[a] = true;
        // Increment the tuple, least-significant factor last.
        for (std::size_t j = nf; j-- > 0;) {
            if (++tuple[j] < G.factors_[j].order)
                break;
            tuple[j] = 0;
        }
    }
    return G;
}

bool UnitGroupStructure::is_unit(unsigned long a) const {
    return unit_[a % d_];
}

const std::vector<unsigned long>& UnitGroupStructure::exponents_of(unsigned long a) const {
    a %= d_;
    if (!unit_[a])
        throw std::invalid_argument("unit_group: " + std::to_string(a) + " is not a unit mod " +
                                    std::to_string(d_));
    return dlog_[a];
}

UnitGroupStructure unit_group(unsigned long d) {
    return UnitGroupStructure::build(d);
}

PeriodicMap::PeriodicMap(unsigned long d, std::shared_ptr<const CycloField> field,
                         std::vector<CycloElem> values)
    : d_(d), field_(std::move(field)), values_(std::move(values)) {
    if (d_ == 0)
        throw std::invalid_argument("PeriodicMap: modulus must be >= 1");
    if (values_.size() != d_)
        throw std::invalid_argument("PeriodicMap: need exactly one value per residue");
    for (const CycloElem& v : values_)
        if (v.order() != field_->order())
            throw std::invalid_argument("PeriodicMap: value outside the declared field");
}

const CycloElem& PeriodicMap::at(long long n) const {
    const long long d = static_cast<long long>(d_);
    return values_[static_cast<std::size_t>(((n % d) + d) % d)];
}

DirichletChar::DirichletChar(PeriodicMap map, unsigned long index,
                             std::vector<unsigned long> exponents, unsigned long conductor,
                             int parity)
    : map_(std::move(map)), index_(index), exponents_(std::move(exponents)),
      conductor_(conductor), parity_(parity) {}

bool DirichletChar::is_principal() const {
    return order() == 1;
}

std::vector<DirichletChar> characters(unsigned long d) {
    const UnitGroupStructure G = unit_group(d);
    const std::size_t nf = G.factors().size();

    std::vector<DirichletChar> out;
    out.reserve(G.size());

    std::vector<unsigned long> exps(nf, 0);
    for (unsigned long index = 0; index < G.size(); ++index) {
        // Order of this character: lcm over factors of order_j / gcd(e_j, order_j).
        unsigned long n = 1;
        for (std::size_t j = 0; j < nf; ++j) {
            const unsigned long oj = G.factors()[j].order;
            n = std::lcm(n, oj / std::gcd(exps[j], oj));
        }
        auto field = CycloField::make(n);

        // chi(a) = zeta_n^k(a) with k(a) = sum_j t_j * (e_j * n / order_j),
        // each summand an integer since (order_j / gcd) | n.
        std::vector<CycloElem> values;
        values.reserve(d);
        for (unsigned long a = 0; a < d; ++a) {
            if (!G.is_unit(a)) {
                values.push_back(CycloElem::zero(field));
                continue;
            }
            const std::vector<unsigned long>& t = G.exponents_of(a);
            unsigned long k = 0;
            for (std::size_t j = 0; j < nf; ++j) {
                const unsigned long oj = G.factors()[j].order;
                const unsigned long g = std::gcd(exps[j], oj);
                const unsigned long step = (exps[j] / g) * (n / (oj / g));
                k = (k + t[j] % oj * step) % n;
            }
            values.push_back(CycloElem::root_power(field, static_cast<long long>(k)));
        }
        PeriodicMap map(d, field, std::move(values));

        // Conductor: the smallest f | d with chi trivial on units = 1 mod f.
        unsigned long conductor = d;
        for (unsigned long f : divisors(d)) {
            bool factors_through = true;
            for (unsigned long a = 1; a < d && factors_through; ++a)
                if (G.is_unit(a) && a % f == 1 % f && !map.at(a).is_one())
                    factors_through = false;
            if (factors_through) {
                conductor = f;
                break;
            }
        }

        // Parity from chi(-1), which is always +1 or -1.
        int parity = 0;
        if (d > 2) {
            const CycloElem& at_minus_one = map.at(static_cast<long long>(d) - 1);
            if (at_minus_one.is_one())
                parity = 0;
            else if ((-at_minus_one).is_one())
                parity = 1;
            else
                throw std::logic_error("characters: chi(-1) is not +-1");
        }

        out.emplace_back(DirichletChar(std::move(map), index, exps, conductor, parity));

        // Next exponent tuple in lexicographic order (first factor most
        // significant, so the last position increments fastest).
        for (std::size_t j = nf; j-- > 0;) {
            if (++exps[j] < G.factors()[j].order)
                break;
            exps[j] = 0;
        }
    }
    return out;
}

}  // namespace bernsym
