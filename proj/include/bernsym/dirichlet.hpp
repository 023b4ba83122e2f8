#pragma once

#include <memory>
#include <vector>

#include "bernsym/cyclotomic.hpp"

namespace bernsym {

// One cyclic factor of the unit group (Z/d)^*: a generator (as a residue
// mod d) together with its multiplicative order.
struct UnitGroupFactor {
    unsigned long generator;
    unsigned long order;
};

// Decomposition of (Z/d)^* as a direct product of cyclic groups, with a
// discrete-log table filled by enumeration. Factor order: the 2-power part
// first (for 2^e with e >= 3 the order-2 factor generated by -1, then the
// order-2^(e-2) factor generated by 5), then odd prime powers ascending,
// each contributing one factor generated by a lifted primitive root.
class UnitGroupStructure {
  public:
    static UnitGroupStructure build(unsigned long d);

    unsigned long modulus() const { return d_; }
    const std::vector<UnitGroupFactor>& factors() const { return factors_; }
    // Product of the factor orders = phi(d).
    unsigned long size() const { return size_; }

    bool is_unit(unsigned long a) const;
    // Exponent tuple of the unit a: a = prod_j g_j^(t_j) with t_j < order_j.
    const std::vector<unsigned long>& exponents_of(unsigned long a) const;

  private:
    unsigned long d_ = 1;
    unsigned long size_ = 1;
    std::vector<UnitGroupFactor> factors_;
    // dlog_[a] is the exponent tuple for units, empty marker for non-units.
    std::vector<std::vector<unsigned long>> dlog_;
    std::vector<bool> unit_;
};

// An arbitrary d-periodic coefficient sequence with values in a single
// cyclotomic field. The symmetry identities in this library hold for any
// such sequence (their derivations use only periodicity), so this is the
// type the verification machinery consumes; genuine Dirichlet characters
// supply one as their value table.
class PeriodicMap {
  public:
    PeriodicMap(unsigned long d, std::shared_ptr<const CycloField> field,
                std::vector<CycloElem> values);

    unsigned long modulus() const { return d_; }
    const std::shared_ptr<const CycloField>& field() const { return field_; }
    const std::vector<CycloElem>& values() const { return values_; }

    // Value at any integer, via n mod d (nonnegative representative).
    const CycloElem& at(long long n) const;

  private:
    unsigned long d_;
    std::shared_ptr<const CycloField> field_;
    std::vector<CycloElem> values_;
};

// A Dirichlet character mod d, materialized as its full value table over
// Q(zeta_n) where n is the character's order. Immutable after construction;
// conductor and parity are computed eagerly.
class DirichletChar {
  public:
    unsigned long modulus() const { return map_.modulus(); }
    // Position in the canonical enumeration of characters(modulus()).
    unsigned long index() const { return index_; }
    // Exponent tuple against the unit-group factors, one entry per factor.
    const std::vector<unsigned long>& exponents() const { return exponents_; }
    // Multiplicative order n; values live in Q(zeta_n).
    unsigned long order() const { return map_.field()->order(); }
    // Smallest modulus f | d through which the character factors.
    unsigned long conductor() const { return conductor_; }
    // 0 for even (chi(-1) = 1), 1 for odd (chi(-1) = -1).
    int parity() const { return parity_; }

    const PeriodicMap& map() const { return map_; }
    // chi(a) for any integer a (zero off the units).
    const CycloElem& eval(long long a) const { return map_.at(a); }

    bool is_principal() const;

  private:
    friend std::vector<DirichletChar> characters(unsigned long d);
    DirichletChar(PeriodicMap map, unsigned long index, std::vector<unsigned long> exponents,
                  unsigned long conductor, int parity);

    PeriodicMap map_;
    unsigned long index_;
    std::vector<unsigned long> exponents_;
    unsigned long conductor_;
    int parity_;
};

UnitGroupStructure unit_group(unsigned long d);

// All phi(d) Dirichlet characters mod d, enumerated lexicographically by
// exponent tuple against the unit-group factors (principal character first).
// The position in this vector is the character's canonical index.
std::vector<DirichletChar> characters(unsigned long d);

}  // namespace bernsym
