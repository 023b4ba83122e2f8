#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace bernsym {

using Integer = mpz_class;

// Elementary integer number theory on machine words. Everything here is
// exact and deterministic; moduli in this library are small (grids run to a
// few hundred), so trial division is the right tool.

// Prime factorization of n >= 1 as {prime -> exponent}, primes ascending.
std::map<unsigned long, unsigned> factorize(unsigned long n);

// All positive divisors of n >= 1, ascending.
std::vector<unsigned long> divisors(unsigned long n);

// Euler's totient.
unsigned long euler_phi(unsigned long n);

// Deterministic primality by trial division (n is a machine word).
bool is_prime(unsigned long n);

// n! as a big integer.
Integer factorial(unsigned long n);

// Binomial coefficient C(n, k); zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

// base^exp as a big integer (0^0 = 1).
Integer int_pow(unsigned long base, unsigned long exp);

}  // namespace bernsym
