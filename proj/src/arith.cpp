#include "bernsym/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace bernsym {

std::map<unsigned long, unsigned> factorize(unsigned long n) {
    if (n == 0)
        throw std::invalid_argument("factorize: n must be >= 1");
    std::map<unsigned long, unsigned> out;
    for (unsigned long p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1)
        ++out[n];
    return out;
}

std::vector<unsigned long> divisors(unsigned long n) {
    if (n == 0)
        throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<unsigned long> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        unsigned long pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long phi = n;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        phi -= phi / p;
    }
    return phi;
}

bool is_prime(unsigned long n) {
    if (n < 2)
        return false;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n)
        return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer int_pow(unsigned long base, unsigned long exp) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

}  // namespace bernsym
