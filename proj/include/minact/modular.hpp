#pragma once

#include <cstdint>
#include <vector>

#include "minact/errors.hpp"

namespace minact {

/// Element of Z_m, always stored reduced to [0, m).
struct Residue {
    long long value = 0;
    long long modulus = 2;

    Residue() = default;
    Residue(long long v, long long m);

    Residue operator*(const Residue& other) const;
    Residue pow(long long e) const;
    Residue neg() const;
    bool operator==(const Residue& other) const = default;
};

bool is_prime(long long n);

/// Prime factorization by trial division, ascending, with multiplicities
/// collapsed (each prime listed once).
std::vector<long long> prime_factors(long long n);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
long long pow_mod(long long base, long long exp, long long mod);
long long inv_mod(long long a, long long mod);

/// Least t >= 1 with a^t = 1 (mod a.modulus). Throws NotAUnit if
/// gcd(a, modulus) != 1.
long long mul_order(const Residue& a);

/// Smallest primitive root mod p (p prime).
Residue primitive_root(long long p);

/// k = g^((p-1)/q) for the smallest primitive root g; mul_order(k) = q.
/// Throws OrderDoesNotDivide if q does not divide p-1.
Residue element_of_order(long long q, long long p);

} // namespace minact
