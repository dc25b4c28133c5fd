#include "minact/modular.hpp"

#include <numeric>

namespace minact {

Residue::Residue(long long v, long long m) : modulus(m) {
    if (m < 2)
        throw InvalidParams("Residue: modulus must be >= 2");
    value = v % m;
    if (value < 0)
        value += m;
}

Residue Residue::operator*(const Residue& other) const {
    if (modulus != other.modulus)
        throw InvalidParams("Residue: modulus mismatch");
    return Residue(value * other.value % modulus, modulus);
}

Residue Residue::pow(long long e) const {
    return Residue(pow_mod(value, e, modulus), modulus);
}

Residue Residue::neg() const {
    return Residue(modulus - value, modulus);
}

bool is_prime(long long n) {
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

long long gcd_ll(long long a, long long b) {
    return std::gcd(a, b);
}

long long lcm_ll(long long a, long long b) {
    return a / std::gcd(a, b) * b;
}

long long pow_mod(long long base, long long exp, long long mod) {
    base %= mod;
    if (base < 0)
        base += mod;
    long long out = 1 % mod;
    while (exp > 0) {
        if (exp & 1)
            out = out * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return out;
}

long long inv_mod(long long a, long long mod) {
    a %= mod;
    if (a < 0)
        a += mod;
    // extended Euclid
    long long t = 0, new_t = 1, r = mod, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1)
        throw NotAUnit("inv_mod: not invertible");
    return t < 0 ? t + mod : t;
}

long long mul_order(const Residue& a) {
    if (gcd_ll(a.value, a.modulus) != 1)
        throw NotAUnit("mul_order: gcd(value, modulus) != 1");
    long long t = 1;
    Residue acc = a;
    while (acc.value != 1 % a.modulus) {
        acc = acc * a;
        ++t;
    }
    return t;
}

Residue primitive_root(long long p) {
    if (!is_prime(p))
        throw InvalidParams("primitive_root: p must be prime");
    if (p == 2)
        return Residue(1, 2);
    const auto factors = prime_factors(p - 1);
    for (long long g = 2; g < p; ++g) {
        bool primitive = true;
        for (long long f : factors) {
            if (pow_mod(g, (p - 1) / f, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive)
            return Residue(g, p);
    }
    throw Error("primitive_root: none found (unreachable for prime p)");
}

Residue element_of_order(long long q, long long p) {
    if (!is_prime(p))
        throw InvalidParams("element_of_order: p must be prime");
    if (q < 1 || (p - 1) % q != 0)
        throw OrderDoesNotDivide("element_of_order: q does not divide p-1");
    const Residue g = primitive_root(p);
    return g.pow((p - 1) / q);
}

} // namespace minact
