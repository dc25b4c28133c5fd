#pragma once

#include <string>
#include <vector>

#include "minact/errors.hpp"

namespace minact {

/// Coefficients of the m-th cyclotomic polynomial (degree phi(m), monic).
std::vector<long long> cyclotomic_polynomial(long long m);

long long euler_phi(long long m);

/// Element of Z[zeta_m], kept in canonical form: a polynomial in zeta_m of
/// degree < phi(m) (the power basis of Z[x]/(Phi_m)). Two values with the
/// same conductor are equal iff their coefficient vectors are identical;
/// across conductors equality is decided after promotion to the lcm.
class CyclotomicInteger {
public:
    CyclotomicInteger() : conductor_(1), coeffs_(1, 0) {}

    static CyclotomicInteger integer(long long v);
    /// zeta_m^j
    static CyclotomicInteger root_of_unity(long long m, long long j);
    /// Sum c_j * zeta_m^j over a raw coefficient vector (any length).
    static CyclotomicInteger from_raw(long long m, const std::vector<long long>& raw);

    long long conductor() const { return conductor_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    CyclotomicInteger operator+(const CyclotomicInteger& o) const;
    CyclotomicInteger operator-(const CyclotomicInteger& o) const;
    CyclotomicInteger operator*(const CyclotomicInteger& o) const;
    CyclotomicInteger operator-() const;
    CyclotomicInteger scaled(long long c) const;
    CyclotomicInteger conjugate() const;
    CyclotomicInteger promoted(long long new_conductor) const;

    bool operator==(const CyclotomicInteger& o) const;
    bool is_zero() const;
    bool is_integer() const;
    /// Throws InvalidParams when not an integer.
    long long integer_value() const;

    /// Symbolic rendering, e.g. "1 - z5 - z5^4".
    std::string to_string() const;

private:
    long long conductor_;
    std::vector<long long> coeffs_; // length = conductor, canonical

    CyclotomicInteger(long long m, std::vector<long long> canonical)
        : conductor_(m), coeffs_(std::move(canonical)) {}
};

} // namespace minact
