#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hhodge/rational.hpp"

namespace hhodge {

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Obtained by exact division of x^n - 1 by Phi_d over the proper divisors d.
const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

/// An element of Q(zeta_n), stored as sum_j c_j zeta_n^j for 0 <= j < phi(n),
/// i.e. reduced modulo Phi_n.  Since that set is a Q-basis, equality and
/// rationality are plain coefficient tests.
///
/// Values with different conductors are combined in the lcm conductor.
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(const Rational& r);  // NOLINT: implicit by design of the field embedding
    Cyclotomic(long r);              // NOLINT

    /// zeta_n^k; k may be negative or exceed n.
    static Cyclotomic root_of_unity(unsigned n, long k);

    unsigned conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;

    /// Throws InconsistencyError naming the value when it is irrational.
    Rational to_rational() const;

    /// Complex conjugation, zeta_n -> zeta_n^{-1}.
    Cyclotomic conjugate() const;

    /// The Galois automorphism zeta_n -> zeta_n^t, gcd(t, n) = 1.
    Cyclotomic galois(unsigned t) const;

    /// Multiplicative inverse via the norm: a^{-1} = prod_{t != 1} sigma_t(a) / N(a).
    /// Throws std::domain_error on zero.
    Cyclotomic inverse() const;

    /// The same value written in conductor m (n must divide m).
    Cyclotomic embed(unsigned m) const;

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    /// Same grammar the group files use: "1/2 - z5^1 + 3*z5^3"; "0" for zero.
    std::string to_string() const;

private:
    Cyclotomic(unsigned n, std::vector<Rational> coeffs);

    /// Reduces a polynomial in zeta_n of any degree to the basis.
    static std::vector<Rational> reduce(std::vector<Rational> poly, unsigned n);

    unsigned conductor_ = 1;
    std::vector<Rational> coeffs_;
};

/// sum_{j=1}^{m-1} xi_m^{jl} / (1 - xi_m^{-j}), evaluated in Q(zeta_m).
/// Equals (m-1)/2 - l for 0 <= l < m.
Rational root_of_unity_sum(unsigned m, unsigned l);

}  // namespace hhodge
