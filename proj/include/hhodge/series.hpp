#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hhodge/engine.hpp"
#include "hhodge/rational.hpp"

namespace hhodge {

/// Truncation of a generating function in the variables t_a^[gamma].
struct Truncation {
    unsigned max_points = 4;
    unsigned max_psi = 3;
};

/// Sparse polynomial in t_a^[gamma], keyed by the sorted insertion multiset
/// of a monomial.  The coefficient of prod (t_a^[gamma])^m is the
/// correlator divided by prod m!.
struct SeriesPoly {
    unsigned genus = 0;
    Truncation truncation;
    std::map<std::vector<Insertion>, Rational> coeffs;  // nonzero entries only

    /// Throws std::out_of_range for monomials outside the truncation.
    Rational coefficient(std::vector<Insertion> monomial) const;

    /// "t0[w]^2 t1[w2]^1": factors ordered by psi power, then class.
    static std::string monomial_text(const FiniteGroup& g, std::vector<Insertion> monomial);

    std::vector<std::pair<std::string, Rational>> terms_text(const FiniteGroup& g) const;
};

/// prod over distinct insertions of (multiplicity)!.
Integer symmetry_factor(std::vector<Insertion> monomial);

/// Every insertion multiset within the truncation whose psi powers sum to
/// 3g - 3 + n - extra_degree, n = size, with 2g - 2 + n > 0 unless allow_unstable.
std::vector<std::vector<Insertion>> dimension_monomials(const FiniteGroup& g, unsigned genus, Truncation trunc,
                                                        unsigned extra_degree, bool allow_unstable);

/// F_g^G truncated.  Coefficients come from the psi-integral times Omega;
/// a second evaluation through the representation basis (f_alpha
/// coordinates, nu_alpha^{1-g} per correlator) must agree, else
/// InconsistencyError.
SeriesPoly potential(Engine& engine, unsigned genus, Truncation trunc);

/// Same coefficient through the representation basis only.
Rational potential_coefficient_by_representations(Engine& engine, unsigned genus, const std::vector<Insertion>& monomial);

/// Coefficient of a monomial in the generating function of integrals of
/// ch_{k,alpha}, read off from the operator form: the first-order operator
/// applied to F_g plus the quadratic terms in the derivatives of F_{g-1}
/// and F_h F_{g-h}.  Uses only ch-free correlators.
Rational operator_form_coefficient(Engine& engine, unsigned alpha, unsigned k, unsigned genus,
                                   const std::vector<Insertion>& monomial);

/// Generating function of the integrals of ch_{k,alpha}, evaluated through
/// the engine and checked monomial by monomial against
/// operator_form_coefficient; a mismatch raises InconsistencyError.
SeriesPoly twisted_genfun(Engine& engine, unsigned alpha, unsigned k, unsigned genus, Truncation trunc);

/// One nonzero coefficient of the J-function in the representation basis:
/// value * f_alpha * prod_beta (u^beta)^{u_powers[beta]} * z^{z_power}.
struct JTerm {
    unsigned irrep = 0;
    std::vector<unsigned> u_powers;
    int z_power = 0;
    Rational value;
};

/// J-function up to total degree max_u in u, from genus-0 correlators.  The
/// result is compared term by term with z sum_alpha f_alpha e^{u^alpha/z};
/// a mismatch raises InconsistencyError.
std::vector<JTerm> jfunction(Engine& engine, unsigned max_u);

/// sum over (n_i) with sum n_i <= max_points of prod sigma_i^{n_i}/n_i!
/// times the integral of e(E_{a_1}^vee + ...) over the genus-g component
/// with n_i points of class sectors[i].  Components that are empty, unstable,
/// or whose bundle rank differs from their dimension are absent.
struct EulerSeries {
    std::vector<unsigned> sectors;
    std::map<std::vector<unsigned>, Rational> coeffs;  // exponents of sigma_1.. -> coefficient

    /// "s1^3 s2^1"; exponent-0 variables are omitted, the constant term is "1".
    static std::string monomial_text(const std::vector<unsigned>& exponents);
    std::vector<std::pair<std::string, Rational>> terms_text() const;
};

EulerSeries euler_series(Engine& engine, const std::vector<unsigned>& bundle_irreps, const std::vector<unsigned>& sectors,
                         unsigned genus, unsigned max_points);

}  // namespace hhodge
