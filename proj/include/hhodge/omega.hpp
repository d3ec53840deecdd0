#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "hhodge/group.hpp"
#include "hhodge/rational.hpp"

namespace hhodge {

/// Omega_g^G(gamma_1, ..., gamma_n): the degree of the map from the
/// component of twisted stable maps with these monodromies to the moduli of
/// curves.  Memoized on (g, sorted classes); safe for concurrent callers.
class OmegaTable {
public:
    explicit OmegaTable(const FiniteGroup& group) : group_(group) {}

    /// Abelian groups use the monodromy product, others the character sum.
    Rational operator()(unsigned genus, std::vector<unsigned> classes);

    /// True when Omega is 0; for abelian groups a product check with no lookup.
    bool vanishes(unsigned genus, const std::vector<unsigned>& classes);

    /// Class of the product of the classes.  Abelian only.
    unsigned monodromy(const std::vector<unsigned>& classes) const;

    /// |G|^{2g-1} if the product of the classes is trivial, else 0.  Abelian only.
    Rational by_monodromy(unsigned genus, const std::vector<unsigned>& classes) const;

    /// sum_alpha nu_alpha^{1-g} prod_i |G| chi_alpha(gamma_i) / (|C(gamma_i)| dim V_alpha),
    /// with nu_alpha = (dim V_alpha / |G|)^2.
    Rational by_characters(unsigned genus, const std::vector<unsigned>& classes) const;

    const FiniteGroup& group() const noexcept { return group_; }

private:
    const FiniteGroup& group_;
    mutable std::mutex mutex_;
    std::map<std::vector<unsigned>, Rational> memo_;
};

}  // namespace hhodge
