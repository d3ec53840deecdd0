#include "hhodge/omega.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhodge {

Rational OmegaTable::operator()(unsigned genus, std::vector<unsigned> classes)
{
    if (group_.is_abelian() && monodromy(classes) != 0) return 0;
    std::sort(classes.begin(), classes.end());
    std::vector<unsigned> key{genus};
    key.insert(key.end(), classes.begin(), classes.end());
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Rational value = group_.is_abelian() ? by_monodromy(genus, classes) : by_characters(genus, classes);
    std::lock_guard lock(mutex_);
    memo_.emplace(std::move(key), value);
    return value;
}

unsigned OmegaTable::monodromy(const std::vector<unsigned>& classes) const
{
    unsigned product = 0;
    for (unsigned c : classes) product = group_.multiply(product, c);
    return product;
}

bool OmegaTable::vanishes(unsigned genus, const std::vector<unsigned>& classes)
{
    if (group_.is_abelian()) return monodromy(classes) != 0;
    return (*this)(genus, classes) == 0;
}

Rational OmegaTable::by_monodromy(unsigned genus, const std::vector<unsigned>& classes) const
{
    if (!group_.is_abelian()) throw std::logic_error("by_monodromy requires an abelian group");
    if (monodromy(classes) != 0) return 0;
    return power(Rational(group_.order()), 2 * static_cast<long>(genus) - 1);
}

Rational OmegaTable::by_characters(unsigned genus, const std::vector<unsigned>& classes) const
{
    const Rational order(group_.order());
    Cyclotomic total;
    for (unsigned a = 0; a < group_.num_classes(); ++a) {
        const Rational dim(group_.irrep(a).dim);
        const Rational nu = (dim / order) * (dim / order);
        Cyclotomic term(power(nu, 1 - static_cast<long>(genus)));
        for (unsigned c : classes)
            term *= group_.character(a, c) *
                    Cyclotomic(order / (Rational(group_.centralizer_order(c)) * dim));
        total += term;
    }
    return total.to_rational();
}

}  // namespace hhodge
