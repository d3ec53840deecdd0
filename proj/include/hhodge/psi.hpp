#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "hhodge/rational.hpp"

namespace hhodge {

/// Intersection numbers <tau_{a_1} ... tau_{a_n}>_g on the moduli of stable
/// curves.  Memoized on (g, sorted exponents); safe for concurrent callers.
class PsiIntersections {
public:
    /// Throws ValidationError("unstable moduli ...") unless n > 0 and 2g - 2 + n > 0.
    /// Exponents may be given in any order.
    Rational operator()(unsigned genus, std::vector<unsigned> exponents);

    std::size_t memo_size() const;

private:
    Rational eval(unsigned genus, std::vector<unsigned> exponents);
    Rational recurse(unsigned genus, const std::vector<unsigned>& sorted);

    mutable std::mutex mutex_;
    std::map<std::vector<unsigned>, Rational> memo_;  // key: genus followed by sorted exponents
};

/// Process-wide instance; the values do not depend on any group.
PsiIntersections& shared_psi();

}  // namespace hhodge
