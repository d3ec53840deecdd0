#include "hhodge/bernoulli.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hhodge {

namespace {

struct RationalLess {
    bool operator()(const std::pair<unsigned, Rational>& a, const std::pair<unsigned, Rational>& b) const
    {
        if (a.first != b.first) return a.first < b.first;
        return cmp(a.second, b.second) < 0;
    }
};

}  // namespace

Rational bernoulli_number(unsigned m)
{
    thread_local std::vector<Rational> table{Rational(1)};
    while (table.size() <= m) {
        const unsigned n = static_cast<unsigned>(table.size());
        Rational acc = 0;
        for (unsigned j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * table[j];
        table.push_back(-acc / Rational(n + 1));
    }
    return table[m];
}

Rational bernoulli_poly(unsigned m, const Rational& x)
{
    thread_local std::map<std::pair<unsigned, Rational>, Rational, RationalLess> memo;
    auto key = std::make_pair(m, x);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Horner in x over the coefficients binom(m, j) B_{m-j}.
    Rational acc = 0;
    for (unsigned j = 0; j <= m; ++j) acc = acc * x + Rational(binomial(m, j)) * bernoulli_number(j);
    memo.emplace(std::move(key), acc);
    return acc;
}

}  // namespace hhodge
