#include "hhodge/psi.hpp"

#include <algorithm>

#include "hhodge/error.hpp"

namespace hhodge {

namespace {

// (2n-1)!! with (-1)!! = 1.
Integer odd_double_factorial(int two_n_minus_one)
{
    Integer r = 1;
    for (int j = two_n_minus_one; j > 1; j -= 2) r *= j;
    return r;
}

// n = 0 counts as unstable in every genus.
bool stable(unsigned genus, std::size_t n)
{
    return n > 0 && 2 * static_cast<long>(genus) - 2 + static_cast<long>(n) > 0;
}

}  // namespace

Rational PsiIntersections::operator()(unsigned genus, std::vector<unsigned> exponents)
{
    if (!stable(genus, exponents.size()))
        throw ValidationError("unstable moduli: g=" + std::to_string(genus) + ", n=" + std::to_string(exponents.size()));
    return eval(genus, std::move(exponents));
}

std::size_t PsiIntersections::memo_size() const
{
    std::lock_guard lock(mutex_);
    return memo_.size();
}

Rational PsiIntersections::eval(unsigned genus, std::vector<unsigned> exponents)
{
    if (!stable(genus, exponents.size())) return 0;
    long total = 0;
    for (unsigned a : exponents) total += a;
    if (total != 3 * static_cast<long>(genus) - 3 + static_cast<long>(exponents.size())) return 0;

    std::sort(exponents.begin(), exponents.end());
    std::vector<unsigned> key;
    key.reserve(exponents.size() + 1);
    key.push_back(genus);
    key.insert(key.end(), exponents.begin(), exponents.end());
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Rational value = recurse(genus, exponents);
    std::lock_guard lock(mutex_);
    memo_.emplace(std::move(key), value);
    return value;
}

Rational PsiIntersections::recurse(unsigned genus, const std::vector<unsigned>& a)
{
    const std::size_t n = a.size();
    if (genus == 0 && n == 3) return 1;  // dimension forces a = (0,0,0)
    if (genus == 1 && n == 1) return make_rational(1, 24);

    // String equation.
    if (a.front() == 0) {
        std::vector<unsigned> rest(a.begin() + 1, a.end());
        Rational sum = 0;
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (rest[j] == 0 || (j > 0 && rest[j] == rest[j - 1])) continue;
            std::size_t mult = std::count(rest.begin(), rest.end(), rest[j]);
            auto reduced = rest;
            --reduced[j];
            sum += Rational(static_cast<long>(mult)) * eval(genus, std::move(reduced));
        }
        return sum;
    }
    // Dilaton equation.
    if (a.front() == 1) {
        std::vector<unsigned> rest(a.begin() + 1, a.end());
        const Rational factor(2 * static_cast<long>(genus) - 2 + static_cast<long>(rest.size()));
        return factor * eval(genus, std::move(rest));
    }

    // DVV on the largest exponent a_max = k + 1, k >= 1.
    const int k = static_cast<int>(a.back()) - 1;
    std::vector<unsigned> d(a.begin(), a.end() - 1);
    const std::size_t m = d.size();
    Rational sum = 0;

    for (std::size_t j = 0; j < m; ++j) {
        auto next = d;
        next[j] += static_cast<unsigned>(k);
        sum += make_rational(odd_double_factorial(2 * k + 2 * static_cast<int>(d[j]) + 1),
                        odd_double_factorial(2 * static_cast<int>(d[j]) - 1)) *
               eval(genus, std::move(next));
    }

    Rational quad = 0;
    for (int r = 0; r <= k - 1; ++r) {
        const int s = k - 1 - r;
        const Rational w(odd_double_factorial(2 * r + 1) * odd_double_factorial(2 * s + 1));
        if (genus >= 1) {
            auto next = d;
            next.push_back(static_cast<unsigned>(r));
            next.push_back(static_cast<unsigned>(s));
            quad += w * eval(genus - 1, std::move(next));
        }
        for (unsigned g1 = 0; g1 <= genus; ++g1) {
            const unsigned g2 = genus - g1;
            for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
                std::vector<unsigned> left{static_cast<unsigned>(r)}, right{static_cast<unsigned>(s)};
                long left_sum = r;
                for (std::size_t j = 0; j < m; ++j) {
                    if (mask >> j & 1) {
                        left.push_back(d[j]);
                        left_sum += d[j];
                    } else {
                        right.push_back(d[j]);
                    }
                }
                if (left_sum != 3 * static_cast<long>(g1) - 3 + static_cast<long>(left.size())) continue;
                Rational lv = eval(g1, std::move(left));
                if (lv == 0) continue;
                quad += w * lv * eval(g2, std::move(right));
            }
        }
    }
    sum += quad / 2;
    return sum / Rational(odd_double_factorial(2 * k + 3));
}

PsiIntersections& shared_psi()
{
    static PsiIntersections instance;
    return instance;
}

}  // namespace hhodge
