#include <doctest.h>

#include <functional>

#include "hhodge/error.hpp"
#include "hhodge/psi.hpp"

using namespace hhodge;

namespace {

// Genus 0: (n-3)! / prod a_i!.
Rational genus_zero(const std::vector<unsigned>& a)
{
    unsigned sum = 0;
    for (unsigned x : a) sum += x;
    if (sum + 3 != a.size()) return 0;
    Integer den = 1;
    for (unsigned x : a) den *= factorial(x);
    return make_rational(factorial(static_cast<unsigned>(a.size() - 3)), den);
}

// Every exponent vector of length n with the given sum.
void for_each_exponents(std::size_t n, unsigned sum, const std::function<void(const std::vector<unsigned>&)>& f)
{
    std::vector<unsigned> a(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == n) {
            a[i] = left;
            return f(a);
        }
        for (unsigned x = 0; x <= left; ++x) {
            a[i] = x;
            rec(i + 1, left - x);
        }
    };
    if (n > 0) rec(0, sum);
}

}  // namespace

TEST_CASE("genus zero closed form")
{
    PsiIntersections psi;
    for (std::size_t n = 3; n <= 8; ++n)
        for_each_exponents(n, static_cast<unsigned>(n - 3), [&](const std::vector<unsigned>& a) { CHECK(psi(0, a) == genus_zero(a)); });
    CHECK(psi(0, {0, 0, 0, 0, 2}) == genus_zero({0, 0, 0, 0, 2}));
}

TEST_CASE("known higher genus values")
{
    PsiIntersections psi;
    CHECK(psi(1, {1}) == make_rational(1, 24));
    for (unsigned n = 1; n <= 8; ++n) CHECK(psi(1, std::vector<unsigned>(n, 1)) == make_rational(factorial(n - 1), Integer(24)));
    CHECK(psi(2, {4}) == make_rational(1, 1152));
    CHECK(psi(2, {2, 3}) == make_rational(29, 5760));
    CHECK(psi(2, {3, 2}) == make_rational(29, 5760));
    CHECK(psi(2, {2, 2, 2}) == make_rational(7, 240));
    CHECK(psi(3, {7}) == make_rational(1, 82944));
    // <tau_{3g-2}>_g = 1 / (24^g g!)
    for (unsigned g = 1; g <= 5; ++g) CHECK(psi(g, {3 * g - 2}) == make_rational(Integer(1), Integer(power(Rational(24), g).get_num() * factorial(g))));
}

TEST_CASE("wrong dimension gives zero")
{
    PsiIntersections psi;
    CHECK(psi(0, {0, 0, 0, 1}) == 1);
    CHECK(psi(0, {0, 0, 0, 0}) == 0);
    CHECK(psi(1, {2}) == 0);
    CHECK(psi(2, {1, 1}) == 0);
}

TEST_CASE("string and dilaton equations")
{
    // Sweep every dimension-correct stable key with 3g - 3 + n <= 12 after
    // adding the extra tau_0 or tau_1.
    PsiIntersections psi;
    for (unsigned g = 0; g <= 4; ++g)
        for (std::size_t n = 1; 3 * g + n <= 12; ++n) {
            if (2 * g + n <= 2) continue;
            const unsigned dim = 3 * g - 3 + static_cast<unsigned>(n);
            for_each_exponents(n, dim + 1, [&](const std::vector<unsigned>& a) {
                std::vector<unsigned> with0 = a;
                with0.push_back(0);
                Rational expect = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (a[i] == 0) continue;
                    std::vector<unsigned> b = a;
                    --b[i];
                    expect += psi(g, b);
                }
                CHECK(psi(g, with0) == expect);
            });
            for_each_exponents(n, dim, [&](const std::vector<unsigned>& a) {
                std::vector<unsigned> with1 = a;
                with1.push_back(1);
                CHECK(psi(g, with1) == Rational(static_cast<long>(2 * g + n) - 2) * psi(g, a));
            });
        }
}

TEST_CASE("unstable input throws")
{
    PsiIntersections psi;
    CHECK_THROWS_AS(psi(0, {}), ValidationError);
    CHECK_THROWS_AS(psi(0, {0, 0}), ValidationError);
    CHECK_THROWS_AS(psi(1, {}), ValidationError);
    CHECK_THROWS_AS(psi(2, {}), ValidationError);
    CHECK(shared_psi()(1, {1}) == make_rational(1, 24));
}
