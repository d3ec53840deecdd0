#include <doctest.h>

#include <complex>
#include <random>

#include "hhodge/bernoulli.hpp"
#include "hhodge/cyclotomic.hpp"
#include "hhodge/error.hpp"
#include "hhodge/rational.hpp"

using namespace hhodge;

namespace {

// Akiyama-Tanigawa: B_n with B_1 = +1/2.
Rational akiyama_tanigawa(unsigned n)
{
    std::vector<Rational> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = make_rational(1, m + 1);
        for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    }
    return a[0];
}

Cyclotomic random_cyclotomic(std::mt19937& rng, unsigned n)
{
    std::uniform_int_distribution<int> coeff(-5, 5), den(1, 4);
    Cyclotomic out;
    for (unsigned j = 0; j < n; ++j)
        out += Cyclotomic(make_rational(coeff(rng), den(rng))) * Cyclotomic::root_of_unity(n, j);
    return out;
}

std::complex<double> numeric(const Cyclotomic& x)
{
    const double pi = std::acos(-1.0);
    std::complex<double> out = 0;
    const auto& c = x.coefficients();
    for (std::size_t j = 0; j < c.size(); ++j)
        out += c[j].get_d() * std::polar(1.0, 2 * pi * static_cast<double>(j) / x.conductor());
    return out;
}

}  // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(parse_rational(" -7 ") == Rational(-7));
    CHECK(parse_rational("+0/5") == 0);
    CHECK(to_fraction_string(make_rational(0, 5)) == "0/1");
    CHECK(to_fraction_string(make_rational(-4, 6)) == "-2/3");
    CHECK(to_string(Rational(3)) == "3");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("/3"), ParseError);
    CHECK(parse_rational("123456789012345678901234567890/3") ==
          make_rational(Integer("41152263004115226300411522630"), Integer(1)));
}

TEST_CASE("factorials, binomials, powers")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(power(make_rational(2, 3), 3) == make_rational(8, 27));
    CHECK(power(make_rational(2, 3), -2) == make_rational(9, 4));
    CHECK(power(Rational(5), 0) == 1);
}

TEST_CASE("Bernoulli numbers against Akiyama-Tanigawa")
{
    for (unsigned n = 0; n <= 30; ++n) {
        const Rational expected = n == 1 ? make_rational(-1, 2) : akiyama_tanigawa(n);
        CHECK_MESSAGE(bernoulli_number(n) == expected, "n = " << n);
    }
}

TEST_CASE("Bernoulli polynomials: translation and reflection")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    for (int trial = 0; trial < 40; ++trial) {
        const Rational x = make_rational(num(rng), den(rng));
        for (unsigned n = 1; n <= 10; ++n) {
            // B_n(x + 1) - B_n(x) = n x^{n-1}
            CHECK(bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) == Rational(n) * power(x, n - 1));
            // B_n(1 - x) = (-1)^n B_n(x)
            CHECK(bernoulli_poly(n, 1 - x) == (n % 2 ? -1 : 1) * bernoulli_poly(n, x));
        }
    }
    CHECK(bernoulli_poly(2, make_rational(3, 5)) == make_rational(-11, 150));
    CHECK(bernoulli_poly(0, make_rational(1, 3)) == 1);
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    for (unsigned n = 1; n <= 40; ++n) CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
}

TEST_CASE("cyclotomic field axioms")
{
    std::mt19937 rng(11);
    for (unsigned n : {3u, 4u, 5u, 6u, 12u, 15u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const Cyclotomic a = random_cyclotomic(rng, n), b = random_cyclotomic(rng, n), c = random_cyclotomic(rng, n);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Cyclotomic(0));
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
            CHECK(std::abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-9);
            CHECK(std::abs(numeric(a.conjugate()) - std::conj(numeric(a))) < 1e-9);
            for (unsigned t = 1; t < n; ++t)
                if (std::gcd(t, n) == 1) CHECK((a * b).galois(t) == a.galois(t) * b.galois(t));
        }
    }
}

TEST_CASE("mixed conductors embed into the lcm")
{
    const Cyclotomic w3 = Cyclotomic::root_of_unity(3, 1), w4 = Cyclotomic::root_of_unity(4, 1);
    const Cyclotomic prod = w3 * w4;
    CHECK(prod.conductor() == 12);
    CHECK(prod == Cyclotomic::root_of_unity(12, 7));
    CHECK(w3 + w3.conjugate() == Cyclotomic(-1));
    CHECK((w4 * w4).to_rational() == -1);
    CHECK_THROWS_AS(w3.to_rational(), InconsistencyError);
}

TEST_CASE("root-of-unity sum against floating point")
{
    const double pi = std::acos(-1.0);
    for (unsigned m = 2; m <= 9; ++m)
        for (unsigned l = 0; l < m; ++l) {
            std::complex<double> s = 0;
            for (unsigned j = 1; j < m; ++j)
                s += std::polar(1.0, 2 * pi * j * l / m) / (1.0 - std::polar(1.0, -2 * pi * j / m));
            CHECK(std::abs(s.imag()) < 1e-9);
            CHECK(std::abs(s.real() - root_of_unity_sum(m, l).get_d()) < 1e-9);
        }
}
