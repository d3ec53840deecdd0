#include <doctest.h>

#include <random>

#include "hhodge/classes.hpp"
#include "hhodge/error.hpp"

using namespace hhodge;

namespace {

// Elementary symmetric polynomials e_0..e_n and power sums p_1..p_n of the roots.
std::vector<Rational> elementary(const std::vector<Rational>& roots, unsigned n)
{
    std::vector<Rational> e(n + 1, Rational(0));
    e[0] = 1;
    for (const auto& x : roots)
        for (unsigned j = n; j >= 1; --j) e[j] += e[j - 1] * x;
    return e;
}

std::vector<Rational> chern_character(const std::vector<Rational>& roots, unsigned n)
{
    std::vector<Rational> ch(n + 1, Rational(0));
    ch[0] = static_cast<long>(roots.size());
    for (unsigned k = 1; k <= n; ++k) {
        Rational p = 0;
        for (const auto& x : roots) p += power(x, k);
        ch[k] = p / Rational(factorial(k));
    }
    return ch;
}

std::vector<Rational> random_roots(std::mt19937& rng, unsigned rank)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    std::vector<Rational> roots;
    for (unsigned i = 0; i < rank; ++i) roots.push_back(make_rational(num(rng), den(rng)));
    return roots;
}

}  // namespace

TEST_CASE("Newton identities against formal Chern roots")
{
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 60; ++trial) {
        const unsigned rank = trial % 5;
        const auto roots = random_roots(rng, rank);
        const unsigned n = 6;
        const auto e = elementary(roots, n);
        const auto ch = chern_character(roots, n);
        const auto c = chern_from_ch(ch, n);
        for (unsigned j = 0; j <= n; ++j) CHECK(c[j] == e[j]);
        const auto back = ch_from_chern(e, n);
        for (unsigned k = 1; k <= n; ++k) CHECK(back[k] == ch[k]);
    }
}

TEST_CASE("class expression grammar")
{
    const FiniteGroup z5 = cyclic_group(5);
    const ClassExpr expr = parse_class_expr(z5, " -2/3*c2(3)*ch1(1) + e(1, 1,3) - lam1(2)");
    REQUIRE(expr.terms.size() == 3);
    CHECK(expr.terms[0].coeff == make_rational(-2, 3));
    REQUIRE(expr.terms[0].factors.size() == 2);
    CHECK(expr.terms[0].factors[0].kind == ClassGenerator::Kind::Chern);
    CHECK(expr.terms[0].factors[0].degree == 2);
    CHECK(expr.terms[0].factors[1].kind == ClassGenerator::Kind::Ch);
    CHECK(expr.terms[1].factors[0].irreps == std::vector<unsigned>{1, 1, 3});
    CHECK(expr.terms[2].coeff == -1);
    CHECK(expr.terms[2].factors[0].kind == ClassGenerator::Kind::Lambda);
    for (const char* bad : {"", "x1(1)", "c(1)", "ch0(1)", "c1(5)", "c1(1,2)", "c1(1", "e()", "c1(1) c1(1)", "c1(1)+", "1/0", "*c1(1)"})
        CHECK_THROWS_AS(parse_class_expr(z5, bad), ParseError);
}

TEST_CASE("normalization to ch monomials")
{
    const FiniteGroup z5 = cyclic_group(5);
    Engine engine(z5);
    const std::vector<unsigned> five_w(5, 1);
    CHECK(normalize(parse_class_expr(z5, "c2(3)"), engine, 0, five_w, 2).to_string() == "1/2*ch1(3)*ch1(3) + ch2(3)");
    CHECK(normalize(parse_class_expr(z5, "c1(3)"), engine, 0, five_w, 2).to_string() == "-ch1(3)");
    CHECK(normalize(parse_class_expr(z5, "lam1(3)"), engine, 0, five_w, 2).to_string() == "ch1(3)");
    CHECK(normalize(parse_class_expr(z5, "lam2(3) - c2(3)"), engine, 0, five_w, 2).is_zero());
    // Above the rank of R^1 Chern classes vanish: E_3 has rank 2 on [w]^5.
    CHECK(normalize(parse_class_expr(z5, "c3(3)"), engine, 0, five_w, 4).is_zero());
    // Truncation at the requested degree.
    CHECK(normalize(parse_class_expr(z5, "ch1(1)*ch2(1) + 4"), engine, 0, five_w, 2).to_string() == "4");
    // Additivity over direct sums: e(E_3 + E_4) = c_top(E_3) c_top(E_4).
    const std::vector<unsigned> mixed = {1, 1, 1, 2};
    CHECK(normalize(parse_class_expr(z5, "e(3,4)"), engine, 0, mixed, 1) ==
          normalize(parse_class_expr(z5, "e(3)*e(4)"), engine, 0, mixed, 1));
}

TEST_CASE("worked Hodge integrals")
{
    const FiniteGroup z5 = cyclic_group(5);
    Engine engine(z5);
    auto eval = [&](std::string_view ins, std::string_view expr) {
        return evaluate_class(engine, 0, parse_insertions(z5, ins), parse_class_expr(z5, expr));
    };
    CHECK(eval("w:0,w2:0*2", "e(1,1,3)") == make_rational(1, 5));
    CHECK(eval("w:0*3,w2:0", "c1(3)") == make_rational(-1, 25));
    CHECK(eval("w:0*5", "c2(3)") == make_rational(1, 25));
    CHECK(eval("w:0*5", "lam2(3)") == make_rational(1, 25));
    CHECK(eval("w:0*5", "2*c2(3) - 3*c2(3)") == make_rational(-1, 25));
    // Degree differs from the dimension.
    CHECK(eval("w:0*5", "c1(3)") == 0);
    CHECK(eval("w:0*5", "e(3)") == make_rational(1, 25));
    CHECK(eval("w:0*5", "e(1)") == 0);
    // Empty component.
    CHECK(eval("w:0*4", "ch1(1)") == 0);
    CHECK_THROWS_AS(eval("w:0,w4:0", "c1(1)"), ValidationError);
}

TEST_CASE("trivial group lambda classes")
{
    const FiniteGroup triv = cyclic_group(1);
    Engine engine(triv);
    auto eval = [&](unsigned genus, std::string_view ins, std::string_view expr) {
        return evaluate_class(engine, genus, parse_insertions(triv, ins), parse_class_expr(triv, expr));
    };
    // lam_j is the usual lambda_j; c_j(E^vee) = (-1)^j lambda_j.
    CHECK(eval(1, "1:0", "lam1(0)") == make_rational(1, 24));
    CHECK(eval(1, "1:0", "c1(0)") == make_rational(-1, 24));
    CHECK(eval(2, "1:2", "lam2(0)") == make_rational(7, 5760));
    // Dilaton: psi_1 pulled back from no points gives a factor 2g - 2.
    CHECK(eval(2, "1:1", "lam1(0)*lam1(0)*lam1(0)") == make_rational(2, 2880));
    CHECK(eval(2, "1:1", "lam2(0)*lam1(0)") == make_rational(2, 5760));
    CHECK(eval(3, "1:1", "lam3(0)*lam2(0)*lam1(0)") == make_rational(4, 1451520));
}
