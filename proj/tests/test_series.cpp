#include <doctest.h>

#include <stdexcept>

#include "hhodge/classes.hpp"
#include "hhodge/error.hpp"
#include "hhodge/selftest.hpp"
#include "hhodge/series.hpp"

using namespace hhodge;

namespace {

// Coefficient straight from the definition: <prod tau>_g Omega / prod m!.
Rational by_definition(Engine& engine, unsigned genus, const std::vector<Insertion>& monomial)
{
    std::vector<unsigned> exps, classes;
    for (const auto& i : monomial) {
        exps.push_back(i.psi);
        classes.push_back(i.cls);
    }
    const Rational omega = engine.omega().by_characters(genus, classes);
    return PsiIntersections()(genus, exps) * omega / Rational(symmetry_factor(monomial));
}

}  // namespace

TEST_CASE("symmetry factors and monomial text")
{
    const FiniteGroup z3 = cyclic_group(3);
    const auto m = parse_insertions(z3, "w:0*2,w2:1,1:0*3");
    CHECK(symmetry_factor(m) == 12);
    CHECK(SeriesPoly::monomial_text(z3, m) == "t0[1]^3 t0[w]^2 t1[w2]^1");
    CHECK(EulerSeries::monomial_text({1, 0, 3}) == "s1^1 s3^3");
    CHECK(EulerSeries::monomial_text({0, 0}) == "1");
}

TEST_CASE("potential examples")
{
    const FiniteGroup z3 = cyclic_group(3);
    Engine engine(z3);
    const SeriesPoly f0 = potential(engine, 0, {5, 3});
    CHECK(f0.coefficient(parse_insertions(z3, "1:0,w:0,w2:0")) == make_rational(1, 3));
    CHECK(f0.coefficient(parse_insertions(z3, "1:0*3")) == make_rational(1, 18));
    CHECK(f0.coefficient(parse_insertions(z3, "w:0*2")) == 0);
    CHECK(f0.coefficient(parse_insertions(z3, "w:0*4")) == 0);
    CHECK_THROWS_AS(f0.coefficient(parse_insertions(z3, "w:0*6")), std::out_of_range);
    CHECK_THROWS_AS(f0.coefficient(parse_insertions(z3, "w:4,w:0*3")), std::out_of_range);
    const SeriesPoly f1 = potential(engine, 1, {3, 3});
    CHECK(f1.coefficient(parse_insertions(z3, "1:1")) == make_rational(1, 8));
    CHECK(f1.coefficient(parse_insertions(z3, "1:1*2")) == make_rational(1, 16));

    const FiniteGroup triv = cyclic_group(1);
    Engine trivial(triv);
    CHECK(potential(trivial, 0, {3, 0}).coefficient(parse_insertions(triv, "1:0*3")) == make_rational(1, 6));
}

TEST_CASE("potential agrees with the definition for several groups")
{
    const FiniteGroup s3 = load_group(bundled_s3_group_text());
    for (const FiniteGroup& g : {cyclic_group(2), cyclic_group(3), cyclic_group(5), s3}) {
        Engine engine(g);
        for (unsigned genus = 0; genus <= 2; ++genus) {
            const unsigned points = genus == 2 ? 4 : 6;
            const Truncation trunc{points, 4};
            const SeriesPoly f = potential(engine, genus, trunc);
            std::size_t nonzero = 0;
            for (const auto& m : dimension_monomials(g, genus, trunc, 0, false)) {
                const Rational want = by_definition(engine, genus, m);
                INFO(g.name() << " g=" << genus << " " << SeriesPoly::monomial_text(g, m));
                CHECK(f.coefficient(m) == want);
                CHECK(potential_coefficient_by_representations(engine, genus, m) == want);
                nonzero += want != 0;
            }
            CHECK(f.coeffs.size() == nonzero);
        }
    }
}

TEST_CASE("twisted generating functions")
{
    const FiniteGroup z2 = cyclic_group(2);
    Engine engine(z2);
    const SeriesPoly s = twisted_genfun(engine, 1, 1, 0, {4, 1});
    CHECK(s.coefficient(parse_insertions(z2, "w:0*4")) == make_rational(1, 96));
    for (const auto& [m, c] : s.coeffs) {
        unsigned psi = 0;
        for (const auto& i : m) psi += i.psi;
        CHECK(psi + 1 + 3 == m.size());
    }

    const FiniteGroup z3 = cyclic_group(3);
    Engine e3(z3);
    const SeriesPoly g0 = twisted_genfun(e3, 1, 1, 0, {4, 2});
    CHECK(g0.coefficient(parse_insertions(z3, "w:0*2,w2:0*2")) == make_rational(1, 36));
    const SeriesPoly g1 = twisted_genfun(e3, 1, 1, 1, {2, 2});
    CHECK(g1.coefficient(parse_insertions(z3, "1:0")) == make_rational(1, 72));
    CHECK(g1.coefficient(parse_insertions(z3, "1:0,1:1")) == make_rational(1, 72));
    CHECK(g1.coefficient(parse_insertions(z3, "1:1")) == 0);
}

TEST_CASE("operator form matches direct evaluation")
{
    const FiniteGroup s3 = load_group(bundled_s3_group_text());
    for (const FiniteGroup& g : {cyclic_group(3), cyclic_group(4), s3}) {
        Engine engine(g);
        for (unsigned genus = 0; genus <= 1; ++genus)
            for (unsigned k = 1; k <= 2; ++k)
                for (unsigned alpha = 0; alpha < g.irreps().size(); ++alpha)
                    for (const auto& m : dimension_monomials(g, genus, {4, 3}, k, true)) {
                        if (2 * genus + m.size() <= 2) continue;
                        INFO(g.name() << " g=" << genus << " ch" << k << "(" << alpha << ") " << SeriesPoly::monomial_text(g, m));
                        const Rational direct = engine.twisted_correlator({genus, m, {{k, alpha}}});
                        CHECK(operator_form_coefficient(engine, alpha, k, genus, m) * Rational(symmetry_factor(m)) == direct);
                    }
    }
}

TEST_CASE("J-function")
{
    const FiniteGroup z3 = cyclic_group(3);
    Engine engine(z3);
    const auto terms = jfunction(engine, 4);
    auto find = [&](unsigned irrep, unsigned u, int z) -> std::optional<Rational> {
        for (const auto& t : terms)
            if (t.irrep == irrep && t.u_powers[irrep] == u && t.z_power == z) return t.value;
        return std::nullopt;
    };
    for (unsigned a = 0; a < 3; ++a) {
        CHECK(find(a, 1, 0) == Rational(1));
        CHECK(find(a, 2, -1) == make_rational(1, 2));
        CHECK(find(a, 4, -3) == make_rational(1, 24));
    }
    for (const auto& t : terms) {
        unsigned others = 0;
        for (unsigned b = 0; b < 3; ++b)
            if (b != t.irrep) others += t.u_powers[b];
        CHECK(others == 0);
    }
}

TEST_CASE("Euler-class series")
{
    const FiniteGroup z5 = cyclic_group(5);
    Engine engine(z5);
    const EulerSeries s = euler_series(engine, {1, 1, 3}, {1, 2}, 0, 5);
    auto coeff = [&](unsigned n1, unsigned n2) {
        auto it = s.coeffs.find({n1, n2});
        return it == s.coeffs.end() ? std::optional<Rational>() : std::optional<Rational>(it->second);
    };
    CHECK(coeff(1, 2) == make_rational(1, 10));
    // Direct oracle: evaluate_class divided by n1! n2!.
    const ClassExpr e = parse_class_expr(z5, "e(1,1,3)");
    for (unsigned n1 = 0; n1 <= 5; ++n1)
        for (unsigned n2 = 0; n1 + n2 <= 5; ++n2) {
            if ((n1 + 2 * n2) % 5 != 0) {
                CHECK(!coeff(n1, n2));
                continue;
            }
            if (n1 + n2 < 3) continue;
            std::vector<Insertion> ins(n1, Insertion{1, 0});
            ins.insert(ins.end(), n2, Insertion{2, 0});
            const Rational want = evaluate_class(engine, 0, ins, e) / Rational(factorial(n1) * factorial(n2));
            CHECK(coeff(n1, n2).value_or(0) == want);
        }
    const auto text = s.terms_text();
    CHECK(!text.empty());
    CHECK(std::is_sorted(text.begin(), text.end()));
}
