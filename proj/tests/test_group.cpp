#include <doctest.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iterator>
#include <string>

#include "hhodge/error.hpp"
#include "hhodge/group.hpp"
#include "hhodge/omega.hpp"
#include "hhodge/selftest.hpp"

using namespace hhodge;

namespace {

// Brute-force S3 as permutations of {0,1,2}.
using Perm = std::array<int, 3>;

std::vector<Perm> s3_elements()
{
    std::vector<Perm> out;
    Perm p{0, 1, 2};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Perm compose(const Perm& a, const Perm& b)  // a after b
{
    return {a[b[0]], a[b[1]], a[b[2]]};
}

Perm inverse(const Perm& a)
{
    Perm r{};
    for (int i = 0; i < 3; ++i) r[a[i]] = i;
    return r;
}

int fixed_points(const Perm& p)
{
    return (p[0] == 0) + (p[1] == 1) + (p[2] == 2);
}

// Class index in the bundled file: e, t, c.
unsigned class_of(const Perm& p)
{
    switch (fixed_points(p)) {
        case 3: return 0;
        case 1: return 1;
        default: return 2;
    }
}

const Perm kIdentity{0, 1, 2};

// #{(a_1, b_1, ..., a_g, b_g, x_1..x_n) : prod [a_i, b_i] prod x_i = 1, x_i in class c_i} / |G|.
Rational omega_by_counting(unsigned genus, const std::vector<unsigned>& classes)
{
    const auto elems = s3_elements();
    long count = 0;
    std::function<void(std::size_t, const Perm&)> points = [&](std::size_t i, const Perm& acc) {
        if (i == classes.size()) {
            if (acc == kIdentity) ++count;
            return;
        }
        for (const auto& x : elems)
            if (class_of(x) == classes[i]) points(i + 1, compose(acc, x));
    };
    std::function<void(unsigned, const Perm&)> handles = [&](unsigned h, const Perm& acc) {
        if (h == genus) return points(0, acc);
        for (const auto& a : elems)
            for (const auto& b : elems) handles(h + 1, compose(acc, compose(compose(a, b), compose(inverse(a), inverse(b)))));
    };
    handles(0, kIdentity);
    return make_rational(count, 6);
}

FiniteGroup s3()
{
    return load_group(bundled_s3_group_text());
}

std::string replace(std::string text, const std::string& from, const std::string& to)
{
    auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("bundled S3 file matches the data directory copy")
{
    std::ifstream in(std::string(HHODGE_DATA_DIR) + "/groups/s3.group");
    REQUIRE(in);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == bundled_s3_group_text());
}

TEST_CASE("S3 character data agrees with permutations")
{
    const FiniteGroup g = s3();
    CHECK(g.name() == "S3");
    CHECK(!g.is_abelian());
    const auto elems = s3_elements();
    for (unsigned c = 0; c < 3; ++c) {
        long size = 0;
        for (const auto& p : elems) size += class_of(p) == c;
        CHECK(g.conj_class(c).size == size);
    }
    for (const auto& p : elems) {
        const unsigned c = class_of(p);
        CHECK(g.character(0, c) == Cyclotomic(1));
        CHECK(g.character(1, c) == Cyclotomic(fixed_points(p) == 1 ? -1 : 1));
        CHECK(g.character(2, c) == Cyclotomic(fixed_points(p) - 1));
    }
}

TEST_CASE("S3 structure constants by counting")
{
    const FiniteGroup g = s3();
    const auto elems = s3_elements();
    for (unsigned c1 = 0; c1 < 3; ++c1)
        for (unsigned c2 = 0; c2 < 3; ++c2)
            for (unsigned c3 = 0; c3 < 3; ++c3) {
                const Perm z = *std::find_if(elems.begin(), elems.end(), [&](const Perm& p) { return class_of(p) == c3; });
                long count = 0;
                for (const auto& a : elems)
                    for (const auto& b : elems)
                        if (class_of(a) == c1 && class_of(b) == c2 && compose(a, b) == z) ++count;
                CHECK(g.structure_constant(c1, c2, c3) == count);
            }
    // e_t e_t = 3 e_e + 3 e_c
    const HVector tt = class_product(g, 1, 1);
    CHECK(tt.coeffs[0] == Cyclotomic(3));
    CHECK(tt.coeffs[1] == Cyclotomic(0));
    CHECK(tt.coeffs[2] == Cyclotomic(3));
}

TEST_CASE("S3 Omega by counting homomorphisms")
{
    const FiniteGroup g = s3();
    OmegaTable omega(g);
    for (unsigned genus = 0; genus <= 1; ++genus)
        for (unsigned n = 0; n <= 4; ++n) {
            std::vector<unsigned> cls(n, 0);
            std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned from) {
                if (i == n) {
                    CHECK_MESSAGE(omega(genus, cls) == omega_by_counting(genus, cls), "genus " << genus << " n " << n);
                    return;
                }
                for (unsigned c = from; c < 3; ++c) {
                    cls[i] = c;
                    rec(i + 1, c);
                }
            };
            rec(0, 0);
        }
    CHECK(omega(2, {}) == omega_by_counting(2, {}));
    CHECK(omega(2, {1, 1}) == omega_by_counting(2, {1, 1}));
}

TEST_CASE("eigenvalue multiplicities")
{
    const FiniteGroup g = s3();
    CHECK(g.eig_multiplicities(2, 2) == std::vector<unsigned>{0, 1, 1});
    CHECK(g.eig_multiplicities(2, 1) == std::vector<unsigned>{1, 1});
    CHECK(g.eig_multiplicities(1, 1) == std::vector<unsigned>{0, 1});
    CHECK(g.eig_multiplicities(2, 0) == std::vector<unsigned>{2});
    const FiniteGroup z5 = cyclic_group(5);
    CHECK(z5.eig_multiplicities(3, 1) == std::vector<unsigned>{0, 0, 0, 1, 0});
    CHECK(z5.eig_multiplicities(3, 2) == std::vector<unsigned>{0, 1, 0, 0, 0});
}

TEST_CASE("cyclic groups")
{
    const FiniteGroup z5 = cyclic_group(5);
    CHECK(z5.name() == "Z5");
    CHECK(z5.is_abelian());
    CHECK(z5.class_index("w3") == 3u);
    CHECK(z5.class_index("1") == 0u);
    CHECK(!z5.class_index("w5"));
    CHECK(z5.multiply(3, 4) == 2);
    CHECK(z5.conj_class(2).inverse == 3);
    CHECK(z5.character(2, 3) == Cyclotomic::root_of_unity(5, 1));
    const FiniteGroup z1 = cyclic_group(1);
    CHECK(z1.num_classes() == 1);
    CHECK(resolve_group("Z3").order() == 3);
    CHECK_THROWS_AS(cyclic_group(0), ValidationError);
}

TEST_CASE("Z5 group file equals the builtin")
{
    const FiniteGroup file = load_group_file(std::string(HHODGE_DATA_DIR) + "/groups/z5.group");
    const FiniteGroup builtin = cyclic_group(5);
    CHECK(file.canonical_text() == builtin.canonical_text());
    CHECK(file.fingerprint() == builtin.fingerprint());
    for (unsigned a = 0; a < 5; ++a)
        for (unsigned c = 0; c < 5; ++c) CHECK(file.character(a, c) == builtin.character(a, c));
}

TEST_CASE("canonical text round trips")
{
    for (const FiniteGroup& g : {s3(), cyclic_group(4), cyclic_group(6)}) {
        const FiniteGroup again = load_group(g.canonical_text());
        CHECK(again.canonical_text() == g.canonical_text());
        CHECK(again.fingerprint() == g.fingerprint());
        CHECK(g.fingerprint().size() == 16);
    }
    const std::string spaced = replace(std::string(bundled_s3_group_text()), "values= 2; 0; -1", "values =2 ;0;  -1");
    CHECK(load_group(spaced).fingerprint() == s3().fingerprint());
}

TEST_CASE("character value grammar")
{
    CHECK(parse_character_value("z5^2") == Cyclotomic::root_of_unity(5, 2));
    CHECK(parse_character_value("-1 - z3^1") == Cyclotomic::root_of_unity(3, 2));
    CHECK(parse_character_value("1/2*z4^1 + 1/2*z4^3") == Cyclotomic(0));
    CHECK(parse_character_value("3/4") == Cyclotomic(make_rational(3, 4)));
    for (const char* bad : {"", "z^1", "z5", "2*", "1/0", "w5^1", "z0^1", "1 +"}) CHECK_THROWS_AS(parse_character_value(bad), ParseError);
}

TEST_CASE("group file parse errors carry line numbers")
{
    const std::string text(bundled_s3_group_text());
    auto line_of = [](const std::string& bad) -> std::string {
        try {
            load_group(bad);
        } catch (const ParseError& e) {
            return e.what();
        }
        return "no error";
    };
    CHECK(line_of(replace(text, "order 6", "order six")).rfind("line 3:", 0) == 0);
    CHECK(line_of(replace(text, "powers t: e,t", "power t: e,t")).rfind("line 8:", 0) == 0);
    CHECK(line_of(replace(text, "powers t: e,t", "powers q: e,t")).rfind("line 8:", 0) == 0);
    CHECK(line_of(replace(text, "values= 1; -1; 1", "values= 1; -1; x")).rfind("line 11:", 0) == 0);
    CHECK(line_of(replace(text, "class t size=3", "class t sz=3")).rfind("line 5:", 0) == 0);
    CHECK_THROWS_AS(load_group(replace(text, "group S3\n", "")), ParseError);
    CHECK_THROWS_AS(load_group_file("/nonexistent/file.group"), Error);
}

TEST_CASE("group validation rejects inconsistent data")
{
    const std::string text(bundled_s3_group_text());
    const std::vector<std::pair<std::string, std::string>> broken = {
        {"order 6", "order 7"},
        {"class t size=3", "class t size=2"},
        {"powers c: e,c,c", "powers c: e,c,t"},
        {"powers c: e,c,c", "powers c: e,c"},
        {"values= 2; 0; -1", "values= 2; 0; 1"},
        {"values= 1; -1; 1", "values= 1; 1; 1"},
        {"irrep std  dim=2", "irrep std  dim=1"},
        {"values= 1; 1; 1", "values= 1; -1; 1"},
        {"class t size=3 elemorder=2", "class t size=3 elemorder=3"},
        {"class c size=2 elemorder=3 inverse=c", "class c size=2 elemorder=3 inverse=t"},
        {"irrep sign", "irrep triv"},
    };
    for (const auto& [from, to] : broken) {
        INFO(to);
        CHECK_THROWS_AS(load_group(replace(text, from, to)), Error);
    }
    CHECK_THROWS_AS(load_group(replace(replace(text, "class t ", "class t:x "), "powers t: e,t", "powers t:x: e,t:x")), Error);
}

TEST_CASE("metric and basis change")
{
    for (const FiniteGroup& g : {s3(), cyclic_group(5)}) {
        const Metric m = metric(g);
        const std::size_t n = g.num_classes();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational acc = 0;
                for (std::size_t k = 0; k < n; ++k) acc += m.lower[i][k] * m.upper[k][j];
                CHECK(acc == (i == j ? 1 : 0));
            }
        for (std::size_t c = 0; c < n; ++c) {
            const HVector e = HVector::unit(Basis::Class, n, c);
            CHECK(basis_change(g, basis_change(g, e)) == e);
        }
        // f_alpha f_beta = delta_ab f_alpha
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const HVector fa = basis_change(g, HVector::unit(Basis::Representation, n, a));
                const HVector fb = basis_change(g, HVector::unit(Basis::Representation, n, b));
                const HVector prod = basis_change(g, multiply(g, fa, fb));
                CHECK(prod == (a == b ? HVector::unit(Basis::Representation, n, a)
                                      : HVector{Basis::Representation, std::vector<Cyclotomic>(n)}));
            }
    }
}
