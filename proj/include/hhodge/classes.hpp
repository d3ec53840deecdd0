#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hhodge/engine.hpp"
#include "hhodge/rational.hpp"

namespace hhodge {

/// One generator of the class algebra.  Bundles are E_a^vee = R^1 pi_* f^* E_a;
/// Ch is ch_k of the virtual class F_a = R^0 - R^1.
struct ClassGenerator {
    enum class Kind { Ch, Chern, Lambda, Euler };
    Kind kind = Kind::Ch;
    unsigned degree = 0;             // k or j; unused for Euler
    std::vector<unsigned> irreps;    // one entry, or the summands of an Euler class
};

struct ClassTerm {
    Rational coeff = 1;
    std::vector<ClassGenerator> factors;
};

/// Formal polynomial in the generators.
struct ClassExpr {
    std::vector<ClassTerm> terms;
};

/// Grammar: ['+'|'-'] term (('+'|'-') term)*, term := factor ('*' factor)*,
/// factor := rational | e(a,b,...) | c<j>(a) | lam<j>(a) | ch<k>(a).
ClassExpr parse_class_expr(const FiniteGroup& g, std::string_view text);

/// Linear combination of ch-monomials; the empty monomial is the scalar part.
class ChPolynomial {
public:
    using Monomial = std::vector<ChInsertion>;  // sorted

    ChPolynomial() = default;
    ChPolynomial(const Rational& scalar);  // NOLINT
    static ChPolynomial generator(ChInsertion ch);

    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Drops every monomial of total degree above max_degree.
    void truncate(unsigned max_degree);

    ChPolynomial& operator+=(const ChPolynomial& o);
    ChPolynomial& operator-=(const ChPolynomial& o);
    ChPolynomial& operator*=(const ChPolynomial& o);
    friend ChPolynomial operator+(ChPolynomial a, const ChPolynomial& b) { return a += b; }
    friend ChPolynomial operator-(ChPolynomial a, const ChPolynomial& b) { return a -= b; }
    friend ChPolynomial operator*(ChPolynomial a, const ChPolynomial& b) { return a *= b; }
    friend bool operator==(const ChPolynomial& a, const ChPolynomial& b) { return a.terms_ == b.terms_; }

    static unsigned degree(const Monomial& m);

    /// "1/2*ch1(3)*ch1(3) + ch2(3)"; "0" when empty.
    std::string to_string() const;

private:
    void add(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

/// Chern classes c_0..c_n from Chern characters ch_0..ch_n (ch_0 is ignored),
/// through Newton's identities with power sums p_i = i! ch_i.
template <typename R>
std::vector<R> chern_from_ch(const std::vector<R>& ch, unsigned n)
{
    std::vector<R> p(n + 1), c(n + 1);
    for (unsigned i = 1; i <= n; ++i) p[i] = ch.at(i) * R(Rational(factorial(i)));
    c[0] = R(Rational(1));
    for (unsigned j = 1; j <= n; ++j) {
        R acc = R(Rational(0));
        for (unsigned i = 1; i <= j; ++i) {
            if (i % 2) acc += c[j - i] * p[i];
            else acc -= c[j - i] * p[i];
        }
        c[j] = acc * R(make_rational(1, j));
    }
    return c;
}

/// Inverse of chern_from_ch: ch_1..ch_n from c_1..c_n (index 0 of the result is unset).
template <typename R>
std::vector<R> ch_from_chern(const std::vector<R>& c, unsigned n)
{
    std::vector<R> p(n + 1), ch(n + 1);
    for (unsigned j = 1; j <= n; ++j) {
        R acc = c.at(j) * R(Rational(static_cast<long>(j)));
        if (j % 2 == 0) acc = R(Rational(0)) - acc;
        for (unsigned i = 1; i < j; ++i) {
            if (i % 2) acc += c.at(i) * p[j - i];
            else acc -= c.at(i) * p[j - i];
        }
        p[j] = acc;
        ch[j] = p[j] * R(make_rational(Integer(1), factorial(j)));
    }
    return ch;
}

/// Rewrites expr on the component (genus, classes) in ch_k(F) generators,
/// dropping monomials above max_degree.  Ranks of R^1 come from rank_r1;
/// c_j vanishes above the rank.
ChPolynomial normalize(const ClassExpr& expr, Engine& engine, unsigned genus, const std::vector<unsigned>& classes,
                       unsigned max_degree);

/// Integral of prod psi-bar^{a_i} ev_i^* e_[gamma_i] times expr.
Rational evaluate_class(Engine& engine, unsigned genus, const std::vector<Insertion>& insertions, const ClassExpr& expr);

}  // namespace hhodge
