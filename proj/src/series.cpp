#include "hhodge/series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hhodge/classes.hpp"
#include "hhodge/error.hpp"

namespace hhodge {

namespace {

bool stable(unsigned genus, std::size_t n)
{
    return 2 * static_cast<long>(genus) - 2 + static_cast<long>(n) > 0;
}

long psi_sum(const std::vector<Insertion>& m)
{
    long s = 0;
    for (const auto& x : m) s += x.psi;
    return s;
}

unsigned multiplicity(const std::vector<Insertion>& m, const Insertion& x)
{
    return static_cast<unsigned>(std::count(m.begin(), m.end(), x));
}

std::vector<std::pair<Insertion, unsigned>> distinct(std::vector<Insertion> m)
{
    std::sort(m.begin(), m.end());
    std::vector<std::pair<Insertion, unsigned>> out;
    for (const auto& x : m) {
        if (!out.empty() && out.back().first == x) ++out.back().second;
        else out.emplace_back(x, 1u);
    }
    return out;
}

// Coefficient of a sorted monomial in F_h.
Rational potential_value(Engine& engine, unsigned h, std::vector<Insertion> monomial)
{
    if (!stable(h, monomial.size())) return 0;
    if (psi_sum(monomial) != 3 * static_cast<long>(h) - 3 + static_cast<long>(monomial.size())) return 0;
    Rational v = engine.correlator(h, monomial);
    if (v == 0) return 0;
    return v / Rational(symmetry_factor(std::move(monomial)));
}

// Correlator of the points in F_h, or 0 off dimension and for unstable h, n.
Rational raw_correlator(Engine& engine, unsigned h, const std::vector<Insertion>& points)
{
    if (!stable(h, points.size())) return 0;
    if (psi_sum(points) != 3 * static_cast<long>(h) - 3 + static_cast<long>(points.size())) return 0;
    return engine.correlator(h, points);
}

// Coefficient of monomial in d/dt_x F_h: the correlator with x added, over
// the symmetry factor of the monomial.
Rational first_derivative(Engine& engine, unsigned h, const std::vector<Insertion>& monomial, const Insertion& x)
{
    auto n = monomial;
    n.push_back(x);
    Rational v = raw_correlator(engine, h, n);
    if (v == 0) return 0;
    return v / Rational(symmetry_factor(monomial));
}

// Elements of Q[x]/(x^M - 1), coefficient j of x^j.  Sending x to zeta_M is
// a ring map onto Q(zeta_M), so products need no reduction until the end.
using CyclicElement = std::vector<Rational>;

CyclicElement to_cyclic(const Cyclotomic& v, unsigned m)
{
    CyclicElement out = v.embed(m).coefficients();
    out.resize(m, Rational(0));
    return out;
}

Cyclotomic from_cyclic(const CyclicElement& v, unsigned m)
{
    Cyclotomic out;
    for (unsigned j = 0; j < m; ++j)
        if (sgn(v[j]) != 0) out += Cyclotomic(v[j]) * Cyclotomic::root_of_unity(m, j);
    return out;
}

bool is_zero(const CyclicElement& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; });
}

void add_product(CyclicElement& acc, const CyclicElement& a, const CyclicElement& b)
{
    const std::size_t m = acc.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < m; ++j)
            if (sgn(b[j]) != 0) acc[(i + j) % m] += a[i] * b[j];
    }
}

// Multivariate polynomial in u^0..u^{N-1}.
using UPoly = std::map<std::vector<unsigned>, CyclicElement>;

UPoly multiply_truncated(const UPoly& a, const UPoly& b, unsigned max_degree, unsigned m)
{
    UPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<unsigned> e(ea.size());
            unsigned deg = 0;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                deg += e[i];
            }
            if (deg > max_degree) continue;
            auto it = out.find(e);
            if (it == out.end()) it = out.emplace(e, CyclicElement(m, Rational(0))).first;
            add_product(it->second, ca, cb);
        }
    }
    std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
    return out;
}

}  // namespace

Integer symmetry_factor(std::vector<Insertion> monomial)
{
    Integer f = 1;
    for (const auto& [x, count] : distinct(std::move(monomial))) f *= factorial(count);
    return f;
}

Rational SeriesPoly::coefficient(std::vector<Insertion> monomial) const
{
    if (monomial.size() > truncation.max_points)
        throw std::out_of_range("monomial has more points than the truncation");
    for (const auto& x : monomial)
        if (x.psi > truncation.max_psi) throw std::out_of_range("monomial exceeds the psi truncation");
    std::sort(monomial.begin(), monomial.end());
    auto it = coeffs.find(monomial);
    return it == coeffs.end() ? Rational(0) : it->second;
}

std::string SeriesPoly::monomial_text(const FiniteGroup& g, std::vector<Insertion> monomial)
{
    auto factors = distinct(std::move(monomial));
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first.psi, a.first.cls) < std::tie(b.first.psi, b.first.cls);
    });
    std::string out;
    for (const auto& [x, count] : factors) {
        if (!out.empty()) out += ' ';
        out += "t" + std::to_string(x.psi) + "[" + g.conj_class(x.cls).name + "]^" + std::to_string(count);
    }
    return out.empty() ? "1" : out;
}

std::vector<std::pair<std::string, Rational>> SeriesPoly::terms_text(const FiniteGroup& g) const
{
    std::vector<std::pair<std::string, Rational>> out;
    for (const auto& [m, c] : coeffs) out.emplace_back(monomial_text(g, m), c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<std::vector<Insertion>> dimension_monomials(const FiniteGroup& g, unsigned genus, Truncation trunc,
                                                        unsigned extra_degree, bool allow_unstable)
{
    std::vector<Insertion> vars;
    for (unsigned a = 0; a <= trunc.max_psi; ++a)
        for (unsigned c = 0; c < g.num_classes(); ++c) vars.push_back({c, a});

    std::vector<std::vector<Insertion>> out;
    std::vector<Insertion> current;
    const long max_dim = 3 * static_cast<long>(genus) - 3 + static_cast<long>(trunc.max_points);
    std::function<void(std::size_t, long)> walk = [&](std::size_t i, long degree) {
        if (i == vars.size()) {
            const long n = static_cast<long>(current.size());
            if (degree + extra_degree != 3 * static_cast<long>(genus) - 3 + n) return;
            if (!allow_unstable && !stable(genus, current.size())) return;
            auto m = current;
            std::sort(m.begin(), m.end());
            out.push_back(std::move(m));
            return;
        }
        walk(i + 1, degree);
        std::size_t pushed = 0;
        while (current.size() < trunc.max_points && degree + static_cast<long>(vars[i].psi) + extra_degree <= max_dim) {
            current.push_back(vars[i]);
            degree += vars[i].psi;
            ++pushed;
            walk(i + 1, degree);
        }
        current.resize(current.size() - pushed);
    };
    walk(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Rational potential_coefficient_by_representations(Engine& engine, unsigned genus, const std::vector<Insertion>& monomial)
{
    const FiniteGroup& g = engine.group();
    if (!stable(genus, monomial.size())) return 0;
    std::vector<unsigned> exps;
    std::vector<HVector> f_coords;
    for (const auto& x : monomial) {
        exps.push_back(x.psi);
        f_coords.push_back(basis_change(g, HVector::unit(Basis::Class, g.num_classes(), x.cls)));
    }
    const Rational psi = shared_psi()(genus, exps);
    if (psi == 0) return 0;
    Cyclotomic total;
    for (unsigned a = 0; a < g.num_classes(); ++a) {
        const Rational dim_over_order = make_rational(g.irrep(a).dim, g.order());
        Cyclotomic term(power(dim_over_order * dim_over_order, 1 - static_cast<long>(genus)));
        for (const auto& f : f_coords) term *= f.coeffs[a];
        total += term;
    }
    return total.to_rational() * psi / Rational(symmetry_factor(monomial));
}

SeriesPoly potential(Engine& engine, unsigned genus, Truncation trunc)
{
    SeriesPoly poly{genus, trunc, {}};
    for (const auto& m : dimension_monomials(engine.group(), genus, trunc, 0, false)) {
        const Rational direct = potential_value(engine, genus, m);
        const Rational other = potential_coefficient_by_representations(engine, genus, m);
        if (direct != other)
            throw InconsistencyError("potential coefficient of " + SeriesPoly::monomial_text(engine.group(), m) +
                                     ": class basis gives " + to_string(direct) + ", representation basis gives " +
                                     to_string(other));
        if (direct != 0) poly.coeffs.emplace(m, direct);
    }
    return poly;
}

Rational operator_form_coefficient(Engine& engine, unsigned alpha, unsigned k, unsigned genus,
                                   const std::vector<Insertion>& monomial_in)
{
    if (k == 0) throw ValidationError("ch_0 is not an engine insertion; use rank_virtual");
    const FiniteGroup& g = engine.group();
    std::vector<Insertion> monomial = monomial_in;
    std::sort(monomial.begin(), monomial.end());
    if (psi_sum(monomial) + static_cast<long>(k) != 3 * static_cast<long>(genus) - 3 + static_cast<long>(monomial.size()))
        return 0;

    Rational total = 0;

    // First-order part: b_[1] d/dt_{k+1}^[1] - sum t_l^[gamma] b_gamma d/dt_{l+k}^[gamma].
    total += engine.b_coeff(alpha, k, 0) * first_derivative(engine, genus, monomial, {0, k + 1});
    for (const auto& [v, count] : distinct(monomial)) {
        auto rest = monomial;
        rest.erase(std::find(rest.begin(), rest.end(), v));
        const Rational b = engine.b_coeff(alpha, k, v.cls);
        if (b != 0) total -= b * first_derivative(engine, genus, rest, {v.cls, v.psi + k});
    }

    // Quadratic part.
    const auto factors = distinct(monomial);
    const unsigned nc = static_cast<unsigned>(g.num_classes());
    // Abelian groups: F_h has no terms whose classes do not multiply to 1, so
    // the class of the left node is the inverse of the left product.
    const bool abelian = g.is_abelian();
    std::vector<Rational> weight(nc);
    for (unsigned beta = 0; beta < nc; ++beta)
        weight[beta] = engine.b_coeff(alpha, k, g.conj_class(beta).inverse) * Rational(g.centralizer_order(beta));

    Rational quadratic = 0;
    std::vector<unsigned> take(factors.size(), 0);
    for (unsigned l = 0; l < k; ++l) {
        Rational sum = 0;
        if (genus >= 1) {
            for (unsigned beta = 0; beta < nc; ++beta) {
                if (weight[beta] == 0) continue;
                const Insertion x{beta, l}, y{g.conj_class(beta).inverse, k - 1 - l};
                auto n = monomial;
                n.push_back(x);
                n.push_back(y);
                Rational v = potential_value(engine, genus - 1, n);
                if (v == 0) continue;
                const unsigned mx = multiplicity(monomial, x);
                const Rational mult = x == y ? Rational((mx + 2) * (mx + 1))
                                             : Rational((mx + 1) * (multiplicity(monomial, y) + 1));
                sum += weight[beta] * mult * v;
            }
        }

        auto leaf = [&](long degree, std::size_t n1, unsigned product) {
            // The left factor carries the node: 3h - 3 + (n1 + 1) = degree + l.
            const long three_h = degree + static_cast<long>(l) + 2 - static_cast<long>(n1);
            if (three_h < 0 || three_h % 3 != 0 || three_h / 3 > static_cast<long>(genus)) return;
            const unsigned h = static_cast<unsigned>(three_h / 3);
            std::vector<Insertion> left, right;
            for (std::size_t j = 0; j < factors.size(); ++j)
                for (unsigned c = 0; c < factors[j].second; ++c)
                    (c < take[j] ? left : right).push_back(factors[j].first);
            left.emplace_back();
            right.emplace_back();
            const unsigned first = abelian ? g.conj_class(product).inverse : 0;
            const unsigned last = abelian ? first + 1 : nc;
            for (unsigned beta = first; beta < last; ++beta) {
                if (weight[beta] == 0) continue;
                left.back() = {beta, l};
                right.back() = {g.conj_class(beta).inverse, k - 1 - l};
                const Rational lv = raw_correlator(engine, h, left);
                if (lv == 0) continue;
                const Rational rv = raw_correlator(engine, genus - h, right);
                if (rv == 0) continue;
                // d/dt_x F_h and d/dt_y F_{g-h} divide by the symmetry factors of the two halves.
                Integer sym = 1;
                for (std::size_t j = 0; j < factors.size(); ++j)
                    sym *= factorial(take[j]) * factorial(factors[j].second - take[j]);
                sum += weight[beta] * lv * rv / Rational(sym);
            }
        };
        auto walk = [&](auto&& self, std::size_t i, long degree, std::size_t n1, unsigned product) -> void {
            if (i == factors.size()) return leaf(degree, n1, product);
            for (unsigned c = 0; c <= factors[i].second; ++c) {
                take[i] = c;
                self(self, i + 1, degree + static_cast<long>(c * factors[i].first.psi), n1 + c, product);
                if (abelian) product = g.multiply(product, factors[i].first.cls);
            }
        };
        walk(walk, 0, 0, 0, 0u);
        if (l % 2) quadratic -= sum;
        else quadratic += sum;
    }
    total += quadratic / 2;
    return total;
}

SeriesPoly twisted_genfun(Engine& engine, unsigned alpha, unsigned k, unsigned genus, Truncation trunc)
{
    if (k == 0) throw ValidationError("ch_0 is not an engine insertion; use rank_virtual");
    if (alpha >= engine.group().num_classes()) throw ValidationError("irrep index out of range");
    SeriesPoly poly{genus, trunc, {}};
    for (const auto& m : dimension_monomials(engine.group(), genus, trunc, k, true)) {
        const Rational direct =
            engine.twisted_correlator(TwistedCorrelator{genus, m, {ChInsertion{k, alpha}}}) / Rational(symmetry_factor(m));
        const Rational other = operator_form_coefficient(engine, alpha, k, genus, m);
        if (direct != other)
            throw InconsistencyError("ch_" + std::to_string(k) + "," + std::to_string(alpha) + " series coefficient of " +
                                     SeriesPoly::monomial_text(engine.group(), m) + ": recursion gives " +
                                     to_string(direct) + ", operator form gives " + to_string(other));
        if (direct != 0) poly.coeffs.emplace(m, direct);
    }
    return poly;
}

std::vector<JTerm> jfunction(Engine& engine, unsigned max_u)
{
    const FiniteGroup& g = engine.group();
    const std::size_t n_cls = g.num_classes();
    unsigned m = 1;
    for (const auto& cl : g.classes()) m = std::lcm(m, cl.order);
    for (const auto& ir : g.irreps())
        for (const auto& v : ir.values) m = std::lcm(m, v.conductor());

    using Key = std::pair<std::vector<unsigned>, int>;
    std::map<Key, std::vector<CyclicElement>> accumulated;  // class-basis vector per (u powers, z power)
    auto slot = [&](const std::vector<unsigned>& u, int z) -> std::vector<CyclicElement>& {
        auto it = accumulated.find({u, z});
        if (it == accumulated.end())
            it = accumulated.emplace(Key{u, z}, std::vector<CyclicElement>(n_cls, CyclicElement(m, Rational(0)))).first;
        return it->second;
    };

    // t^delta as linear forms in u: t = sum_alpha u^alpha f_alpha.
    std::vector<UPoly> t(n_cls);
    for (unsigned delta = 0; delta < n_cls; ++delta) {
        for (unsigned a = 0; a < n_cls; ++a) {
            std::vector<unsigned> e(n_cls, 0);
            e[a] = 1;
            Cyclotomic c = Cyclotomic(make_rational(g.irrep(a).dim, g.order())) * g.character(a, g.conj_class(delta).inverse);
            if (!c.is_zero()) t[delta][e] = to_cyclic(c, m);
        }
    }

    const std::vector<unsigned> zero(n_cls, 0);
    CyclicElement one(m, Rational(0));
    one[0] = 1;
    slot(zero, 1)[0][0] += 1;
    if (max_u >= 1)
        for (unsigned delta = 0; delta < n_cls; ++delta)
            for (const auto& [e, c] : t[delta]) {
                auto& target = slot(e, 0)[delta];
                for (unsigned j = 0; j < m; ++j) target[j] += c[j];
            }

    // sum_{n>=3} 1/(n-1)! <tau_0(t)^{n-1} tau_{n-3}(e_gamma)>_0 |C(gamma)| e_{gamma^{-1}} / z^{n-2}.
    // The multinomial expansion of tau_0(t)^{n-1} is walked class by class,
    // carrying prod_delta (t^delta)^{m_delta} / m_delta! along.
    for (unsigned n = 3; n <= max_u + 1; ++n) {
        std::vector<unsigned> counts(n_cls, 0);
        std::function<void(unsigned, unsigned, const UPoly&)> walk = [&](unsigned delta, unsigned left, const UPoly& poly) {
            if (delta == n_cls) {
                if (left != 0) return;
                std::vector<Insertion> base;
                for (unsigned d = 0; d < n_cls; ++d)
                    for (unsigned j = 0; j < counts[d]; ++j) base.push_back({d, 0});
                for (unsigned gamma = 0; gamma < n_cls; ++gamma) {
                    auto ins = base;
                    ins.push_back({gamma, n - 3});
                    const Rational value = engine.correlator(0, ins);
                    if (value == 0) continue;
                    const Rational w = value * Rational(g.centralizer_order(gamma));
                    const unsigned target = g.conj_class(gamma).inverse;
                    for (const auto& [e, c] : poly) {
                        auto& dst = slot(e, -static_cast<int>(n - 2))[target];
                        for (unsigned j = 0; j < m; ++j)
                            if (sgn(c[j]) != 0) dst[j] += w * c[j];
                    }
                }
                return;
            }
            UPoly current = poly;
            for (unsigned c = 0;; ++c) {
                counts[delta] = c;
                walk(delta + 1, left - c, current);
                if (c == left) break;
                current = multiply_truncated(current, t[delta], max_u, m);
                for (auto& [e, coeff] : current)
                    for (auto& x : coeff) x /= c + 1;
            }
            counts[delta] = 0;
        };
        walk(0, n - 1, UPoly{{zero, one}});
    }

    std::map<Key, std::vector<Cyclotomic>> by_class;
    for (const auto& [key, vec] : accumulated) {
        std::vector<Cyclotomic> v;
        for (const auto& x : vec) v.push_back(from_cyclic(x, m));
        by_class.emplace(key, std::move(v));
    }

    // Representation basis, and the closed form z sum_alpha f_alpha e^{u^alpha / z}.
    std::map<std::tuple<unsigned, std::vector<unsigned>, int>, Rational> computed, expected;
    for (const auto& [key, vec] : by_class) {
        HVector f = basis_change(g, HVector{Basis::Class, vec});
        for (unsigned a = 0; a < n_cls; ++a) {
            if (f.coeffs[a].is_zero()) continue;
            Rational v;
            try {
                v = f.coeffs[a].to_rational();
            } catch (const InconsistencyError& e) {
                throw InconsistencyError(std::string("J-function coefficient is irrational: ") + e.what());
            }
            computed[{a, key.first, key.second}] = v;
        }
    }
    for (unsigned a = 0; a < n_cls; ++a) {
        for (unsigned m = 0; m <= max_u; ++m) {
            std::vector<unsigned> e(n_cls, 0);
            e[a] = m;
            expected[{a, e, 1 - static_cast<int>(m)}] = make_rational(Integer(1), factorial(m));
        }
    }
    if (computed != expected) {
        for (const auto& [key, v] : expected) {
            auto it = computed.find(key);
            if (it == computed.end() || it->second != v)
                throw InconsistencyError("J-function of " + g.name() + ": coefficient of f_" + std::to_string(std::get<0>(key)) +
                                         " z^" + std::to_string(std::get<2>(key)) + " is " +
                                         (it == computed.end() ? std::string("0") : to_string(it->second)) +
                                         ", closed form gives " + to_string(v));
        }
        throw InconsistencyError("J-function of " + g.name() + " has terms absent from the closed form");
    }

    std::vector<JTerm> out;
    for (const auto& [key, v] : computed) out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), v});
    return out;
}

std::string EulerSeries::monomial_text(const std::vector<unsigned>& exponents)
{
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += "s" + std::to_string(i + 1) + "^" + std::to_string(exponents[i]);
    }
    return out.empty() ? "1" : out;
}

std::vector<std::pair<std::string, Rational>> EulerSeries::terms_text() const
{
    std::vector<std::pair<std::string, Rational>> out;
    for (const auto& [e, c] : coeffs) out.emplace_back(monomial_text(e), c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

EulerSeries euler_series(Engine& engine, const std::vector<unsigned>& bundle_irreps, const std::vector<unsigned>& sectors,
                         unsigned genus, unsigned max_points)
{
    const FiniteGroup& g = engine.group();
    for (unsigned a : bundle_irreps)
        if (a >= g.num_classes()) throw ValidationError("irrep index out of range");
    for (unsigned c : sectors)
        if (c >= g.num_classes()) throw ValidationError("class index out of range");

    ClassExpr euler;
    euler.terms.push_back(ClassTerm{Rational(1), {ClassGenerator{ClassGenerator::Kind::Euler, 0, bundle_irreps}}});

    EulerSeries series{sectors, {}};
    std::vector<unsigned> counts(sectors.size(), 0);
    std::function<void(std::size_t, unsigned)> walk = [&](std::size_t i, unsigned used) {
        if (i < sectors.size()) {
            for (unsigned c = 0; used + c <= max_points; ++c) {
                counts[i] = c;
                walk(i + 1, used + c);
            }
            return;
        }
        std::vector<Insertion> ins;
        std::vector<unsigned> classes;
        Integer factor = 1;
        for (std::size_t j = 0; j < sectors.size(); ++j) {
            for (unsigned c = 0; c < counts[j]; ++c) {
                ins.push_back({sectors[j], 0});
                classes.push_back(sectors[j]);
            }
            factor *= factorial(counts[j]);
        }
        if (!stable(genus, ins.size())) return;
        if (engine.omega()(genus, classes) == 0) return;
        Rational rank = 0;
        for (unsigned a : bundle_irreps) rank += engine.rank_r1(a, genus, classes);
        if (rank != 3 * static_cast<long>(genus) - 3 + static_cast<long>(ins.size())) return;
        series.coeffs[counts] = evaluate_class(engine, genus, ins, euler) / Rational(factor);
    };
    walk(0, 0);
    return series;
}

}  // namespace hhodge
