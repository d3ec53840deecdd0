#include "hhodge/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "hhodge/bernoulli.hpp"
#include "hhodge/cache.hpp"
#include "hhodge/classes.hpp"
#include "hhodge/cyclotomic.hpp"
#include "hhodge/engine.hpp"
#include "hhodge/error.hpp"
#include "hhodge/series.hpp"

namespace hhodge {

namespace {

constexpr std::string_view kS3Text = R"(# Symmetric group on three letters.
group S3
order 6
class e size=1 elemorder=1 inverse=e
class t size=3 elemorder=2 inverse=t
class c size=2 elemorder=3 inverse=c
powers e: e
powers t: e,t
powers c: e,c,c
irrep triv dim=1 values= 1; 1; 1
irrep sign dim=1 values= 1; -1; 1
irrep std  dim=2 values= 2; 0; -1
)";

std::string show(const Rational& x)
{
    return to_fraction_string(x);
}

void expect_equal(CheckResult& r, const std::string& what, const Rational& got, const Rational& want)
{
    r.expect(got == want, what + ": expected " + show(want) + ", got " + show(got));
}

// Runs body, turning any library error into a failed check.
CheckResult guarded(const std::function<void(CheckResult&)>& body)
{
    CheckResult r;
    try {
        body(r);
    } catch (const std::exception& e) {
        r.expect(false, std::string("error: ") + e.what());
    }
    return r;
}

unsigned psi_sum(const std::vector<Insertion>& ins)
{
    unsigned s = 0;
    for (const auto& i : ins) s += i.psi;
    return s;
}

std::vector<unsigned> classes_of(const std::vector<Insertion>& ins)
{
    std::vector<unsigned> out;
    for (const auto& i : ins) out.push_back(i.cls);
    return out;
}

// Stable, dimension-correct, and on a nonempty component.
bool well_formed(Engine& engine, unsigned genus, const std::vector<Insertion>& ins, unsigned extra_degree)
{
    const long n = static_cast<long>(ins.size());
    if (2 * static_cast<long>(genus) - 2 + n <= 0) return false;
    if (static_cast<long>(psi_sum(ins) + extra_degree) != 3 * static_cast<long>(genus) - 3 + n) return false;
    return engine.omega()(genus, classes_of(ins)) != 0;
}

// A displayed series coefficient.  When the literal monomial cannot carry a
// nonzero coefficient, `corrected` is the nearest well-formed reading.
struct Displayed {
    const char* value;
    const char* literal;
    const char* corrected = nullptr;
};

void check_displayed(CheckResult& r, Engine& engine, const SeriesPoly& series, unsigned extra_degree,
                     const std::vector<Displayed>& shown)
{
    const FiniteGroup& g = engine.group();
    const unsigned genus = series.genus;
    for (const auto& d : shown) {
        const Rational want = parse_rational(d.value);
        const auto literal = parse_insertions(g, d.literal);
        const std::string lit_text = "g=" + std::to_string(genus) + " " + SeriesPoly::monomial_text(g, literal);
        const bool literal_ok = well_formed(engine, genus, literal, extra_degree);
        if (d.corrected == nullptr) {
            r.expect(literal_ok, lit_text + " is not a well-formed monomial");
            if (literal_ok) expect_equal(r, lit_text, series.coefficient(literal), want);
            continue;
        }
        r.expect(!literal_ok && series.coefficient(literal) == 0,
                 lit_text + " was expected to be ill-formed but carries " + show(series.coefficient(literal)));
        const auto fixed = parse_insertions(g, d.corrected);
        const std::string fixed_text = "g=" + std::to_string(genus) + " " + SeriesPoly::monomial_text(g, fixed);
        r.notes.push_back(lit_text + " is ill-formed; read as " + fixed_text);
        r.expect(well_formed(engine, genus, fixed, extra_degree), fixed_text + " is not well-formed");
        expect_equal(r, fixed_text + " (displayed as " + SeriesPoly::monomial_text(g, literal) + ")",
                     series.coefficient(fixed), want);
    }
}

CheckResult z5_headline()
{
    return guarded([](CheckResult& r) {
        const FiniteGroup g = cyclic_group(5);
        Engine engine(g);
        const struct {
            const char* ins;
            const char* expr;
            const char* value;
        } cases[] = {
            {"w:0,w2:0*2", "e(1,1,3)", "1/5"},
            {"w:0*3,w2:0", "c1(3)", "-1/25"},
            {"w:0*5", "c2(3)", "1/25"},
        };
        for (const auto& c : cases) {
            const Rational v = evaluate_class(engine, 0, parse_insertions(g, c.ins), parse_class_expr(g, c.expr));
            expect_equal(r, std::string(c.expr) + " on " + c.ins, v, parse_rational(c.value));
        }
    });
}

CheckResult z5_recursion_values()
{
    return guarded([](CheckResult& r) {
        const FiniteGroup g = cyclic_group(5);
        Engine engine(g);
        const struct {
            const char* ins;
            const char* chs;
            const char* value;
        } cases[] = {
            {"w:0*3,w2:0", "1:3", "1/25"}, {"w:0*5", "2:3", "1/50"},         {"w:0*5", "1:3,1:3", "1/25"},
            {"w:1,w:0*4", "1:3", "3/25"},  {"w:0*5,1:2", "1:3", "1/5"},
        };
        for (const auto& c : cases) {
            TwistedCorrelator tc{0, parse_insertions(g, c.ins), parse_chs(g, c.chs)};
            expect_equal(r, tc.key(g), engine.twisted_correlator(tc), parse_rational(c.value));
        }
    });
}

CheckResult z3_potentials()
{
    return guarded([](CheckResult& r) {
        const FiniteGroup g = cyclic_group(3);
        Engine engine(g);
        const SeriesPoly f0 = potential(engine, 0, Truncation{5, 3});
        check_displayed(r, engine, f0, 0,
                        {
                            {"1/3", "1:0,w:0,w2:0"},
                            {"1/18", "1:0*3"},
                            {"1/18", "w:0*3"},
                            {"1/18", "w2:0*3"},
                            {"1/6", "w:0*2,w2:0,w2:1"},
                            {"1/18", "1:0*3,1:1"},
                            {"1/3", "1:0,w:0,w2:0,1:1"},
                            {"1/6", "1:0*2,w:0,w2:1"},
                            {"1/6", "1:0*2,w2:0,w:1"},
                            {"1/6", "1:0,w:0*2,w:1"},
                            {"1/6", "1:0,w2:0*2,w2:1"},
                            {"1/6", "w:0,w2:0*2,w:1"},
                            {"1/18", "w:0*3,1:1"},
                            {"1/18", "w2:0*3,1:1"},
                        });
        const SeriesPoly f1 = potential(engine, 1, Truncation{5, 3});
        check_displayed(r, engine, f1, 0,
                        {
                            {"1/8", "1:1"},
                            {"1/8", "w2:0,w:1", "w2:0,w:2"},
                            {"1/8", "w:0,w2:1", "w:0,w2:2"},
                            {"1/8", "1:0,w2:1", "1:0,1:2"},
                            {"1/8", "w:1,w2:1"},
                            {"1/16", "1:1*2"},
                        });
    });
}

CheckResult z3_twisted_series()
{
    return guarded([](CheckResult& r) {
        const FiniteGroup g = cyclic_group(3);
        Engine engine(g);
        const SeriesPoly s0 = twisted_genfun(engine, 1, 1, 0, Truncation{6, 3});
        check_displayed(r, engine, s0, 1,
                        {
                            {"1/36", "w:0*2,w2:0*2"},
                            {"1/216", "w:0*4,w2:1"},
                            {"1/216", "w2:0*4,w2:1", "w2:0*4,w:1"},
                            {"1/18", "w:0*3,w2:0*2", "w:0*2,w2:0*2,1:1"},
                            {"1/18", "1:0,w:0*2,w2:0,w2:1"},
                            {"1/18", "1:0,w:0,w2:0*2,w2:1", "1:0,w:0,w2:0*2,w:1"},
                            {"1/27", "w:0,w2:0*3,w2:1"},
                            {"1/27", "w:0*3,w2:0,w2:1", "w:0*3,w2:0,w:1"},
                        });
        const SeriesPoly s1 = twisted_genfun(engine, 1, 1, 1, Truncation{4, 3});
        check_displayed(r, engine, s1, 1,
                        {
                            {"1/72", "1:0"},
                            {"1/24", "w:0,w2:1"},
                            {"1/72", "1:0,1:1"},
                            {"1/24", "w2:0,w:1"},
                            {"5/144", "w:0*2,w:2"},
                            {"5/72", "w:0,w2:0,1:0", "w:0,w2:0,1:2"},
                            {"1/12", "1:0,w:1,w2:1"},
                            {"13/288", "1:0,w:0,w2:2"},
                            {"1/12", "w:0*2,w2:1", "w:0,1:1,w2:1"},
                            {"1/12", "w2:0,w:0,w:1", "w2:0,1:1,w:1"},
                            {"1/72", "1:0,w:0*2", "1:0,1:1*2"},
                            {"1/144", "1:0*2,w2:0", "1:0*2,1:2"},
                            {"7/192", "w2:0*2,w2:2"},
                            {"1/18", "w:0,w:1*2"},
                            {"1/18", "w2:0,w2:1*2"},
                            {"1/24", "1:0,w2:0,w:1", "1:0,w2:0,w:2"},
                        });
    });
}

CheckResult z2_family()
{
    return guarded([](CheckResult& r) {
        const FiniteGroup g = cyclic_group(2);
        Engine engine(g);
        r.notes.push_back("the generating-function coefficient is the bare integral divided by (2m)!; "
                          "the closed form below is the bare integral");
        for (unsigned m = 2; m <= 6; ++m) {
            const unsigned k = 2 * m - 3;
            const Rational want = bernoulli_number(2 * m - 2) / Rational(factorial(2 * m - 2)) *
                                  Rational(power(Rational(2), 2 * m - 2) - 1);
            std::vector<Insertion> ins(2 * m, Insertion{1, 0});
            const Rational by_engine = engine.twisted_correlator(TwistedCorrelator{0, ins, {{k, 1}}});
            const Rational series_coeff = operator_form_coefficient(engine, 1, k, 0, ins);
            const Rational by_series = series_coeff * Rational(factorial(2 * m));
            const std::string what = "m=" + std::to_string(m) + " ch" + std::to_string(k) + " on [w]^" + std::to_string(2 * m);
            expect_equal(r, what + " (engine)", by_engine, want);
            expect_equal(r, what + " (operator form x (2m)!)", by_series, want);
            r.notes.push_back(what + ": " + show(want) + ", series coefficient " + show(series_coeff));
        }
    });
}

// Every class multiset of n points, as counts per class.
void for_each_multiset(std::size_t num_classes, unsigned n, const std::function<void(const std::vector<unsigned>&)>& f)
{
    std::vector<unsigned> counts(num_classes, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t c, unsigned left) {
        if (c + 1 == num_classes) {
            counts[c] = left;
            f(counts);
            return;
        }
        for (unsigned j = 0; j <= left; ++j) {
            counts[c] = j;
            rec(c + 1, left - j);
        }
    };
    rec(0, n);
}

std::vector<unsigned> expand(const std::vector<unsigned>& counts)
{
    std::vector<unsigned> out;
    for (unsigned c = 0; c < counts.size(); ++c) out.insert(out.end(), counts[c], c);
    return out;
}

CheckResult rank_tables()
{
    return guarded([](CheckResult& r) {
        // Rank of R^1 for irrep a on [1]^{n_0} [w]^{n_1} ... as tabulated for Z2, Z3, Z5:
        // g for a = 0, otherwise g - 1 + (sum_j table[a][j] n_j) / N.
        const std::vector<std::pair<unsigned, std::vector<std::vector<long>>>> tables = {
            {2, {{0, 0}, {0, 1}}},
            {3, {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}}},
            {5, {{0, 0, 0, 0, 0}, {0, 1, 2, 3, 4}, {0, 2, 4, 1, 3}, {0, 3, 1, 4, 2}, {0, 4, 3, 2, 1}}},
        };
        for (const auto& [order, table] : tables) {
            const FiniteGroup g = cyclic_group(order);
            Engine engine(g);
            std::size_t components = 0;
            for (unsigned genus = 0; genus <= 3; ++genus) {
                for (unsigned n = 0; n <= 9; ++n) {
                    if (2 * static_cast<long>(genus) - 2 + static_cast<long>(n) <= 0) continue;
                    for_each_multiset(order, n, [&](const std::vector<unsigned>& counts) {
                        const auto classes = expand(counts);
                        if (engine.omega()(genus, classes) == 0) return;
                        ++components;
                        for (unsigned a = 0; a < order; ++a) {
                            Rational want = genus;
                            if (a != 0) {
                                long weighted = 0;
                                for (unsigned j = 0; j < order; ++j) weighted += table[a][j] * counts[j];
                                want = Rational(static_cast<long>(genus) - 1) + make_rational(weighted, order);
                            }
                            const Rational got = engine.rank_r1(a, genus, classes);
                            if (got != want || !is_integer(got)) {
                                std::ostringstream what;
                                what << "Z" << order << " g=" << genus << " counts=";
                                for (unsigned c : counts) what << c << ' ';
                                what << "irrep " << a << ": expected " << show(want) << ", got " << show(got);
                                r.expect(false, what.str());
                            } else {
                                ++r.checks;
                            }
                        }
                    });
                }
            }
            r.notes.push_back("Z" + std::to_string(order) + ": " + std::to_string(components) + " nonempty components");
        }
        // Z2 in the form m + g - 1 with 2m points of class w.
        const FiniteGroup z2 = cyclic_group(2);
        Engine e2(z2);
        for (unsigned genus = 0; genus <= 3; ++genus)
            for (unsigned m = 0; 2 * m <= 9; ++m)
                for (unsigned k = 0; k + 2 * m <= 9; ++k) {
                    if (2 * static_cast<long>(genus) - 2 + static_cast<long>(k + 2 * m) <= 0) continue;
                    std::vector<unsigned> classes(k, 0);
                    classes.insert(classes.end(), 2 * m, 1);
                    expect_equal(r, "Z2 g=" + std::to_string(genus) + " m=" + std::to_string(m), e2.rank_r1(1, genus, classes),
                                 Rational(static_cast<long>(m + genus) - 1));
                }
    });
}

CheckResult root_of_unity_identity()
{
    return guarded([](CheckResult& r) {
        for (unsigned m = 2; m <= 12; ++m)
            for (unsigned l = 0; l < m; ++l)
                expect_equal(r, "m=" + std::to_string(m) + " l=" + std::to_string(l), root_of_unity_sum(m, l),
                             make_rational(static_cast<long>(m) - 1, 2) - Rational(l));
    });
}

CheckResult bernoulli_half()
{
    return guarded([](CheckResult& r) {
        for (unsigned n = 0; n <= 12; ++n)
            expect_equal(r, "B_" + std::to_string(n) + "(1/2)", bernoulli_poly(n, make_rational(1, 2)),
                         (power(Rational(2), 1 - static_cast<long>(n)) - 1) * bernoulli_number(n));
    });
}

CheckResult omega_suite()
{
    CheckResult total;
    auto merge = [&](const std::string& name, CheckResult part) {
        total.checks += part.checks;
        total.passed = total.passed && part.passed;
        for (auto& f : part.failures) total.failures.push_back(name + ": " + f);
        total.notes.push_back(name + ": " + std::to_string(part.checks) + " checks");
    };
    try {
        merge("Z3", omega_properties(cyclic_group(3), 2, 4));
        merge("Z5", omega_properties(cyclic_group(5), 2, 4));
        merge("S3", omega_properties(load_group(kS3Text), 2, 4));
    } catch (const std::exception& e) {
        total.expect(false, std::string("error: ") + e.what());
    }
    return total;
}

CheckResult operator_form_equivalence()
{
    return guarded([](CheckResult& r) {
        constexpr unsigned kMaxDim = 5;
        for (unsigned order : {3u, 5u}) {
            const FiniteGroup g = cyclic_group(order);
            Engine engine(g);
            struct Query {
                unsigned genus, alpha, k;
                std::vector<Insertion> ins;
            };
            std::vector<Query> queries;
            for (unsigned genus = 0; 3 * genus <= kMaxDim + 3; ++genus) {
                const unsigned max_points = kMaxDim + 3 - 3 * genus;
                for (unsigned k = 1; k <= kMaxDim; ++k)
                    for (const auto& mono : dimension_monomials(g, genus, Truncation{max_points, kMaxDim}, k, false))
                        for (unsigned a = 0; a < g.irreps().size(); ++a) queries.push_back({genus, a, k, mono});
            }

            // Queries are independent; the engine is safe to share.
            std::atomic<std::size_t> next{0}, nonzero{0};
            std::mutex lock;
            auto worker = [&] {
                for (std::size_t i; (i = next++) < queries.size();) {
                    const Query& q = queries[i];
                    try {
                        const Rational by_engine =
                            engine.twisted_correlator(TwistedCorrelator{q.genus, q.ins, {{q.k, q.alpha}}});
                        const Rational by_operator =
                            operator_form_coefficient(engine, q.alpha, q.k, q.genus, q.ins) * Rational(symmetry_factor(q.ins));
                        if (by_engine != 0) ++nonzero;
                        std::lock_guard guard(lock);
                        expect_equal(r, "Z" + std::to_string(order) + " g=" + std::to_string(q.genus) + " " +
                                            SeriesPoly::monomial_text(g, q.ins) + " ch" + std::to_string(q.k) + "," +
                                            std::to_string(q.alpha),
                                     by_operator, by_engine);
                    } catch (const std::exception& e) {
                        std::lock_guard guard(lock);
                        r.expect(false, std::string("error: ") + e.what());
                    }
                }
            };
            const unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
            r.notes.push_back("Z" + std::to_string(order) + ": " + std::to_string(queries.size()) + " queries, " +
                              std::to_string(nonzero.load()) + " nonzero");
        }
    });
}

CheckResult jfunction_closed_form()
{
    return guarded([](CheckResult& r) {
        constexpr unsigned kMaxU = 6;
        for (unsigned order : {2u, 3u, 5u}) {
            const FiniteGroup g = cyclic_group(order);
            Engine engine(g);
            const std::vector<JTerm> terms = jfunction(engine, kMaxU);
            const std::string name = "Z" + std::to_string(order);
            r.expect(terms.size() == g.irreps().size() * (kMaxU + 1),
                     name + ": " + std::to_string(terms.size()) + " terms, expected " +
                         std::to_string(g.irreps().size() * (kMaxU + 1)));
            for (const auto& t : terms) {
                unsigned total = 0;
                bool pure = true;
                for (unsigned b = 0; b < t.u_powers.size(); ++b) {
                    total += t.u_powers[b];
                    if (b != t.irrep && t.u_powers[b] != 0) pure = false;
                }
                r.expect(pure, name + ": mixed u-monomial in the coefficient of f_" + std::to_string(t.irrep));
                r.expect(t.z_power == 1 - static_cast<int>(total), name + ": unexpected z power");
                expect_equal(r, name + " f_" + std::to_string(t.irrep) + " u^" + std::to_string(total), t.value,
                             make_rational(Integer(1), factorial(total)));
            }
        }
    });
}

}  // namespace

void CheckResult::expect(bool ok, std::string failure)
{
    ++checks;
    if (ok) return;
    passed = false;
    failures.push_back(std::move(failure));
}

std::string_view bundled_s3_group_text()
{
    return kS3Text;
}

CheckResult omega_properties(const FiniteGroup& g, unsigned max_genus, unsigned max_points)
{
    return guarded([&](CheckResult& r) {
        OmegaTable omega(g);
        const Metric eta = metric(g);
        const unsigned nc = static_cast<unsigned>(g.num_classes());
        auto label = [&](unsigned genus, const std::vector<unsigned>& cls) {
            std::string s = "g=" + std::to_string(genus) + " (";
            for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + g.conj_class(cls[i]).name;
            return s + ")";
        };
        auto with = [](std::vector<unsigned> v, std::initializer_list<unsigned> extra) {
            v.insert(v.end(), extra);
            return v;
        };

        for (unsigned genus = 0; genus <= max_genus; ++genus) {
            for (unsigned n = 0; n <= max_points; ++n) {
                for_each_multiset(nc, n, [&](const std::vector<unsigned>& counts) {
                    const auto cls = expand(counts);
                    const Rational value = omega(genus, cls);
                    const std::string name = label(genus, cls);

                    expect_equal(r, "forgetting tails " + name, omega(genus, with(cls, {0})), value);

                    if (genus > 0) {
                        Rational loop = 0;
                        for (unsigned a = 0; a < nc; ++a)
                            for (unsigned b = 0; b < nc; ++b)
                                if (eta.upper[a][b] != 0) loop += eta.upper[a][b] * omega(genus - 1, with(cls, {a, b}));
                        expect_equal(r, "cutting loops " + name, loop, value);
                    }

                    // Every split of the points and the genus.
                    const std::size_t total = cls.size();
                    for (unsigned mask = 0; mask < (1u << total); ++mask) {
                        std::vector<unsigned> left, right;
                        for (std::size_t i = 0; i < total; ++i) (mask >> i & 1 ? left : right).push_back(cls[i]);
                        for (unsigned g1 = 0; g1 <= genus; ++g1) {
                            Rational tree = 0;
                            for (unsigned a = 0; a < nc; ++a)
                                for (unsigned b = 0; b < nc; ++b)
                                    if (eta.upper[a][b] != 0)
                                        tree += eta.upper[a][b] * omega(g1, with(left, {a})) * omega(genus - g1, with(right, {b}));
                            expect_equal(r, "cutting trees " + name + " split " + std::to_string(mask) + " g1=" + std::to_string(g1),
                                         tree, value);
                        }
                    }
                });
            }
        }

        if (g.is_abelian()) {
            for (unsigned genus = 0; genus <= max_genus + 1; ++genus)
                for (unsigned n = 0; n <= max_points + 1; ++n)
                    for_each_multiset(nc, n, [&](const std::vector<unsigned>& counts) {
                        const auto cls = expand(counts);
                        expect_equal(r, "characters vs monodromy " + label(genus, cls), omega.by_characters(genus, cls),
                                     omega.by_monodromy(genus, cls));
                    });
        }
    });
}

const std::vector<AcceptanceCriterion>& acceptance_criteria()
{
    static const std::vector<AcceptanceCriterion> corpus = {
        {1, "Z5 headline values", z5_headline},
        {2, "Z5 intermediate recursion values", z5_recursion_values},
        {3, "Z3 potentials F_0 and F_1", z3_potentials},
        {4, "Z3 twisted series of ch_1 of E_1, genus 0 and 1", z3_twisted_series},
        {5, "Z2 family, two paths", z2_family},
        {6, "rank formula tables for Z2, Z3, Z5", rank_tables},
        {7, "root-of-unity sum identity", root_of_unity_identity},
        {8, "Bernoulli polynomials at 1/2", bernoulli_half},
        {9, "Omega properties for Z3, Z5, S3", omega_suite},
        {10, "engine vs operator form, dimension <= 5", operator_form_equivalence},
        {11, "J-function closed form to u^6", jfunction_closed_form},
    };
    return corpus;
}

bool report_criterion(std::ostream& out, const AcceptanceCriterion& c, bool verbose)
{
    const auto start = std::chrono::steady_clock::now();
    const CheckResult r = c.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    out << (r.passed ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " (" << r.checks << " checks, " << time.str()
        << "s)\n";
    if (verbose)
        for (const auto& n : r.notes) out << "       note: " << n << "\n";
    constexpr std::size_t kMaxShown = 20;
    for (std::size_t i = 0; i < r.failures.size() && i < kMaxShown; ++i) out << "       " << r.failures[i] << "\n";
    if (r.failures.size() > kMaxShown) out << "       ... " << r.failures.size() - kMaxShown << " more\n";
    return r.passed;
}

int run_selftest(std::ostream& out, const SelftestOptions& options)
{
    bool ok = true;
    if (options.cache_file) {
        const FiniteGroup g = resolve_group(options.group.value_or("z5"));
        try {
            Engine engine(g);
            const CacheFile raw = CacheFile::read(*options.cache_file, g.fingerprint());
            load_cache(engine, *options.cache_file, raw.entries.size());
            out << "[PASS] cache " << options.cache_file->string() << " (" << raw.entries.size() << " entries verified)\n";
            return 0;
        } catch (const InconsistencyError& e) {
            out << "[FAIL] cache " << options.cache_file->string() << ": " << e.what() << "\n";
            return 2;
        } catch (const Error& e) {
            out << "[FAIL] cache " << options.cache_file->string() << ": " << e.what() << "\n";
            return 1;
        }
    }
    if (options.group) {
        const FiniteGroup g = resolve_group(*options.group);
        AcceptanceCriterion c{9, "Omega properties for " + g.name(), [&] { return omega_properties(g, 2, 4); }};
        return report_criterion(out, c, options.verbose) ? 0 : 1;
    }
    for (const auto& c : acceptance_criteria()) {
        if (options.only && *options.only != c.id) continue;
        ok = report_criterion(out, c, options.verbose) && ok;
    }
    return ok ? 0 : 1;
}

}  // namespace hhodge
