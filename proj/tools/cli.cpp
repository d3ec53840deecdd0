#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>

#include "hhodge/cache.hpp"
#include "hhodge/classes.hpp"
#include "hhodge/engine.hpp"
#include "hhodge/error.hpp"
#include "hhodge/group.hpp"
#include "hhodge/psi.hpp"
#include "hhodge/selftest.hpp"
#include "hhodge/series.hpp"

namespace hhodge::cli {

namespace {

struct Flags {
    std::string group;
    unsigned genus = 0;
    std::string ins;
    std::string ch;
    std::string powers;
    std::string expr;
    unsigned max_points = 4;
    std::string format = "plain";
    std::string cache;
    int only = 0;
    bool verbose = false;
};

std::vector<unsigned> parse_powers(std::string_view text)
{
    std::vector<unsigned> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }) ||
            item.size() > 4)
            throw ParseError("malformed psi power '" + item + "'");
        out.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    return out;
}

std::string join_powers(std::vector<unsigned> p)
{
    std::sort(p.begin(), p.end());
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out;
}

class Runner {
public:
    Runner(const Flags& flags, std::ostream& out) : flags_(flags), out_(out) {}

    void psi()
    {
        const auto powers = parse_powers(flags_.powers);
        const Rational v = shared_psi()(flags_.genus, powers);
        emit_value("psi g=" + std::to_string(flags_.genus) + " powers=" + join_powers(powers), v);
    }

    void omega()
    {
        const auto& g = group();
        const auto ins = parse_insertions(g, flags_.ins);
        std::vector<unsigned> classes;
        for (const auto& i : ins) {
            if (i.psi != 0) throw ValidationError("omega takes classes only; use psi power 0");
            classes.push_back(i.cls);
        }
        OmegaTable table(g);
        emit_value("omega g=" + std::to_string(flags_.genus) + " ins=" + format_insertions(g, ins),
                   table(flags_.genus, classes));
    }

    void corr()
    {
        const auto& g = group();
        const auto ins = parse_insertions(g, flags_.ins);
        emit_value("corr g=" + std::to_string(flags_.genus) + " ins=" + format_insertions(g, ins),
                   engine().correlator(flags_.genus, ins));
    }

    void hodge()
    {
        const auto& g = group();
        TwistedCorrelator tc{flags_.genus, parse_insertions(g, flags_.ins), parse_chs(g, flags_.ch)};
        tc.canonicalize();
        with_cache([&] { emit_value(tc.key(g), engine().twisted_correlator(tc)); });
    }

    void euler()
    {
        const auto& g = group();
        if (flags_.expr.empty()) throw ValidationError("euler needs --expr");
        const auto ins = parse_insertions(g, flags_.ins);
        const ClassExpr expr = parse_class_expr(g, flags_.expr);
        with_cache([&] {
            emit_value("class g=" + std::to_string(flags_.genus) + " ins=" + format_insertions(g, ins) + " expr=" +
                           canonical_expr(),
                       evaluate_class(engine(), flags_.genus, ins, expr));
        });
    }

    void series()
    {
        const auto& g = group();
        const unsigned genus = flags_.genus;
        if (!flags_.expr.empty()) {
            const ClassExpr expr = parse_class_expr(g, flags_.expr);
            if (expr.terms.size() != 1 || expr.terms[0].coeff != 1 || expr.terms[0].factors.size() != 1 ||
                expr.terms[0].factors[0].kind != ClassGenerator::Kind::Euler)
                throw ValidationError("series --expr takes a single Euler class e(a,b,...)");
            std::vector<unsigned> sectors;
            for (const auto& i : parse_insertions(g, flags_.ins)) {
                if (i.psi != 0) throw ValidationError("series sectors take psi power 0");
                if (std::find(sectors.begin(), sectors.end(), i.cls) == sectors.end()) sectors.push_back(i.cls);
            }
            if (sectors.empty()) throw ValidationError("series --expr needs the sector classes in --ins");
            with_cache([&] {
                emit_terms(euler_series(engine(), expr.terms[0].factors[0].irreps, sectors, genus, flags_.max_points)
                               .terms_text());
            });
            return;
        }
        const long dim_bound = 3 * static_cast<long>(genus) - 3 + static_cast<long>(flags_.max_points);
        const Truncation trunc{flags_.max_points, static_cast<unsigned>(std::max(0L, dim_bound))};
        if (flags_.ch.empty()) {
            emit_terms(potential(engine(), genus, trunc).terms_text(g));
            return;
        }
        const auto chs = parse_chs(g, flags_.ch);
        if (chs.size() != 1) throw ValidationError("series takes a single ch insertion");
        with_cache([&] { emit_terms(twisted_genfun(engine(), chs[0].irrep, chs[0].k, genus, trunc).terms_text(g)); });
    }

    void jfun()
    {
        const auto& g = group();
        std::vector<std::pair<std::string, Rational>> terms;
        for (const auto& t : jfunction(engine(), flags_.max_points)) {
            std::string text = "f[" + g.irrep(t.irrep).name + "]";
            for (unsigned b = 0; b < t.u_powers.size(); ++b)
                if (t.u_powers[b] != 0) text += " u[" + g.irrep(b).name + "]^" + std::to_string(t.u_powers[b]);
            text += " z^" + std::to_string(t.z_power);
            terms.emplace_back(std::move(text), t.value);
        }
        emit_terms(terms);
    }

    void validate_group()
    {
        const auto& g = group();
        if (flags_.format == "json") {
            nlohmann::json j;
            j["group"] = g.name();
            j["order"] = g.order();
            j["classes"] = g.num_classes();
            j["fingerprint"] = g.fingerprint();
            out_ << j.dump() << "\n";
        } else {
            out_ << g.name() << ": order " << g.order() << ", " << g.num_classes() << " classes, fingerprint "
                 << g.fingerprint() << "\n";
        }
    }

    int selftest()
    {
        SelftestOptions options;
        if (!flags_.group.empty()) options.group = flags_.group;
        if (!flags_.cache.empty()) options.cache_file = flags_.cache;
        if (flags_.only != 0) options.only = flags_.only;
        options.verbose = flags_.verbose;
        return run_selftest(out_, options);
    }

private:
    const FiniteGroup& group()
    {
        if (!group_) {
            if (flags_.group.empty()) throw ValidationError("missing --group");
            group_ = std::make_unique<FiniteGroup>(resolve_group(flags_.group));
        }
        return *group_;
    }

    Engine& engine()
    {
        if (!engine_) engine_ = std::make_unique<Engine>(group());
        return *engine_;
    }

    template <typename F>
    void with_cache(F&& body)
    {
        if (flags_.cache.empty()) {
            body();
            return;
        }
        load_cache(engine(), flags_.cache);
        body();
        save_cache(engine(), flags_.cache);
    }

    std::string canonical_expr() const
    {
        std::string s;
        for (char c : flags_.expr)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        return s;
    }

    void emit_value(const std::string& query, const Rational& v)
    {
        if (flags_.format == "json") {
            out_ << nlohmann::json{{"query", query}, {"value", to_fraction_string(v)}}.dump() << "\n";
        } else {
            out_ << to_fraction_string(v) << "\n";
        }
    }

    void emit_terms(const std::vector<std::pair<std::string, Rational>>& terms)
    {
        if (flags_.format == "json") {
            nlohmann::ordered_json j = nlohmann::ordered_json::object();
            for (const auto& [m, v] : terms) j[m] = to_fraction_string(v);
            out_ << j.dump() << "\n";
        } else {
            for (const auto& [m, v] : terms) out_ << m << "\t" << to_fraction_string(v) << "\n";
        }
    }

    const Flags& flags_;
    std::ostream& out_;
    std::unique_ptr<FiniteGroup> group_;
    std::unique_ptr<Engine> engine_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Flags flags;
    CLI::App app{"Exact Hurwitz-Hodge integrals over moduli of twisted stable maps to BG", "hhodge"};
    app.require_subcommand(1);

    auto add_group = [&](CLI::App* sub) {
        sub->add_option("--group", flags.group, "builtin z<N> or a group file");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", flags.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
    };
    auto add_cache = [&](CLI::App* sub) { sub->add_option("--cache", flags.cache, "persistent result cache"); };
    auto add_genus = [&](CLI::App* sub) { sub->add_option("--genus", flags.genus, "genus")->check(CLI::Range(0u, 60u)); };
    auto add_ins = [&](CLI::App* sub) { sub->add_option("--ins", flags.ins, "insertions class:psi[*count],..."); };

    auto* psi = app.add_subcommand("psi", "psi-class intersection number");
    add_genus(psi);
    psi->add_option("--powers", flags.powers, "comma list of psi powers");
    add_format(psi);

    auto* omega = app.add_subcommand("omega", "degree Omega of the component over the moduli of curves");
    add_group(omega);
    add_genus(omega);
    add_ins(omega);
    add_format(omega);

    auto* corr = app.add_subcommand("corr", "psi correlator times Omega");
    add_group(corr);
    add_genus(corr);
    add_ins(corr);
    add_format(corr);

    auto* hodge = app.add_subcommand("hodge", "integral of ch insertions and psi classes");
    add_group(hodge);
    add_genus(hodge);
    add_ins(hodge);
    hodge->add_option("--ch", flags.ch, "ch insertions k:alpha,...")->required();
    add_format(hodge);
    add_cache(hodge);

    auto* euler = app.add_subcommand("euler", "integral of a class expression");
    add_group(euler);
    add_genus(euler);
    add_ins(euler);
    euler->add_option("--expr", flags.expr, "e.g. e(1,1,3), c2(3), 1/2*ch1(1)*ch1(1)")->required();
    add_format(euler);
    add_cache(euler);

    auto* series = app.add_subcommand("series", "truncated generating functions");
    add_group(series);
    add_genus(series);
    add_ins(series);
    series->add_option("--ch", flags.ch, "single ch insertion k:alpha");
    series->add_option("--expr", flags.expr, "Euler class e(a,...) for the sector series over --ins");
    series->add_option("--max-points", flags.max_points, "maximum number of marked points")->check(CLI::Range(0u, 40u));
    add_format(series);
    add_cache(series);

    auto* jfun = app.add_subcommand("jfun", "J-function in the representation basis");
    add_group(jfun);
    jfun->add_option("--max-points", flags.max_points, "order in u")->check(CLI::Range(0u, 40u));
    add_format(jfun);

    auto* validate = app.add_subcommand("validate-group", "parse and check a group description");
    add_group(validate);
    add_format(validate);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance corpus");
    selftest->add_option("--group", flags.group, "run the Omega property suite on this group");
    selftest->add_option("--cache", flags.cache, "verify every entry of a cache file (group from --group, default z5)");
    selftest->add_option("--only", flags.only, "run a single criterion")->check(CLI::Range(1, 11));
    selftest->add_flag("--verbose", flags.verbose, "print notes");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "hhodge: " << e.what() << "\n";
        return 1;
    }

    Runner runner(flags, out);
    try {
        if (*psi) runner.psi();
        else if (*omega) runner.omega();
        else if (*corr) runner.corr();
        else if (*hodge) runner.hodge();
        else if (*euler) runner.euler();
        else if (*series) runner.series();
        else if (*jfun) runner.jfun();
        else if (*validate) runner.validate_group();
        else if (*selftest) return runner.selftest();
    } catch (const InconsistencyError& e) {
        err << "hhodge: inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "hhodge: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "hhodge: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace hhodge::cli
