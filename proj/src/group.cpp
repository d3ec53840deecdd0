#include "hhodge/group.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hhodge/error.hpp"

namespace hhodge {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) throw ValidationError(what);
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, unsigned order, std::vector<ConjClass> classes, std::vector<Irrep> irreps)
    : name_(std::move(name)), order_(order), classes_(std::move(classes)), irreps_(std::move(irreps))
{
    validate();
    build_derived();
}

void FiniteGroup::validate()
{
    const std::size_t n = classes_.size();
    require(order_ >= 1, "group order must be positive");
    require(n >= 1, "group has no conjugacy classes");
    require(irreps_.size() == n, "number of irreps (" + std::to_string(irreps_.size()) +
                                     ") differs from number of classes (" + std::to_string(n) + ")");

    // Names appear in insertion lists and cache keys.
    auto usable = [](const std::string& name) {
        return !name.empty() && name.find_first_of(":,*=;# \t") == std::string::npos;
    };
    for (std::size_t c = 0; c < n; ++c) {
        require(usable(classes_[c].name), "class name '" + classes_[c].name + "' is empty or contains one of :,*=;# or a space");
        for (std::size_t d = 0; d < c; ++d) require(classes_[d].name != classes_[c].name, "duplicate class " + classes_[c].name);
    }
    for (std::size_t a = 0; a < irreps_.size(); ++a) {
        require(usable(irreps_[a].name), "irrep name '" + irreps_[a].name + "' is empty or contains one of :,*=;# or a space");
        for (std::size_t b = 0; b < a; ++b) require(irreps_[b].name != irreps_[a].name, "duplicate irrep " + irreps_[a].name);
    }

    unsigned total = 0;
    unsigned identities = 0;
    for (std::size_t c = 0; c < n; ++c) {
        const auto& cl = classes_[c];
        require(cl.size >= 1 && order_ % cl.size == 0,
                "class " + cl.name + ": size " + std::to_string(cl.size) + " does not divide |G|");
        require(cl.order >= 1 && order_ % cl.order == 0,
                "class " + cl.name + ": element order does not divide |G|");
        require(cl.inverse < n, "class " + cl.name + ": inverse index out of range");
        total += cl.size;
        if (cl.size == 1 && cl.order == 1) ++identities;
    }
    require(total == order_, "class sizes sum to " + std::to_string(total) + ", not |G| = " + std::to_string(order_));
    require(identities == 1, "exactly one class must have size 1 and element order 1");
    require(classes_[0].size == 1 && classes_[0].order == 1, "class 0 must be the identity class");

    for (std::size_t c = 0; c < n; ++c) {
        const auto& cl = classes_[c];
        const auto& inv = classes_[cl.inverse];
        require(inv.inverse == c, "inverse map is not an involution at class " + cl.name);
        require(inv.size == cl.size && inv.order == cl.order, "class " + cl.name + " and its inverse differ in size or order");
        require(cl.powers.size() == cl.order,
                "class " + cl.name + ": power map must list exactly elemorder = " + std::to_string(cl.order) + " entries");
        require(cl.powers[0] == 0, "class " + cl.name + ": x^0 must be the identity class");
        if (cl.order > 1) require(cl.powers[1] == c, "class " + cl.name + ": x^1 must be the class itself");
        for (unsigned j = 0; j < cl.order; ++j) {
            const unsigned pj = cl.powers[j];
            require(pj < n, "class " + cl.name + ": power map entry out of range");
            const unsigned expected = cl.order / std::gcd(j, cl.order);
            require(classes_[pj].order == expected, "class " + cl.name + ": x^" + std::to_string(j) + " has the wrong order");
            const unsigned pinv = cl.powers[(cl.order - j) % cl.order];
            require(classes_[pj].inverse == pinv, "class " + cl.name + ": powers j and r-j are not mutually inverse");
        }
    }
    require(classes_[0].inverse == 0, "identity class must be self-inverse");

    unsigned dim_squares = 0;
    for (std::size_t a = 0; a < n; ++a) {
        const auto& ir = irreps_[a];
        require(ir.values.size() == n, "irrep " + ir.name + ": expected " + std::to_string(n) + " character values");
        require(ir.dim >= 1, "irrep " + ir.name + ": dimension must be positive");
        require(ir.values[0] == Cyclotomic(static_cast<long>(ir.dim)), "irrep " + ir.name + ": value at identity differs from dim");
        dim_squares += ir.dim * ir.dim;
    }
    for (const auto& v : irreps_[0].values) require(v == Cyclotomic(1), "irrep 0 must be the trivial representation");
    require(dim_squares == order_, "sum of squared dimensions is " + std::to_string(dim_squares) + ", not |G|");

    // Row orthogonality: (1/|G|) sum_c |[c]| chi_a(c) chi_b(c^{-1}) = delta_ab.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            Cyclotomic acc;
            for (std::size_t c = 0; c < n; ++c)
                acc += Cyclotomic(static_cast<long>(classes_[c].size)) * irreps_[a].values[c] *
                       irreps_[b].values[classes_[c].inverse];
            require(acc == Cyclotomic(a == b ? static_cast<long>(order_) : 0L),
                    "row orthogonality fails for irreps " + irreps_[a].name + ", " + irreps_[b].name);
        }
    }
    // Column orthogonality: sum_a chi_a(c^{-1}) chi_a(d) = |C(c)| delta_cd.
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = c; d < n; ++d) {
            Cyclotomic acc;
            for (std::size_t a = 0; a < n; ++a) acc += irreps_[a].values[classes_[c].inverse] * irreps_[a].values[d];
            const long expected = c == d ? static_cast<long>(order_ / classes_[c].size) : 0L;
            require(acc == Cyclotomic(expected),
                    "column orthogonality fails for classes " + classes_[c].name + ", " + classes_[d].name);
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
            require(irreps_[a].values[classes_[c].inverse] == irreps_[a].values[c].conjugate(),
                    "irrep " + irreps_[a].name + ": value at inverse class is not the conjugate");
}

void FiniteGroup::build_derived()
{
    const std::size_t n = classes_.size();
    abelian_ = true;
    for (const auto& cl : classes_) abelian_ = abelian_ && cl.size == 1;

    structure_.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (std::size_t c1 = 0; c1 < n; ++c1) {
        for (std::size_t c2 = 0; c2 < n; ++c2) {
            for (std::size_t c3 = 0; c3 < n; ++c3) {
                Cyclotomic acc;
                for (std::size_t a = 0; a < n; ++a) {
                    const auto& chi = irreps_[a].values;
                    acc += chi[c1] * chi[c2] * chi[classes_[c3].inverse] *
                           Cyclotomic(make_rational(1, static_cast<long>(irreps_[a].dim)));
                }
                acc *= Cyclotomic(make_rational(static_cast<long>(classes_[c1].size * classes_[c2].size), order_));
                Rational value;
                try {
                    value = acc.to_rational();
                } catch (const InconsistencyError&) {
                    throw ValidationError("structure constant of " + classes_[c1].name + "*" + classes_[c2].name +
                                          " at " + classes_[c3].name + " is irrational: " + acc.to_string());
                }
                require(is_integer(value) && sgn(value) >= 0,
                        "structure constant of " + classes_[c1].name + "*" + classes_[c2].name + " at " +
                            classes_[c3].name + " is " + to_string(value) + ", not a nonnegative integer");
                structure_[c1][c2][c3] = value;
            }
        }
    }

    multiplicities_.assign(n, std::vector<std::vector<unsigned>>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t c = 0; c < n; ++c) {
            const auto& cl = classes_[c];
            const unsigned r = cl.order;
            std::vector<unsigned> mult(r, 0);
            unsigned total = 0;
            for (unsigned l = 0; l < r; ++l) {
                Cyclotomic acc;
                for (unsigned j = 0; j < r; ++j)
                    acc += irreps_[a].values[cl.powers[j]] *
                           Cyclotomic::root_of_unity(r, -static_cast<long>(j) * static_cast<long>(l));
                acc *= Cyclotomic(make_rational(1, r));
                Rational m;
                try {
                    m = acc.to_rational();
                } catch (const InconsistencyError&) {
                    throw ValidationError("eigenvalue multiplicity of irrep " + irreps_[a].name + " at class " +
                                          cl.name + " is irrational: " + acc.to_string());
                }
                require(is_integer(m) && sgn(m) >= 0,
                        "eigenvalue multiplicity of irrep " + irreps_[a].name + " at class " + cl.name + " is " +
                            to_string(m));
                mult[l] = static_cast<unsigned>(m.get_num().get_ui());
                total += mult[l];
            }
            require(total == irreps_[a].dim,
                    "eigenvalue multiplicities of irrep " + irreps_[a].name + " at class " + cl.name + " do not sum to dim");
            multiplicities_[a][c] = std::move(mult);
        }
    }

    if (abelian_) {
        product_.assign(n, std::vector<unsigned>(n, 0));
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                unsigned hits = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (structure_[a][b][c] == 1) {
                        product_[a][b] = static_cast<unsigned>(c);
                        ++hits;
                    }
                }
                require(hits == 1, "abelian product table is not a function");
            }
        }
    }
}

std::optional<unsigned> FiniteGroup::class_index(std::string_view name) const
{
    for (std::size_t c = 0; c < classes_.size(); ++c)
        if (classes_[c].name == name) return static_cast<unsigned>(c);
    return std::nullopt;
}

std::optional<unsigned> FiniteGroup::irrep_index(std::string_view name) const
{
    for (std::size_t a = 0; a < irreps_.size(); ++a)
        if (irreps_[a].name == name) return static_cast<unsigned>(a);
    return std::nullopt;
}

unsigned FiniteGroup::multiply(unsigned a, unsigned b) const
{
    if (!abelian_) throw std::logic_error("class multiplication is only a function for abelian groups");
    return product_.at(a).at(b);
}

const Rational& FiniteGroup::structure_constant(unsigned c1, unsigned c2, unsigned c3) const
{
    return structure_.at(c1).at(c2).at(c3);
}

const std::vector<unsigned>& FiniteGroup::eig_multiplicities(unsigned alpha, unsigned c) const
{
    return multiplicities_.at(alpha).at(c);
}

std::string FiniteGroup::canonical_text() const
{
    std::ostringstream out;
    out << "group " << name_ << '\n' << "order " << order_ << '\n';
    for (const auto& cl : classes_)
        out << "class " << cl.name << " size=" << cl.size << " elemorder=" << cl.order
            << " inverse=" << classes_[cl.inverse].name << '\n';
    for (const auto& cl : classes_) {
        out << "powers " << cl.name << ':';
        for (std::size_t j = 0; j < cl.powers.size(); ++j) out << (j ? "," : " ") << classes_[cl.powers[j]].name;
        out << '\n';
    }
    for (const auto& ir : irreps_) {
        out << "irrep " << ir.name << " dim=" << ir.dim << " values=";
        for (std::size_t c = 0; c < ir.values.size(); ++c) out << (c ? "; " : " ") << ir.values[c].to_string();
        out << '\n';
    }
    return out.str();
}

std::string FiniteGroup::fingerprint() const
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : canonical_text()) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

FiniteGroup cyclic_group(unsigned n)
{
    if (n == 0) throw ValidationError("cyclic group order must be positive");
    auto class_name = [](unsigned a) { return a == 0 ? std::string("1") : a == 1 ? std::string("w") : "w" + std::to_string(a); };
    std::vector<ConjClass> classes(n);
    for (unsigned a = 0; a < n; ++a) {
        auto& cl = classes[a];
        cl.name = class_name(a);
        cl.size = 1;
        cl.order = n / std::gcd(a, n);
        cl.inverse = (n - a) % n;
        for (unsigned j = 0; j < cl.order; ++j) cl.powers.push_back((a * j) % n);
    }
    std::vector<Irrep> irreps(n);
    for (unsigned alpha = 0; alpha < n; ++alpha) {
        irreps[alpha].name = "V" + std::to_string(alpha);
        irreps[alpha].dim = 1;
        for (unsigned a = 0; a < n; ++a)
            irreps[alpha].values.push_back(Cyclotomic::root_of_unity(n, static_cast<long>(a) * alpha));
    }
    return FiniteGroup("Z" + std::to_string(n), n, std::move(classes), std::move(irreps));
}

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string strip_spaces(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::vector<std::string> words(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

// Removes whitespace around '=' so "size = 3" and "size=3" tokenize alike.
std::string tighten_equals(std::string_view s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '=') {
            while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
            out += '=';
            while (i + 1 < s.size() && std::isspace(static_cast<unsigned char>(s[i + 1]))) ++i;
        } else {
            out += s[i];
        }
    }
    return out;
}

unsigned parse_unsigned(const std::string& s, int line, const std::string& what)
{
    if (s.empty() || s.size() > 9) throw ParseError("bad " + what + " '" + s + "'", line);
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad " + what + " '" + s + "'", line);
    return static_cast<unsigned>(std::stoul(s));
}

struct RawClass {
    std::string name, inverse;
    unsigned size = 0, order = 0;
    std::vector<std::string> powers;
    bool has_powers = false;
    int line = 0;
};

struct RawIrrep {
    std::string name;
    unsigned dim = 0;
    std::vector<Cyclotomic> values;
};

}  // namespace

Cyclotomic parse_character_value(std::string_view text)
{
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty character value");
    auto fail = [&]() -> ParseError { return ParseError("malformed character value '" + std::string(text) + "'"); };

    Cyclotomic total;
    std::size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (i != 0) {
            throw fail();
        }
        std::size_t end = i;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        const std::string term = s.substr(i, end - i);
        if (term.empty()) throw fail();

        Rational coeff = 1;
        std::string root = term;
        if (term[0] != 'z') {
            auto star = term.find('*');
            coeff = parse_rational(term.substr(0, star));
            root = star == std::string::npos ? std::string() : term.substr(star + 1);
            if (star != std::string::npos && root.empty()) throw fail();
        }
        Cyclotomic value(coeff);
        if (!root.empty()) {
            auto caret = root.find('^');
            if (root[0] != 'z' || caret == std::string::npos) throw fail();
            const std::string n_str = root.substr(1, caret - 1);
            const std::string k_str = root.substr(caret + 1);
            if (n_str.empty() || k_str.empty()) throw fail();
            for (char c : n_str + k_str)
                if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
            const unsigned n = static_cast<unsigned>(std::stoul(n_str));
            if (n == 0) throw fail();
            value *= Cyclotomic::root_of_unity(n, std::stol(k_str));
        }
        total += negative ? -value : value;
        i = end;
    }
    return total;
}

FiniteGroup load_group(std::string_view text)
{
    std::string name;
    std::optional<unsigned> order;
    std::vector<RawClass> raw_classes;
    std::vector<RawIrrep> raw_irreps;

    std::istringstream in{std::string(text)};
    std::string raw_line;
    int line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        if (!raw_line.empty() && raw_line.back() == '\r') raw_line.pop_back();
        if (auto hash = raw_line.find('#'); hash != std::string::npos) raw_line.erase(hash);
        const std::string line = trim(raw_line);
        if (line.empty()) continue;

        const auto space = line.find_first_of(" \t");
        const std::string keyword = line.substr(0, space);
        const std::string rest = space == std::string::npos ? std::string() : trim(line.substr(space));

        if (keyword == "group") {
            auto w = words(rest);
            if (w.size() != 1) throw ParseError("expected 'group NAME'", line_no);
            if (!name.empty()) throw ParseError("duplicate 'group' line", line_no);
            name = w[0];
        } else if (keyword == "order") {
            if (order) throw ParseError("duplicate 'order' line", line_no);
            order = parse_unsigned(strip_spaces(rest), line_no, "order");
        } else if (keyword == "class") {
            auto w = words(tighten_equals(rest));
            if (w.empty()) throw ParseError("expected 'class NAME size=.. elemorder=.. inverse=..'", line_no);
            RawClass rc;
            rc.name = w[0];
            rc.line = line_no;
            std::set<std::string> seen;
            for (std::size_t k = 1; k < w.size(); ++k) {
                auto eq = w[k].find('=');
                if (eq == std::string::npos) throw ParseError("expected key=value, got '" + w[k] + "'", line_no);
                const std::string key = w[k].substr(0, eq), value = w[k].substr(eq + 1);
                if (!seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", line_no);
                if (key == "size") rc.size = parse_unsigned(value, line_no, "size");
                else if (key == "elemorder") rc.order = parse_unsigned(value, line_no, "elemorder");
                else if (key == "inverse") rc.inverse = value;
                else throw ParseError("unknown class attribute '" + key + "'", line_no);
            }
            if (seen.size() != 3) throw ParseError("class needs size=, elemorder= and inverse=", line_no);
            for (const auto& other : raw_classes)
                if (other.name == rc.name) throw ParseError("duplicate class '" + rc.name + "'", line_no);
            raw_classes.push_back(std::move(rc));
        } else if (keyword == "powers") {
            auto colon = rest.find(':');
            if (colon == std::string::npos) throw ParseError("expected 'powers NAME: c0,c1,...'", line_no);
            const std::string cls = trim(rest.substr(0, colon));
            auto it = std::find_if(raw_classes.begin(), raw_classes.end(), [&](const RawClass& c) { return c.name == cls; });
            if (it == raw_classes.end()) throw ParseError("powers for undeclared class '" + cls + "'", line_no);
            if (it->has_powers) throw ParseError("duplicate powers for class '" + cls + "'", line_no);
            it->powers = split(rest.substr(colon + 1), ',');
            it->has_powers = true;
        } else if (keyword == "irrep") {
            const std::string body = tighten_equals(rest);
            auto values_at = body.find("values=");
            if (values_at == std::string::npos) throw ParseError("irrep needs values=", line_no);
            auto w = words(body.substr(0, values_at));
            if (w.size() != 2 || w[1].rfind("dim=", 0) != 0) throw ParseError("expected 'irrep NAME dim=D values=...'", line_no);
            RawIrrep ri;
            ri.name = w[0];
            ri.dim = parse_unsigned(w[1].substr(4), line_no, "dim");
            for (const auto& v : split(body.substr(values_at + 7), ';')) {
                try {
                    ri.values.push_back(parse_character_value(v));
                } catch (const ParseError& e) {
                    throw ParseError(e.what(), line_no);
                }
            }
            for (const auto& other : raw_irreps)
                if (other.name == ri.name) throw ParseError("duplicate irrep '" + ri.name + "'", line_no);
            raw_irreps.push_back(std::move(ri));
        } else {
            throw ParseError("unknown keyword '" + keyword + "'", line_no);
        }
    }

    if (name.empty()) throw ParseError("missing 'group' line");
    if (!order) throw ParseError("missing 'order' line");

    auto index_of = [&](const std::string& cls, int line) -> unsigned {
        for (std::size_t c = 0; c < raw_classes.size(); ++c)
            if (raw_classes[c].name == cls) return static_cast<unsigned>(c);
        throw ParseError("unknown class '" + cls + "'", line);
    };

    std::vector<ConjClass> classes;
    for (const auto& rc : raw_classes) {
        if (!rc.has_powers) throw ParseError("missing powers line for class '" + rc.name + "'", rc.line);
        ConjClass cl;
        cl.name = rc.name;
        cl.size = rc.size;
        cl.order = rc.order;
        cl.inverse = index_of(rc.inverse, rc.line);
        for (const auto& p : rc.powers) cl.powers.push_back(index_of(p, rc.line));
        classes.push_back(std::move(cl));
    }
    std::vector<Irrep> irreps;
    for (auto& ri : raw_irreps) irreps.push_back(Irrep{std::move(ri.name), ri.dim, std::move(ri.values)});

    return FiniteGroup(std::move(name), *order, std::move(classes), std::move(irreps));
}

FiniteGroup load_group_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open group file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_group(buf.str());
}

FiniteGroup resolve_group(std::string_view spec)
{
    if (spec.size() >= 2 && (spec[0] == 'z' || spec[0] == 'Z')) {
        bool digits = true;
        for (char c : spec.substr(1)) digits = digits && std::isdigit(static_cast<unsigned char>(c));
        if (digits && spec.size() <= 6) return cyclic_group(static_cast<unsigned>(std::stoul(std::string(spec.substr(1)))));
    }
    return load_group_file(std::filesystem::path(std::string(spec)));
}

Metric metric(const FiniteGroup& g)
{
    const std::size_t n = g.num_classes();
    Metric m{Matrix(n, std::vector<Rational>(n)), Matrix(n, std::vector<Rational>(n))};
    for (unsigned c = 0; c < n; ++c) {
        const unsigned inv = g.conj_class(c).inverse;
        m.lower[c][inv] = make_rational(1, g.centralizer_order(c));
        m.upper[c][inv] = Rational(g.centralizer_order(c));
    }
    return m;
}

HVector HVector::unit(Basis b, std::size_t size, std::size_t index)
{
    HVector v{b, std::vector<Cyclotomic>(size)};
    v.coeffs.at(index) = Cyclotomic(1);
    return v;
}

bool operator==(const HVector& a, const HVector& b)
{
    return a.basis == b.basis && a.coeffs == b.coeffs;
}

HVector class_product(const FiniteGroup& g, unsigned c1, unsigned c2)
{
    HVector v{Basis::Class, std::vector<Cyclotomic>(g.num_classes())};
    for (unsigned c3 = 0; c3 < g.num_classes(); ++c3) v.coeffs[c3] = Cyclotomic(g.structure_constant(c1, c2, c3));
    return v;
}

HVector multiply(const FiniteGroup& g, const HVector& a, const HVector& b)
{
    if (a.basis != Basis::Class || b.basis != Basis::Class) throw std::invalid_argument("multiply expects class-basis vectors");
    const std::size_t n = g.num_classes();
    HVector out{Basis::Class, std::vector<Cyclotomic>(n)};
    for (unsigned i = 0; i < n; ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (unsigned j = 0; j < n; ++j) {
            if (b.coeffs[j].is_zero()) continue;
            const Cyclotomic w = a.coeffs[i] * b.coeffs[j];
            for (unsigned k = 0; k < n; ++k)
                if (sgn(g.structure_constant(i, j, k)) != 0) out.coeffs[k] += w * Cyclotomic(g.structure_constant(i, j, k));
        }
    }
    return out;
}

HVector basis_change(const FiniteGroup& g, const HVector& v)
{
    const std::size_t n = g.num_classes();
    HVector out{v.basis == Basis::Class ? Basis::Representation : Basis::Class, std::vector<Cyclotomic>(n)};
    if (v.basis == Basis::Representation) {
        // sum_a v_a f_a with f_a = (dim/|G|) sum_c chi_a(c^{-1}) e_c
        for (unsigned a = 0; a < n; ++a) {
            if (v.coeffs[a].is_zero()) continue;
            const Cyclotomic scale = v.coeffs[a] * Cyclotomic(make_rational(g.irrep(a).dim, g.order()));
            for (unsigned c = 0; c < n; ++c) out.coeffs[c] += scale * g.character(a, g.conj_class(c).inverse);
        }
    } else {
        // sum_c v_c e_c with e_c = sum_a (|[c]|/dim) chi_a(c) f_a
        for (unsigned c = 0; c < n; ++c) {
            if (v.coeffs[c].is_zero()) continue;
            for (unsigned a = 0; a < n; ++a)
                out.coeffs[a] += v.coeffs[c] * Cyclotomic(make_rational(g.conj_class(c).size, g.irrep(a).dim)) *
                                 g.character(a, c);
        }
    }
    return out;
}

}  // namespace hhodge
