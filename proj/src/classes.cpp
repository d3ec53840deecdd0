#include "hhodge/classes.hpp"

#include <algorithm>
#include <cctype>

#include "hhodge/error.hpp"

namespace hhodge {

ChPolynomial::ChPolynomial(const Rational& scalar)
{
    add({}, scalar);
}

ChPolynomial ChPolynomial::generator(ChInsertion ch)
{
    ChPolynomial p;
    p.add({ch}, Rational(1));
    return p;
}

unsigned ChPolynomial::degree(const Monomial& m)
{
    unsigned d = 0;
    for (const auto& c : m) d += c.k;
    return d;
}

void ChPolynomial::add(const Monomial& m, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void ChPolynomial::truncate(unsigned max_degree)
{
    std::erase_if(terms_, [&](const auto& kv) { return degree(kv.first) > max_degree; });
}

ChPolynomial& ChPolynomial::operator+=(const ChPolynomial& o)
{
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

ChPolynomial& ChPolynomial::operator-=(const ChPolynomial& o)
{
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

ChPolynomial& ChPolynomial::operator*=(const ChPolynomial& o)
{
    ChPolynomial out;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            std::sort(m.begin(), m.end());
            out.add(m, c1 * c2);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

std::string ChPolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (out.empty()) out += sgn(c) < 0 ? "-" : "";
        else out += sgn(c) < 0 ? " - " : " + ";
        std::string body;
        for (const auto& ch : m) body += (body.empty() ? "" : "*") + ("ch" + std::to_string(ch.k) + "(" + std::to_string(ch.irrep) + ")");
        if (body.empty()) out += hhodge::to_string(mag);
        else if (mag == 1) out += body;
        else out += hhodge::to_string(mag) + "*" + body;
    }
    return out;
}

namespace {

class ExprParser {
public:
    ExprParser(const FiniteGroup& g, std::string_view text) : group_(g)
    {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    ClassExpr parse()
    {
        if (s_.empty()) throw ParseError("empty class expression");
        ClassExpr expr;
        bool first = true;
        while (pos_ < s_.size() || first) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = s_[pos_++] == '-';
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            ClassTerm term = parse_term();
            if (negative) term.coeff = -term.coeff;
            expr.terms.push_back(std::move(term));
        }
        return expr;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in class expression '" + s_ + "'");
    }

    ClassTerm parse_term()
    {
        ClassTerm term;
        while (true) {
            parse_factor(term);
            if (peek() != '*') break;
            ++pos_;
        }
        return term;
    }

    void parse_factor(ClassTerm& term)
    {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t end = pos_;
            while (end < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[end])) || s_[end] == '/')) ++end;
            term.coeff *= parse_rational(s_.substr(pos_, end - pos_));
            pos_ = end;
            return;
        }
        std::size_t end = pos_;
        while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
        const std::string name = s_.substr(pos_, end - pos_);
        pos_ = end;
        ClassGenerator gen;
        if (name == "e") gen.kind = ClassGenerator::Kind::Euler;
        else if (name == "c") gen.kind = ClassGenerator::Kind::Chern;
        else if (name == "lam") gen.kind = ClassGenerator::Kind::Lambda;
        else if (name == "ch") gen.kind = ClassGenerator::Kind::Ch;
        else fail("unknown generator '" + name + "'");

        if (gen.kind != ClassGenerator::Kind::Euler) {
            std::size_t dend = pos_;
            while (dend < s_.size() && std::isdigit(static_cast<unsigned char>(s_[dend]))) ++dend;
            if (dend == pos_ || dend - pos_ > 4) fail("generator '" + name + "' needs a degree");
            gen.degree = static_cast<unsigned>(std::stoul(s_.substr(pos_, dend - pos_)));
            pos_ = dend;
            if (gen.kind == ClassGenerator::Kind::Ch && gen.degree == 0)
                fail("ch0 is the virtual rank, not a generator");
        }
        if (peek() != '(') fail("expected '('");
        ++pos_;
        while (true) {
            std::size_t aend = pos_;
            while (aend < s_.size() && std::isdigit(static_cast<unsigned char>(s_[aend]))) ++aend;
            if (aend == pos_ || aend - pos_ > 4) fail("expected an irrep index");
            const unsigned alpha = static_cast<unsigned>(std::stoul(s_.substr(pos_, aend - pos_)));
            if (alpha >= group_.num_classes()) fail("irrep index " + std::to_string(alpha) + " out of range");
            gen.irreps.push_back(alpha);
            pos_ = aend;
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ')') {
                ++pos_;
                break;
            }
            fail("expected ',' or ')'");
        }
        if (gen.kind != ClassGenerator::Kind::Euler && gen.irreps.size() != 1) fail("generator '" + name + "' takes one irrep");
        term.factors.push_back(std::move(gen));
    }

    const FiniteGroup& group_;
    std::string s_;
    std::size_t pos_ = 0;
};

// c_j(E_alpha^vee) for j = 0..max_degree on one component.
std::vector<ChPolynomial> chern_classes(Engine& engine, unsigned alpha, unsigned genus,
                                        const std::vector<unsigned>& classes, unsigned max_degree)
{
    const Rational rank = engine.rank_r1(alpha, genus, classes);
    if (!is_integer(rank) || sgn(rank) < 0)
        throw ValidationError("rank of R^1 for irrep " + std::to_string(alpha) + " is " + to_string(rank) +
                              ", not a nonnegative integer");
    // ch_k(R^1) = -ch_k(F) for k >= 1.
    std::vector<ChPolynomial> ch(max_degree + 1);
    for (unsigned k = 1; k <= max_degree; ++k) ch[k] = ChPolynomial(Rational(-1)) * ChPolynomial::generator({k, alpha});
    auto c = chern_from_ch(ch, max_degree);
    for (auto& cj : c) cj.truncate(max_degree);
    for (unsigned j = 0; j <= max_degree; ++j)
        if (Rational(j) > rank) c[j] = ChPolynomial();
    return c;
}

}  // namespace

ClassExpr parse_class_expr(const FiniteGroup& g, std::string_view text)
{
    return ExprParser(g, text).parse();
}

ChPolynomial normalize(const ClassExpr& expr, Engine& engine, unsigned genus, const std::vector<unsigned>& classes,
                       unsigned max_degree)
{
    std::map<unsigned, std::vector<ChPolynomial>> chern;
    auto chern_of = [&](unsigned alpha) -> const std::vector<ChPolynomial>& {
        auto it = chern.find(alpha);
        if (it == chern.end()) it = chern.emplace(alpha, chern_classes(engine, alpha, genus, classes, max_degree)).first;
        return it->second;
    };

    ChPolynomial out;
    for (const auto& term : expr.terms) {
        ChPolynomial product(term.coeff);
        for (const auto& f : term.factors) {
            ChPolynomial factor;
            switch (f.kind) {
            case ClassGenerator::Kind::Ch:
                factor = ChPolynomial::generator({f.degree, f.irreps[0]});
                break;
            case ClassGenerator::Kind::Chern:
            case ClassGenerator::Kind::Lambda:
                if (f.degree <= max_degree) factor = chern_of(f.irreps[0])[f.degree];
                if (f.kind == ClassGenerator::Kind::Lambda && f.degree % 2) factor = ChPolynomial(Rational(-1)) * factor;
                break;
            case ClassGenerator::Kind::Euler:
                factor = ChPolynomial(Rational(1));
                for (unsigned alpha : f.irreps) {
                    const Rational rank = engine.rank_r1(alpha, genus, classes);
                    const auto& c = chern_of(alpha);  // validates the rank
                    const unsigned r = static_cast<unsigned>(rank.get_num().get_ui());
                    factor *= r <= max_degree ? c[r] : ChPolynomial();
                    factor.truncate(max_degree);
                }
                break;
            }
            product *= factor;
            product.truncate(max_degree);
        }
        out += product;
    }
    return out;
}

Rational evaluate_class(Engine& engine, unsigned genus, const std::vector<Insertion>& insertions, const ClassExpr& expr)
{
    std::vector<unsigned> classes;
    long psi_degree = 0;
    for (const auto& i : insertions) {
        if (i.cls >= engine.group().num_classes()) throw ValidationError("class index out of range");
        classes.push_back(i.cls);
        psi_degree += i.psi;
    }
    if (2 * static_cast<long>(genus) - 2 + static_cast<long>(insertions.size()) <= 0)
        throw ValidationError("unstable moduli: g=" + std::to_string(genus) + ", n=" + std::to_string(insertions.size()));
    if (engine.omega()(genus, classes) == 0) return 0;
    const long dim = 3 * static_cast<long>(genus) - 3 + static_cast<long>(insertions.size());
    const long target = dim - psi_degree;
    if (target < 0) return 0;

    const ChPolynomial poly = normalize(expr, engine, genus, classes, static_cast<unsigned>(target));
    Rational total = 0;
    for (const auto& [m, c] : poly.terms()) {
        if (ChPolynomial::degree(m) != static_cast<unsigned>(target)) continue;
        total += c * engine.twisted_correlator(TwistedCorrelator{genus, insertions, m});
    }
    return total;
}

}  // namespace hhodge
