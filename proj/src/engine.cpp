#include "hhodge/engine.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hhodge/bernoulli.hpp"
#include "hhodge/error.hpp"

namespace hhodge {

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(std::string_view text)
{
    std::vector<std::string> items;
    const std::string t = trim(text);
    if (t.empty()) return items;
    std::size_t start = 0;
    while (true) {
        auto pos = t.find(',', start);
        items.push_back(trim(std::string_view(t).substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return items;
}

unsigned parse_count(const std::string& s, const std::string& what)
{
    if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("bad " + what + " '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
}

// n = 0 counts as unstable in every genus.
bool stable(unsigned genus, std::size_t n)
{
    return n > 0 && 2 * static_cast<long>(genus) - 2 + static_cast<long>(n) > 0;
}

// Compact memo key: one byte per field.
std::string compact_key(const TwistedCorrelator& tc)
{
    std::string key;
    key.reserve(3 + 2 * (tc.insertions.size() + tc.chs.size()));
    key.push_back(static_cast<char>(tc.genus));
    key.push_back(static_cast<char>(tc.insertions.size()));
    for (const auto& i : tc.insertions) {
        key.push_back(static_cast<char>(i.cls));
        key.push_back(static_cast<char>(i.psi));
    }
    for (const auto& c : tc.chs) {
        key.push_back(static_cast<char>(c.k));
        key.push_back(static_cast<char>(c.irrep));
    }
    return key;
}

TwistedCorrelator decode_key(const std::string& key)
{
    auto at = [&](std::size_t i) { return static_cast<unsigned>(static_cast<unsigned char>(key[i])); };
    TwistedCorrelator tc;
    tc.genus = at(0);
    const unsigned n = at(1);
    std::size_t pos = 2;
    for (unsigned i = 0; i < n; ++i, pos += 2) tc.insertions.push_back({at(pos), at(pos + 1)});
    for (; pos < key.size(); pos += 2) tc.chs.push_back({at(pos), at(pos + 1)});
    return tc;
}

template <typename T>
std::vector<std::pair<T, unsigned>> group_equal(const std::vector<T>& sorted)
{
    std::vector<std::pair<T, unsigned>> out;
    for (const auto& x : sorted) {
        if (!out.empty() && out.back().first == x) ++out.back().second;
        else out.emplace_back(x, 1u);
    }
    return out;
}

}  // namespace

void TwistedCorrelator::canonicalize()
{
    std::sort(insertions.begin(), insertions.end());
    std::sort(chs.begin(), chs.end());
}

std::string TwistedCorrelator::key(const FiniteGroup& g) const
{
    return "hodge g=" + std::to_string(genus) + " ins=" + format_insertions(g, insertions) + " ch=" + format_chs(chs);
}

std::vector<Insertion> parse_insertions(const FiniteGroup& g, std::string_view text)
{
    std::vector<Insertion> out;
    for (const auto& item : split_list(text)) {
        auto colon = item.rfind(':');
        if (colon == std::string::npos) throw ParseError("insertion '" + item + "' is not class:psi");
        const std::string cls = trim(item.substr(0, colon));
        std::string rest = trim(item.substr(colon + 1));
        unsigned count = 1;
        if (auto star = rest.find('*'); star != std::string::npos) {
            count = parse_count(trim(rest.substr(star + 1)), "insertion count");
            rest = trim(rest.substr(0, star));
        }
        const unsigned psi = parse_count(rest, "psi power");
        auto idx = g.class_index(cls);
        if (!idx) throw ParseError("unknown class '" + cls + "' in group " + g.name());
        for (unsigned j = 0; j < count; ++j) out.push_back({*idx, psi});
    }
    return out;
}

std::string format_insertions(const FiniteGroup& g, std::vector<Insertion> ins)
{
    std::sort(ins.begin(), ins.end());
    std::string out;
    for (const auto& [x, count] : group_equal(ins)) {
        if (!out.empty()) out += ',';
        out += g.conj_class(x.cls).name + ':' + std::to_string(x.psi);
        if (count > 1) out += '*' + std::to_string(count);
    }
    return out;
}

std::vector<ChInsertion> parse_chs(const FiniteGroup& g, std::string_view text)
{
    std::vector<ChInsertion> out;
    for (const auto& item : split_list(text)) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("ch insertion '" + item + "' is not k:alpha");
        const unsigned k = parse_count(trim(item.substr(0, colon)), "ch degree");
        const unsigned alpha = parse_count(trim(item.substr(colon + 1)), "irrep index");
        if (alpha >= g.num_classes())
            throw ParseError("irrep index " + std::to_string(alpha) + " out of range for group " + g.name());
        out.push_back({k, alpha});
    }
    return out;
}

std::string format_chs(std::vector<ChInsertion> chs)
{
    std::sort(chs.begin(), chs.end());
    std::string out;
    for (const auto& c : chs) {
        if (!out.empty()) out += ',';
        out += std::to_string(c.k) + ':' + std::to_string(c.irrep);
    }
    return out;
}

TwistedCorrelator parse_correlator_key(const FiniteGroup& g, std::string_view key)
{
    std::istringstream in{std::string(key)};
    std::string tag, genus, ins, ch;
    in >> tag >> genus >> ins >> ch;
    std::string extra;
    if (tag != "hodge" || genus.rfind("g=", 0) != 0 || ins.rfind("ins=", 0) != 0 || ch.rfind("ch=", 0) != 0 || (in >> extra))
        throw ParseError("malformed correlator key '" + std::string(key) + "'");
    TwistedCorrelator tc;
    tc.genus = parse_count(genus.substr(2), "genus");
    tc.insertions = parse_insertions(g, ins.substr(4));
    tc.chs = parse_chs(g, ch.substr(3));
    tc.canonicalize();
    return tc;
}

Engine::Engine(const FiniteGroup& group, EngineOptions options)
    : group_(group), options_(std::move(options)), omega_(group), psi_(shared_psi())
{
    // Memo keys spend one byte per class or irrep index.
    if (group.num_classes() > 255) throw ValidationError("groups with more than 255 classes are not supported");
}

Rational Engine::rank_virtual(unsigned alpha, unsigned genus, const std::vector<unsigned>& classes) const
{
    Rational rank = Rational(group_.irrep(alpha).dim) * (1 - static_cast<long>(genus));
    for (unsigned c : classes) {
        const auto& m = group_.eig_multiplicities(alpha, c);
        const unsigned r = group_.conj_class(c).order;
        for (unsigned l = 0; l < r; ++l)
            if (m[l]) rank -= make_rational(static_cast<long>(m[l] * l), r);
    }
    return rank;
}

Rational Engine::rank_r1(unsigned alpha, unsigned genus, const std::vector<unsigned>& classes) const
{
    return Rational(invariant_dim(alpha)) - rank_virtual(alpha, genus, classes);
}

Rational Engine::b_coeff(unsigned alpha, unsigned k, unsigned beta)
{
    if (k == 0) throw ValidationError("b coefficient needs k >= 1");
    const auto key = std::make_tuple(alpha, k, beta);
    {
        std::lock_guard lock(mutex_);
        if (auto it = b_memo_.find(key); it != b_memo_.end()) return it->second;
    }
    const auto& m = group_.eig_multiplicities(alpha, beta);
    const unsigned r = group_.conj_class(beta).order;
    Rational sum = 0;
    for (unsigned l = 0; l < r; ++l)
        if (m[l]) sum += Rational(m[l]) * bernoulli_poly(k + 1, make_rational(l, r));
    sum /= Rational(factorial(k + 1));
    std::lock_guard lock(mutex_);
    b_memo_.emplace(key, sum);
    return sum;
}

Rational Engine::correlator(unsigned genus, const std::vector<Insertion>& insertions)
{
    if (!stable(genus, insertions.size()))
        throw ValidationError("unstable moduli: g=" + std::to_string(genus) + ", n=" + std::to_string(insertions.size()));
    TwistedCorrelator tc{genus, insertions, {}};
    for (const auto& i : tc.insertions)
        if (i.cls >= group_.num_classes()) throw ValidationError("class index out of range");
    if (!std::is_sorted(tc.insertions.begin(), tc.insertions.end())) tc.canonicalize();
    const std::string key = compact_key(tc);
    {
        std::lock_guard lock(mutex_);
        if (auto it = base_memo_.find(key); it != base_memo_.end()) return it->second;
    }
    std::vector<unsigned> exps, classes;
    for (const auto& i : tc.insertions) {
        exps.push_back(i.psi);
        classes.push_back(i.cls);
    }
    Rational value = 0;
    if (!omega_.vanishes(genus, classes)) {
        value = psi_(genus, exps);
        if (value != 0) value *= omega_(genus, classes);
    }
    std::lock_guard lock(mutex_);
    base_memo_.emplace(key, value);
    return value;
}

void Engine::check_indices(const TwistedCorrelator& tc) const
{
    if (tc.genus > 60) throw ValidationError("genus too large");
    if (tc.insertions.size() > 200) throw ValidationError("too many insertions");
    for (const auto& i : tc.insertions) {
        if (i.cls >= group_.num_classes()) throw ValidationError("class index out of range");
        if (i.psi > 200) throw ValidationError("psi power too large");
    }
    for (const auto& c : tc.chs) {
        if (c.k == 0) throw ValidationError("ch_0 is not an engine insertion; use rank_virtual");
        if (c.k > 200) throw ValidationError("ch degree too large");
        if (c.irrep >= group_.num_classes()) throw ValidationError("irrep index out of range");
    }
}

Rational Engine::twisted_correlator(TwistedCorrelator tc)
{
    check_indices(tc);
    tc.canonicalize();
    if (tc.chs.empty()) return correlator(tc.genus, tc.insertions);
    return eval(tc);
}

Rational Engine::eval(const TwistedCorrelator& tc)
{
    const long n = static_cast<long>(tc.insertions.size());
    long degree = 0;
    for (const auto& i : tc.insertions) degree += i.psi;
    for (const auto& c : tc.chs) degree += c.k;
    if (degree != 3 * static_cast<long>(tc.genus) - 3 + n) return 0;

    if (tc.chs.empty()) {
        if (!stable(tc.genus, tc.insertions.size())) return 0;
        return correlator(tc.genus, tc.insertions);
    }
    if (options_.prune_empty_components) {
        std::vector<unsigned> classes;
        for (const auto& i : tc.insertions) classes.push_back(i.cls);
        if (omega_.vanishes(tc.genus, classes)) return 0;
    }

    const std::string key = compact_key(tc);
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Rational value = recurse(tc);
    std::lock_guard lock(mutex_);
    memo_.emplace(key, value);
    return value;
}

Rational Engine::recurse(const TwistedCorrelator& tc)
{
    const std::size_t p = options_.pivot ? options_.pivot(tc.chs) : tc.chs.size() - 1;
    const auto [k, alpha] = tc.chs.at(p);
    std::vector<ChInsertion> rest = tc.chs;
    rest.erase(rest.begin() + static_cast<long>(p));

    Rational total = 0;

    // Dilaton shift: one extra untwisted point carrying psi^{k+1}.
    if (Rational b = b_coeff(alpha, k, 0); b != 0) {
        TwistedCorrelator next{tc.genus, tc.insertions, rest};
        next.insertions.push_back({0, k + 1});
        next.canonicalize();
        total += b * eval(next);
    }

    // Raise the psi power of one marked point by k.
    for (const auto& [x, count] : group_equal(tc.insertions)) {
        Rational b = b_coeff(alpha, k, x.cls);
        if (b == 0) continue;
        TwistedCorrelator next{tc.genus, tc.insertions, rest};
        auto it = std::find(next.insertions.begin(), next.insertions.end(), x);
        it->psi += k;
        next.canonicalize();
        total -= Rational(count) * b * eval(next);
    }

    total += node_term(tc, rest, k, alpha);
    return total;
}

Rational Engine::node_term(const TwistedCorrelator& tc, const std::vector<ChInsertion>& rest, unsigned k, unsigned alpha)
{
    const auto ins_groups = group_equal(tc.insertions);
    const auto ch_groups = group_equal(rest);
    const unsigned nc = static_cast<unsigned>(group_.num_classes());
    // For abelian groups the left factor is empty unless its classes multiply
    // to 1, which pins the node class to the inverse of the left product.
    const bool pin_node = options_.prune_empty_components && group_.is_abelian();

    // |C(beta)| b(alpha, k, beta^{-1}) for the node class beta on the left.
    std::vector<Rational> weight(nc);
    for (unsigned beta = 0; beta < nc; ++beta)
        weight[beta] = b_coeff(alpha, k, group_.conj_class(beta).inverse) * Rational(group_.centralizer_order(beta));

    std::vector<unsigned> take_ins(ins_groups.size(), 0), take_ch(ch_groups.size(), 0);
    Rational total = 0;

    for (unsigned l = 0; l < k; ++l) {
        Rational sum = 0;

        if (tc.genus >= 1) {
            for (unsigned beta = 0; beta < nc; ++beta) {
                if (weight[beta] == 0) continue;
                TwistedCorrelator next{tc.genus - 1, tc.insertions, rest};
                next.insertions.push_back({beta, l});
                next.insertions.push_back({group_.conj_class(beta).inverse, k - 1 - l});
                next.canonicalize();
                sum += weight[beta] * eval(next);
            }
        }

        // Ordered splits: choose how many copies of each insertion type and
        // each ch type go to the left factor, which also carries the node.
        auto leaf = [&](long left_degree, std::size_t left_n, unsigned product) {
            const long needed = left_degree + static_cast<long>(l) + 2 - static_cast<long>(left_n);  // 3 g1
            if (needed < 0 || needed % 3 != 0 || needed / 3 > static_cast<long>(tc.genus)) return;
            const unsigned g1 = static_cast<unsigned>(needed / 3);
            Integer mult = 1;
            for (std::size_t i = 0; i < ins_groups.size(); ++i) mult *= binomial(ins_groups[i].second, take_ins[i]);
            for (std::size_t i = 0; i < ch_groups.size(); ++i) mult *= binomial(ch_groups[i].second, take_ch[i]);

            TwistedCorrelator left{g1, {}, {}}, right{tc.genus - g1, {}, {}};
            for (std::size_t i = 0; i < ins_groups.size(); ++i) {
                const auto& [x, count] = ins_groups[i];
                for (unsigned c = 0; c < count; ++c) (c < take_ins[i] ? left : right).insertions.push_back(x);
            }
            for (std::size_t i = 0; i < ch_groups.size(); ++i) {
                const auto& [x, count] = ch_groups[i];
                for (unsigned c = 0; c < count; ++c) (c < take_ch[i] ? left : right).chs.push_back(x);
            }
            const unsigned first = pin_node ? group_.conj_class(product).inverse : 0;
            const unsigned last = pin_node ? first + 1 : nc;
            for (unsigned beta = first; beta < last; ++beta) {
                if (weight[beta] == 0) continue;
                TwistedCorrelator lt = left, rt = right;
                lt.insertions.push_back({beta, l});
                rt.insertions.push_back({group_.conj_class(beta).inverse, k - 1 - l});
                lt.canonicalize();
                rt.canonicalize();
                const Rational lv = eval(lt);
                if (lv == 0) continue;
                sum += weight[beta] * Rational(mult) * lv * eval(rt);
            }
        };
        auto walk_ch = [&](auto&& self, std::size_t j, long left_degree, std::size_t left_n, unsigned product) -> void {
            if (j == ch_groups.size()) return leaf(left_degree, left_n, product);
            for (unsigned c = 0; c <= ch_groups[j].second; ++c) {
                take_ch[j] = c;
                self(self, j + 1, left_degree + static_cast<long>(c * ch_groups[j].first.k), left_n, product);
            }
        };
        auto walk_ins = [&](auto&& self, std::size_t i, long left_degree, std::size_t left_n, unsigned product) -> void {
            if (i == ins_groups.size()) return walk_ch(walk_ch, 0, left_degree, left_n, product);
            const auto& [x, count] = ins_groups[i];
            for (unsigned c = 0; c <= count; ++c) {
                take_ins[i] = c;
                self(self, i + 1, left_degree + static_cast<long>(c * x.psi), left_n + c, product);
                if (pin_node) product = group_.multiply(product, x.cls);
            }
        };
        walk_ins(walk_ins, 0, 0, 0, 0u);

        if (l % 2) total -= sum;
        else total += sum;
    }
    return total / 2;
}

std::vector<std::pair<std::string, Rational>> Engine::export_memo() const
{
    std::vector<std::pair<std::string, Rational>> out;
    {
        std::lock_guard lock(mutex_);
        out.reserve(memo_.size());
        for (const auto& [key, value] : memo_) out.emplace_back(decode_key(key).key(group_), value);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

void Engine::preload(TwistedCorrelator tc, const Rational& value)
{
    check_indices(tc);
    tc.canonicalize();
    std::lock_guard lock(mutex_);
    memo_[compact_key(tc)] = value;
}

std::size_t Engine::memo_size() const
{
    std::lock_guard lock(mutex_);
    return memo_.size();
}

}  // namespace hhodge
