#pragma once

#include <compare>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hhodge/group.hpp"
#include "hhodge/omega.hpp"
#include "hhodge/psi.hpp"
#include "hhodge/rational.hpp"

namespace hhodge {

/// ev^* e_[gamma] times psi-bar^a at one marked point.
struct Insertion {
    unsigned cls = 0;
    unsigned psi = 0;
    auto operator<=>(const Insertion&) const = default;
};

/// ch_k of the virtual bundle F^alpha = R^0 - R^1, k >= 1.
struct ChInsertion {
    unsigned k = 1;
    unsigned irrep = 0;
    auto operator<=>(const ChInsertion&) const = default;
};

struct TwistedCorrelator {
    unsigned genus = 0;
    std::vector<Insertion> insertions;
    std::vector<ChInsertion> chs;

    void canonicalize();

    /// "hodge g=0 ins=w:0*3,w2:0 ch=1:3" with both lists sorted.
    std::string key(const FiniteGroup& g) const;
};

/// Comma list of class:psi with optional *count, e.g. "w:0*5,1:2".  Empty text is the empty list.
std::vector<Insertion> parse_insertions(const FiniteGroup& g, std::string_view text);
std::string format_insertions(const FiniteGroup& g, std::vector<Insertion> ins);

/// Comma list of k:alpha, e.g. "1:3,2:3".
std::vector<ChInsertion> parse_chs(const FiniteGroup& g, std::string_view text);
std::string format_chs(std::vector<ChInsertion> chs);

/// Inverse of TwistedCorrelator::key.
TwistedCorrelator parse_correlator_key(const FiniteGroup& g, std::string_view key);

struct EngineOptions {
    /// Return 0 early when Omega of the class multiset vanishes.
    bool prune_empty_components = true;
    /// Picks which ch insertion the recursion removes, given the sorted list.
    /// Unset means the one with the largest k.
    std::function<std::size_t(const std::vector<ChInsertion>&)> pivot;
};

/// Evaluates Hurwitz-Hodge integrals over the components of twisted stable
/// maps to BG by peeling off one ch insertion at a time until only
/// psi-integrals times Omega remain.  Safe for concurrent callers.
class Engine {
public:
    explicit Engine(const FiniteGroup& group, EngineOptions options = {});

    const FiniteGroup& group() const noexcept { return group_; }
    OmegaTable& omega() noexcept { return omega_; }

    /// Virtual rank of F^alpha: dim V_alpha (1-g) - sum_i sum_l m_l l / r_i.
    Rational rank_virtual(unsigned alpha, unsigned genus, const std::vector<unsigned>& classes) const;

    /// rank R^1 = dim V_alpha^G - rank F^alpha.
    Rational rank_r1(unsigned alpha, unsigned genus, const std::vector<unsigned>& classes) const;

    /// dim V_alpha^G; 1 for the trivial irrep and 0 otherwise.
    unsigned invariant_dim(unsigned alpha) const { return alpha == 0 ? 1u : 0u; }

    /// b_beta(alpha, k) = sum_l m_l(alpha, beta) B_{k+1}(l/r) / (k+1)!.
    Rational b_coeff(unsigned alpha, unsigned k, unsigned beta);

    /// <prod tau_{a_i}>_g times Omega_g(classes).  Throws on unstable input.
    Rational correlator(unsigned genus, const std::vector<Insertion>& insertions);

    /// Throws ValidationError for k = 0, bad indices, or an unstable query without ch insertions.
    Rational twisted_correlator(TwistedCorrelator tc);

    /// Every memoized value as (canonical key, value), sorted by key.
    std::vector<std::pair<std::string, Rational>> export_memo() const;
    void preload(TwistedCorrelator tc, const Rational& value);
    std::size_t memo_size() const;

private:
    Rational eval(const TwistedCorrelator& tc);
    Rational recurse(const TwistedCorrelator& tc);
    Rational node_term(const TwistedCorrelator& tc, const std::vector<ChInsertion>& rest, unsigned k, unsigned alpha);
    void check_indices(const TwistedCorrelator& tc) const;

    const FiniteGroup& group_;
    EngineOptions options_;
    OmegaTable omega_;
    PsiIntersections& psi_;

    mutable std::mutex mutex_;
    std::unordered_map<std::string, Rational> memo_;   // compact binary key
    std::unordered_map<std::string, Rational> base_memo_;  // ch-free correlators, same key
    std::map<std::tuple<unsigned, unsigned, unsigned>, Rational> b_memo_;
};

}  // namespace hhodge
