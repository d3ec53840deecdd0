#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hhodge/cyclotomic.hpp"
#include "hhodge/rational.hpp"

namespace hhodge {

struct ConjClass {
    std::string name;
    unsigned size = 1;
    unsigned order = 1;               // order of any element of the class
    unsigned inverse = 0;             // index of the class of inverses
    std::vector<unsigned> powers;     // powers[j] = class of x^j, j < order
};

struct Irrep {
    std::string name;
    unsigned dim = 1;
    std::vector<Cyclotomic> values;   // one per class, in class order
};

/// Immutable character data of a finite group: conjugacy classes with power
/// maps, and the character table.  Every invariant is checked on
/// construction, so a FiniteGroup in hand is always consistent.
///
/// Class 0 is the identity class and irrep 0 the trivial representation.
class FiniteGroup {
public:
    /// Throws ValidationError naming the first violated invariant.
    FiniteGroup(std::string name, unsigned order, std::vector<ConjClass> classes, std::vector<Irrep> irreps);

    const std::string& name() const noexcept { return name_; }
    unsigned order() const noexcept { return order_; }
    const std::vector<ConjClass>& classes() const noexcept { return classes_; }
    const std::vector<Irrep>& irreps() const noexcept { return irreps_; }
    std::size_t num_classes() const noexcept { return classes_.size(); }

    const ConjClass& conj_class(unsigned c) const { return classes_.at(c); }
    const Irrep& irrep(unsigned a) const { return irreps_.at(a); }
    const Cyclotomic& character(unsigned irrep, unsigned cls) const { return irreps_.at(irrep).values.at(cls); }

    std::optional<unsigned> class_index(std::string_view name) const;
    std::optional<unsigned> irrep_index(std::string_view name) const;

    /// |C(gamma)| = |G| / |[gamma]|.
    unsigned centralizer_order(unsigned c) const { return order_ / classes_.at(c).size; }

    bool is_abelian() const noexcept { return abelian_; }

    /// Class of the product of representatives; abelian groups only.
    unsigned multiply(unsigned a, unsigned b) const;

    /// The group-file text of this group with canonical spacing; two groups
    /// with equal canonical text behave identically.
    std::string canonical_text() const;

    /// 16 hex digits of a 64-bit FNV-1a hash of canonical_text().
    std::string fingerprint() const;

    /// Structure constant of e_{c1} e_{c2} at e_{c3}: the number of pairs
    /// (s1, s2) in [c1] x [c2] with s1 s2 equal to a fixed element of [c3].
    const Rational& structure_constant(unsigned c1, unsigned c2, unsigned c3) const;

    /// m_l(alpha, c): multiplicity of the eigenvalue zeta_r^l of a
    /// representative of class c acting on irrep alpha, r = order of c.
    const std::vector<unsigned>& eig_multiplicities(unsigned alpha, unsigned c) const;

private:
    void validate();
    void build_derived();

    std::string name_;
    unsigned order_;
    std::vector<ConjClass> classes_;
    std::vector<Irrep> irreps_;
    bool abelian_ = false;
    std::vector<std::vector<std::vector<Rational>>> structure_;     // [c1][c2][c3]
    std::vector<std::vector<std::vector<unsigned>>> multiplicities_; // [alpha][c][l]
    std::vector<std::vector<unsigned>> product_;                     // abelian only
};

/// Z_N with classes [w^a] named "1", "w", "w2", ... and chi_alpha(w^a) = zeta_N^{a alpha}.
FiniteGroup cyclic_group(unsigned n);

/// Parses and validates a group-description document.  Throws ParseError
/// (with line number) or ValidationError.
FiniteGroup load_group(std::string_view text);
FiniteGroup load_group_file(const std::filesystem::path& path);

/// Resolves "z<N>" to a builtin cyclic group, otherwise reads a file.
FiniteGroup resolve_group(std::string_view spec);

/// Character value grammar of the group files:  term (('+'|'-') term)*
/// with term := rational | rational '*' 'z'N'^'k | 'z'N'^'k.
Cyclotomic parse_character_value(std::string_view text);

using Matrix = std::vector<std::vector<Rational>>;

struct Metric {
    Matrix lower;  // eta_{c1 c2} = delta_{c1, c2^{-1}} / |C(c1)|
    Matrix upper;  // its inverse
};

Metric metric(const FiniteGroup& g);

enum class Basis { Class, Representation };

/// An element of the orbifold cohomology of BG in one of its two bases.
struct HVector {
    Basis basis = Basis::Class;
    std::vector<Cyclotomic> coeffs;

    static HVector unit(Basis b, std::size_t size, std::size_t index);
    friend bool operator==(const HVector& a, const HVector& b);
};

/// e_{c1} * e_{c2} in the class basis.
HVector class_product(const FiniteGroup& g, unsigned c1, unsigned c2);

/// Product of two class-basis vectors.
HVector multiply(const FiniteGroup& g, const HVector& a, const HVector& b);

/// Class basis <-> representation basis, via
///   f_alpha = (dim/|G|) sum_c chi_alpha(c^{-1}) e_c,
///   e_c     = sum_alpha (|[c]| / dim) chi_alpha(c) f_alpha.
HVector basis_change(const FiniteGroup& g, const HVector& v);

}  // namespace hhodge
