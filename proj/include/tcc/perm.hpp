#ifndef TCC_PERM_HPP
#define TCC_PERM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tcc {

// Permutation of {0,...,n-1}, stored as the image table.
// Composition convention: permutations act on the right, so
// x^(f*g) = (x^f)^g and (f*g).image(i) = g.image(f.image(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int degree() const { return static_cast<int>(img_.size()); }
    int image(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    bool is_identity() const;

    // f * g = "f then g"
    friend Permutation operator*(const Permutation& f, const Permutation& g);
    friend bool operator==(const Permutation& f, const Permutation& g) = default;
    friend auto operator<=>(const Permutation& f, const Permutation& g) = default;

    std::vector<int> act_on_tuple(const std::vector<int>& x) const;

    std::string to_string() const;   // image notation "0 2 4 1 3"
    static Permutation parse(const std::string& line, int expected_degree = -1);

private:
    std::vector<int> img_;
};

// Finitely generated permutation group with a deterministic point-stabilizer
// chain (Schreier-Sims) for exact order and membership.
class PermGroup {
public:
    PermGroup() = default;

    // base_prefix: points forced to head the base, in order (used for
    // pointwise stabilizers).
    static PermGroup from_generators(int degree, std::vector<Permutation> gens,
                                     const std::vector<int>& base_prefix = {});

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    std::uint64_t order() const { return order_; }

    bool contains(const Permutation& f) const;
    bool same_group(const PermGroup& other) const;

    // Pointwise stabilizer of the entries of y, as a generated group.
    PermGroup stabilizer_of_tuple(const std::vector<int>& y) const;

    // Orbit partition of the componentwise action on m-tuples.  Orbit ids are
    // canonical: numbered by first occurrence in tuple-rank order.
    std::vector<std::uint32_t> orbits_on_m_tuples(int m) const;

    bool is_transitive() const;
    bool is_2transitive() const;

private:
    struct Level {
        int base_point = -1;
        std::vector<int> orbit;               // orbit of base_point, discovery order
        std::vector<int> where;               // point -> index into transversal, -1 if outside
        std::vector<Permutation> transversal; // u with base_point^u = orbit point
    };

    void build_chain(const std::vector<int>& base_prefix);
    // Strong generators fixing base points 0..level-1 pointwise.
    std::vector<const Permutation*> strong_fixing(std::size_t level) const;
    void recompute_orbit(std::size_t level);
    // Sifts f from the given level; returns residue (identity iff member).
    Permutation sift(const Permutation& f, std::size_t level = 0) const;

    int degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Permutation> strong_;  // strong generating set
    std::vector<Level> chain_;
    std::uint64_t order_ = 1;
};

// Catalog of the named group families: cyclic:<p>, cyclotomic:<p>:<d>,
// agl1:<p>, sym:<n>, alt:<n>, psl:2:11, pgl:<d>:<q>, file:<path>.
struct GroupSpec {
    std::string text;
    static GroupSpec parse(const std::string& s);
};

PermGroup make_named_group(const GroupSpec& spec);
PermGroup make_named_group(const std::string& spec);

// Degree-n cycle x -> x+1 (mod n).
Permutation cycle_perm(int n);

}  // namespace tcc

#endif
