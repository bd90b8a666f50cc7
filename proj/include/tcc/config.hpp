#ifndef TCC_CONFIG_HPP
#define TCC_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcc/perm.hpp"

namespace tcc {

// Row-major ranking of m-tuples over {0,...,n-1}:
// rank(x) = sum_i x_i * n^(m-1-i), a bijection onto {0,...,n^m-1}.
struct TupleSpace {
    int n = 0;
    int m = 0;

    std::size_t size() const;
    std::size_t rank(const std::vector<int>& x) const;
    std::vector<int> unrank(std::size_t r) const;
    friend bool operator==(const TupleSpace&, const TupleSpace&) = default;
};

// The coordinate-coincidence partition of {1,...,m}, stored as a
// restricted-growth string (pattern[i] = class of coordinate i, classes
// numbered by first occurrence).
struct EquivPattern {
    std::vector<int> rgs;
    int num_classes() const;
    friend bool operator==(const EquivPattern&, const EquivPattern&) = default;
    friend auto operator<=>(const EquivPattern&, const EquivPattern&) = default;
    std::string to_string() const;
};

EquivPattern rho_pattern(const std::vector<int>& x);

struct ClassInfo {
    std::size_t size = 0;
    EquivPattern pattern;
    std::size_t representative = 0;  // minimal tuple rank in the class
};

// A coloring of Omega^m by class ids 0..k-1, every id used, ids canonical
// (numbered by first occurrence in rank order).
class TensorConfig {
public:
    TensorConfig() = default;
    TensorConfig(TupleSpace space, std::vector<std::uint32_t> colors);

    const TupleSpace& space() const { return space_; }
    int n() const { return space_.n; }
    int m() const { return space_.m; }
    std::uint32_t num_classes() const { return k_; }
    const std::vector<std::uint32_t>& colors() const { return colors_; }
    std::uint32_t color(std::size_t rank) const { return colors_[rank]; }
    std::uint32_t color_of(const std::vector<int>& x) const { return colors_[space_.rank(x)]; }

    const std::vector<ClassInfo>& classes() const;
    std::vector<std::size_t> class_members(std::uint32_t cls) const;  // tuple ranks

    // Partition equality (both sides are canonically numbered).
    friend bool operator==(const TensorConfig& a, const TensorConfig& b) {
        return a.space_ == b.space_ && a.colors_ == b.colors_;
    }

private:
    TupleSpace space_;
    std::vector<std::uint32_t> colors_;
    std::uint32_t k_ = 0;
    mutable std::vector<ClassInfo> classes_;  // computed on demand
};

// All m^m maps sigma : {1..m} -> {1..m} in lexicographic enumeration order,
// each given as the induced permutation of tuple ranks r -> rank(x^sigma).
std::vector<std::vector<std::uint32_t>> sigma_rank_tables(const TupleSpace& space);

struct CcViolation {
    std::string condition;  // "C1", "C2", or "C3"
    std::uint32_t cls = 0;
    std::vector<std::size_t> witness_ranks;
    std::string detail;
};

struct CcVerdict {
    bool coherent = false;
    std::optional<CcViolation> violation;
};

CcVerdict validate_cc(const TensorConfig& cfg);

// The class containing {x^sigma : x in X}, or nullopt if that set is split
// across classes (a C2 violation).  sigma is given as images of 1..m (0-based).
std::optional<std::uint32_t> sigma_image(const TensorConfig& cfg, std::uint32_t cls,
                                         const std::vector<int>& sigma);

// |{alpha : x_{i<-alpha} in X_i for all i}| for a representative x of X.
std::size_t intersection_number(const TensorConfig& cfg, std::uint32_t X,
                                const std::vector<std::uint32_t>& Xi,
                                const std::vector<int>& x);

// Coarsest coherent refinement: alternate sigma-refinement and counting
// refinement until a full alternation is stable.  Deterministic canonical
// class numbering; idempotent.
TensorConfig wl_close(const TensorConfig& cfg);
TensorConfig wl_close(const TensorConfig& cfg, int* rounds_out);

TensorConfig orb_coloring(const PermGroup& G, int m);

// Projection to the coordinates in I (0-based, nonempty, strictly increasing).
TensorConfig project(const TensorConfig& cfg, const std::vector<int>& I);

// Residue with respect to u placed at the coordinates in I; the result is an
// (m-|I|)-ary configuration on all of Omega.
TensorConfig residue(const TensorConfig& cfg, const std::vector<int>& I,
                     const std::vector<int>& u);

std::vector<std::vector<int>> fibers(const TensorConfig& cfg);
TensorConfig restrict_to_fiber(const TensorConfig& cfg, const std::vector<int>& delta);

// coarse <= fine: every class of coarse is a union of classes of fine.
bool leq(const TensorConfig& coarse, const TensorConfig& fine);

struct FusionSpec {
    std::vector<std::uint32_t> merge;  // base class id -> fused class id
};

// Merged coloring (a partition, not necessarily coherent).  Rejects merges of
// classes with different patterns.
TensorConfig fuse(const TensorConfig& cfg, const FusionSpec& spec);

bool is_ast(const TensorConfig& cfg);

// Minimal coherent configuration >= cfg2 in which {(omega,omega)} is a class.
TensorConfig one_point_extension(const TensorConfig& cfg2, int omega);

// Minimal ternary coherent configuration with binary projection cfg2.
TensorConfig wl3_of_binary(const TensorConfig& cfg2);

// Coloring of Omega^m by rho-pattern alone (the coarsest C1 partition).
TensorConfig pattern_coloring(int n, int m);

}  // namespace tcc

#endif
