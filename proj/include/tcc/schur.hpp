#ifndef TCC_SCHUR_HPP
#define TCC_SCHUR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tcc {

// A cyclic group in one of two presentations: the additive residues Z_n, or
// the multiplicative group F_p^x of a prime field.  Elements are the actual
// residues (0..n-1 resp. 1..p-1).
class CyclicCarrier {
public:
    enum class Kind { ZMod, FStar };

    static CyclicCarrier zmod(int n);
    static CyclicCarrier fstar(int p);
    static CyclicCarrier parse(const std::string& s);  // "zmod:6" | "fstar:7"

    Kind kind() const { return kind_; }
    int order() const { return order_; }
    int modulus() const { return modulus_; }
    int identity() const;
    const std::vector<int>& elements() const { return elements_; }

    int op(int a, int b) const;
    int inv(int a) const;
    bool is_generator(int a) const;
    std::vector<int> generators() const;

    // The automorphism x -> x^k (FStar) resp. x -> kx (ZMod); k must be a
    // unit mod the group order resp. mod n.
    int apply_aut(int k, int x) const;

    std::string to_string() const;

private:
    Kind kind_ = Kind::ZMod;
    int order_ = 0;    // group order
    int modulus_ = 0;  // n for ZMod, p for FStar
    std::vector<int> elements_;
};

struct SchurPartition {
    CyclicCarrier carrier;
    std::vector<std::vector<int>> classes;  // each sorted; class 0 = {identity}
    // c[z][x][y] = coefficient of the class-z representatives in X_x * Y_y
    std::vector<std::vector<std::vector<int>>> structure_constants;
};

struct SchurVerdict {
    bool ok = false;
    std::string reason;
    std::optional<SchurPartition> partition;
};

// Schur-partition test: {1} a class, inverse closure, and every class product
// a nonnegative integer combination of classes (constant multiplicity).
SchurVerdict is_schur_partition(const CyclicCarrier& carrier,
                                const std::vector<std::vector<int>>& classes);

// rad(X) = {y : yX = Xy = X}, as a sorted subgroup.
std::vector<int> radical(const CyclicCarrier& carrier, const std::vector<int>& X);

// Classes containing a generator of the carrier.
std::vector<std::vector<int>> highest_classes(const SchurPartition& pi);

// X with 1 not in X such that X u {1} is a multiplicative subgroup of F_p.
bool is_group_type(const CyclicCarrier& fstar, const std::vector<int>& X);

// {1 - x mod p : x in X}.
std::vector<int> tau_image(int p, const std::vector<int>& X);

// Orbit partition of the automorphism subgroup K (elements of Z^x acting as
// in CyclicCarrier::apply_aut).  Validated Schur.
SchurPartition cyclotomic_partition(const CyclicCarrier& carrier, const std::vector<int>& K);

// The two alternatives of the Schur-ring dichotomy over cyclic groups.
struct SchurFactor {
    int order = 0;                        // |G_i|
    std::vector<int> carrier_elements;    // the subgroup of the ambient group
    std::vector<std::vector<int>> classes;
    bool trivial = false;
    bool orbit = false;
};

struct CyclicSchurClassification {
    char which = '?';  // 'a' or 'b'
    // case (a): every highest class has nontrivial radical
    std::vector<std::vector<int>> highest;  // with their radicals alongside
    std::vector<std::vector<int>> radicals;
    // case (b): direct product decomposition
    std::vector<SchurFactor> factors;
};

CyclicSchurClassification classify_cyclic_schur(const SchurPartition& pi);

// Every Schur partition of the carrier, canonical order; n <= 16.
std::vector<SchurPartition> enumerate_schur_partitions(const CyclicCarrier& carrier);

}  // namespace tcc

#endif
