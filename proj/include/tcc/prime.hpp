#ifndef TCC_PRIME_HPP
#define TCC_PRIME_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace tcc {

bool is_prime(int n);  // deterministic trial division
int pow_mod(int base, long long exp, int mod);
std::vector<int> prime_factors(int n);  // distinct primes, ascending

bool is_primitive_root(int x, int p);
int smallest_primitive_root(int p);
std::vector<int> primitive_roots(int p);  // all generators of F_p^x, ascending

// Residue of p mod 8 together with the quadratic character of 2.  The two are
// checked against each other: 2 is a square mod p iff p = +-1 (mod 8).
struct QuadraticClass {
    int p_mod_8;
    bool two_is_square;
};
QuadraticClass quadratic_class(int p);

// Smallest x such that x and 1-x are both primitive roots mod p.
std::optional<int> primitive_pair_witness(int p);

// For X in F_p^x with 1 not in X: radicals and group-type flags of X and
// 1-X, plus the sum identity sum(X) + sum(1-X) = |X| (mod p).
struct RadicalShiftRecord {
    std::vector<int> rad_X;
    std::vector<int> rad_one_minus_X;
    bool X_group_type;
    bool one_minus_X_group_type;
    bool sum_identity_holds;
    bool statement1_holds;  // rad(X) nontrivial => rad(1-X) trivial
    bool statement2_holds;  // X, 1-X both group type => X = F^x \ {1}
};
RadicalShiftRecord radical_shift_check(int p, const std::vector<int>& X);

}  // namespace tcc

#endif
