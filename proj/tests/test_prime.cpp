#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tcc/prime.hpp"

using namespace tcc;

TEST_CASE("primality and factoring") {
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK(is_prime(9973));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(prime_factors(12) == std::vector<int>({2, 3}));
    CHECK(prime_factors(97) == std::vector<int>({97}));
}

TEST_CASE("primitive roots") {
    CHECK(smallest_primitive_root(5) == 2);
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(smallest_primitive_root(11) == 2);
    CHECK(smallest_primitive_root(13) == 2);
    CHECK(primitive_roots(5) == std::vector<int>({2, 3}));
    CHECK(primitive_roots(7) == std::vector<int>({3, 5}));
    CHECK(primitive_roots(11) == std::vector<int>({2, 6, 7, 8}));
    for (int p : {5, 7, 11, 13, 17, 19, 23}) {
        for (int x : primitive_roots(p)) CHECK(is_primitive_root(x, p));
        CHECK(static_cast<int>(primitive_roots(p).size()) ==
              [&] {  // phi(p-1)
                  int n = p - 1, phi = n;
                  for (int q : prime_factors(n)) phi -= phi / q;
                  return phi;
              }());
    }
}

TEST_CASE("quadratic character of 2 follows the mod-8 dichotomy") {
    for (int p = 3; p < 2000; ++p) {
        if (!is_prime(p) || p == 2) continue;
        auto qc = quadratic_class(p);  // throws if the dichotomy fails
        CHECK(qc.p_mod_8 == p % 8);
        CHECK(qc.two_is_square == (p % 8 == 1 || p % 8 == 7));
    }
}

TEST_CASE("primitive pair witnesses at small primes") {
    // smallest x with x and 1-x both primitive roots
    CHECK(primitive_pair_witness(5) == 3);   // 3 and -2 = 3
    CHECK(primitive_pair_witness(7) == 3);   // 3 and -2 = 5
    CHECK(primitive_pair_witness(11) == 6);  // 1 - 6 = -5 = 6
    CHECK(primitive_pair_witness(13) == 7);
    CHECK(primitive_pair_witness(3) == 2);  // 1 - 2 = -1 = 2, a root of 3
}

TEST_CASE("radical-shift record for a known instance") {
    // F_7^x, X = {3,5,6}: X u {1} = {1,3,5,6}? radical oracle below
    auto rec = radical_shift_check(7, {3, 5, 6});
    CHECK(rec.rad_X == std::vector<int>({1, 2, 4}));
    CHECK(rec.sum_identity_holds);
    CHECK(rec.statement1_holds);
    CHECK(rec.statement2_holds);
}

TEST_CASE("group-type record") {
    // X = {2,4} in F_7: X u {1} = {1,2,4} is the squares subgroup
    auto rec = radical_shift_check(7, {2, 4});
    CHECK(rec.X_group_type);
    // 1-X = {-1,-3} = {6,4}; {1,4,6} is not closed (4*6=24=3)
    CHECK_FALSE(rec.one_minus_X_group_type);
    CHECK(rec.sum_identity_holds);
}

TEST_CASE("full X = F^x \\ {1} satisfies both group-type statements") {
    auto rec = radical_shift_check(11, {2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(rec.X_group_type);
    CHECK(rec.one_minus_X_group_type);
    CHECK(rec.statement2_holds);
}
