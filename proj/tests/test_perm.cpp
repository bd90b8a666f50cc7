#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "tcc/perm.hpp"

using namespace tcc;

TEST_CASE("permutation composition acts on the right") {
    Permutation f({1, 2, 0});
    Permutation g({0, 2, 1});
    CHECK((f * g).image(0) == 2);  // 0^f = 1, 1^g = 2
    CHECK((g * f).image(0) == 1);
    CHECK((f * f.inverse()).is_identity());
}

TEST_CASE("permutation parse round trip") {
    auto f = Permutation::parse("2 0 1 4 3");
    CHECK(f.to_string() == "2 0 1 4 3");
    CHECK_THROWS(Permutation::parse("0 0 1"));
    CHECK_THROWS(Permutation::parse("1 2 3"));
    CHECK_THROWS(Permutation::parse("0 1 2", 4));
}

TEST_CASE("catalog group orders") {
    CHECK(make_named_group("cyclic:5").order() == 5);
    CHECK(make_named_group("cyclic:12").order() == 12);
    CHECK(make_named_group("sym:5").order() == 120);
    CHECK(make_named_group("sym:7").order() == 5040);
    CHECK(make_named_group("alt:5").order() == 60);
    CHECK(make_named_group("alt:7").order() == 2520);
    CHECK(make_named_group("agl1:5").order() == 20);
    CHECK(make_named_group("agl1:13").order() == 156);
    CHECK(make_named_group("cyclotomic:7:3").order() == 21);
    CHECK(make_named_group("cyclotomic:13:4").order() == 52);
    CHECK(make_named_group("psl:2:11").order() == 660);
    CHECK(make_named_group("pgl:3:2").order() == 168);
    CHECK(make_named_group("pgl:3:3").order() == 5616);
}

TEST_CASE("catalog rejects bad specs") {
    CHECK_THROWS(make_named_group("cyclic:0"));
    CHECK_THROWS(make_named_group("agl1:6"));
    CHECK_THROWS(make_named_group("cyclotomic:7:4"));
    CHECK_THROWS(make_named_group("nope:5"));
    CHECK_THROWS(make_named_group("sym:40"));  // beyond the degree cap
}

TEST_CASE("membership and equality") {
    auto S4 = make_named_group("sym:4");
    auto A4 = make_named_group("alt:4");
    CHECK(S4.contains(Permutation({1, 0, 2, 3})));
    CHECK_FALSE(A4.contains(Permutation({1, 0, 2, 3})));
    CHECK(A4.contains(Permutation({1, 2, 0, 3})));
    CHECK_FALSE(S4.same_group(A4));
    auto S4b = PermGroup::from_generators(
        4, {Permutation({1, 2, 3, 0}), Permutation({0, 2, 1, 3})});
    CHECK(S4.same_group(S4b));
}

TEST_CASE("pointwise stabilizer orders") {
    auto S5 = make_named_group("sym:5");
    CHECK(S5.stabilizer_of_tuple({0}).order() == 24);
    CHECK(S5.stabilizer_of_tuple({0, 1}).order() == 6);
    auto agl = make_named_group("agl1:7");
    CHECK(agl.stabilizer_of_tuple({0}).order() == 6);   // the point stabilizer
    CHECK(agl.stabilizer_of_tuple({0, 1}).order() == 1);  // sharply 2-transitive
    auto psl = make_named_group("psl:2:11");
    CHECK(psl.stabilizer_of_tuple({0}).order() == 60);
}

TEST_CASE("transitivity flags") {
    CHECK(make_named_group("cyclic:6").is_transitive());
    CHECK_FALSE(make_named_group("cyclic:6").is_2transitive());
    CHECK(make_named_group("agl1:11").is_2transitive());
    CHECK(make_named_group("psl:2:11").is_2transitive());
    CHECK(make_named_group("pgl:3:2").is_2transitive());
    CHECK_FALSE(make_named_group("cyclotomic:11:2").is_2transitive());
}

TEST_CASE("orbit counts on tuples") {
    // |orbits of C_5 on triples| = 5^3 / 5
    auto c = make_named_group("cyclic:5").orbits_on_m_tuples(3);
    CHECK(*std::max_element(c.begin(), c.end()) == 24);
    // AGL_1(5) on triples: 7 orbits
    auto a = make_named_group("agl1:5").orbits_on_m_tuples(3);
    CHECK(*std::max_element(a.begin(), a.end()) == 6);
    // Sym on pairs: diagonal + rest
    auto s = make_named_group("sym:6").orbits_on_m_tuples(2);
    CHECK(*std::max_element(s.begin(), s.end()) == 1);
}

TEST_CASE("overflow in group order is reported") {
    CHECK_THROWS_AS((void)make_named_group("sym:26"), std::overflow_error);
}
