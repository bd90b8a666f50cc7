#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "tcc/config.hpp"
#include "tcc/perm.hpp"
#include "tcc/pipeline.hpp"

using namespace tcc;

namespace {

// Brute-force color-preserving permutation count, for degree <= 6.
int brute_force_aut_order(const TensorConfig& cfg) {
    std::vector<int> img(cfg.n());
    std::iota(img.begin(), img.end(), 0);
    int count = 0;
    do {
        Permutation g(img);
        bool ok = true;
        for (std::size_t r = 0; r < cfg.colors().size() && ok; ++r)
            ok = cfg.color_of(g.act_on_tuple(cfg.space().unrank(r))) == cfg.color(r);
        if (ok) ++count;
    } while (std::next_permutation(img.begin(), img.end()));
    return count;
}

}  // namespace

TEST_CASE("automorphism group agrees with brute force on degree 5") {
    for (const char* spec : {"cyclic:5", "cyclotomic:5:2", "agl1:5", "sym:5"}) {
        auto cfg = orb_coloring(make_named_group(spec), 3);
        auto A = automorphism_group(cfg);
        CHECK(A.order() == static_cast<std::uint64_t>(brute_force_aut_order(cfg)));
        CHECK(A.same_group(make_named_group(spec)));
    }
}

TEST_CASE("automorphism group of binary orbit configurations") {
    auto cfg = orb_coloring(make_named_group("cyclotomic:13:4"), 2);
    auto A = automorphism_group(cfg);
    CHECK(A.order() == 52);
    CHECK(A.same_group(make_named_group("cyclotomic:13:4")));
}

TEST_CASE("orbit configurations are schurian") {
    for (const char* spec : {"cyclic:7", "agl1:7", "cyclotomic:11:5"}) {
        auto v = is_schurian(orb_coloring(make_named_group(spec), 3));
        CHECK(v.schurian);
        CHECK(v.witness.same_group(make_named_group(spec)));
    }
}

TEST_CASE("galois monotonicity: orbits of a larger group give a coarser coloring") {
    auto fine = orb_coloring(make_named_group("cyclic:7"), 3);
    auto coarse = orb_coloring(make_named_group("agl1:7"), 3);
    CHECK(leq(coarse, fine));
}

TEST_CASE("pi partition of the AGL orbit configuration") {
    auto cfg = orb_coloring(make_named_group("agl1:5"), 3);
    auto pi = pi_partition(cfg);
    CHECK(pi.carrier.to_string() == "fstar:5");
    // AGL_1(5) stabilizer of (0,1) is trivial: discrete partition
    CHECK(pi.classes.size() == 4);
    auto sym = orb_coloring(make_named_group("sym:5"), 3);
    auto pis = pi_partition(sym);
    CHECK(pis.classes.size() == 2);  // {1} and the rest: Sym is 3-transitive
    CHECK_THROWS(pi_partition(orb_coloring(make_named_group("sym:5"), 2)));
}

TEST_CASE("residue partition verdicts for the AGL and Sym configurations") {
    for (int p : {5, 11, 13}) {
        auto agl = orb_coloring(make_named_group("agl1:" + std::to_string(p)), 3);
        auto v = verify_residue_partition(agl);
        CHECK(v.agl_invariant);
        CHECK(v.schur);
        CHECK(v.tau_closed);
        CHECK(v.dichotomy_applies);
        CHECK(v.discrete);
        CHECK(v.pass);
        auto sym = orb_coloring(make_named_group("sym:" + std::to_string(p)), 3);
        auto vs = verify_residue_partition(sym);
        CHECK(vs.pass);
    }
    // a non-AGL-invariant input is rejected
    CHECK_THROWS(verify_residue_partition(orb_coloring(make_named_group("cyclic:5"), 3)));
}

TEST_CASE("starred class counts") {
    CHECK(starred_classes(orb_coloring(make_named_group("psl:2:11"), 3)).size() == 2);
    CHECK(starred_classes(orb_coloring(make_named_group("pgl:3:2"), 3)).size() == 2);
    CHECK(starred_classes(orb_coloring(make_named_group("sym:5"), 3)).size() == 1);
    CHECK(starred_classes(orb_coloring(make_named_group("sym:7"), 3)).size() == 1);
    CHECK(starred_classes(orb_coloring(make_named_group("agl1:5"), 3)).size() == 3);
}

TEST_CASE("nonstarred classes of 2-transitive orbit configurations are orbits") {
    for (const char* spec : {"psl:2:11", "agl1:7", "sym:6"}) {
        auto G = make_named_group(spec);
        CHECK(nonstarred_are_orbits(orb_coloring(G, 3), G));
    }
    CHECK_THROWS(nonstarred_are_orbits(orb_coloring(make_named_group("cyclic:5"), 3),
                                       make_named_group("cyclic:5")));
}

TEST_CASE("fusion enumeration over the cyclic base at p=5") {
    EnumerationJob job{orb_coloring(make_named_group("cyclic:5"), 3)};
    auto rep = enumerate_fusions(job);
    CHECK(rep.complete);
    REQUIRE(rep.results.size() == 4);
    // base, the quadratic cyclotomic fusion, AGL, Sym -- all schurian
    std::vector<std::uint64_t> orders;
    for (const auto& r : rep.results) {
        CHECK(r.schurian);
        CHECK(validate_cc(r.cfg).coherent);
        orders.push_back(r.aut_order);
    }
    CHECK(orders == std::vector<std::uint64_t>({5, 10, 20, 120}));
    CHECK(rep.results[2].ast);
    CHECK(rep.results[3].ast);
    CHECK_FALSE(rep.results[0].ast);
}

TEST_CASE("fusion enumeration over the AGL base") {
    EnumerationJob job{orb_coloring(make_named_group("agl1:11"), 3)};
    auto rep = enumerate_fusions(job);
    CHECK(rep.complete);
    REQUIRE(rep.results.size() == 2);
    CHECK(rep.results[0].cfg == orb_coloring(make_named_group("agl1:11"), 3));
    CHECK(rep.results[1].cfg == orb_coloring(make_named_group("sym:11"), 3));
    CHECK(rep.results[0].aut_matches == std::optional<std::string>("agl1:11"));
    CHECK(rep.results[1].aut_matches == std::optional<std::string>("sym:11"));
}

TEST_CASE("budget exhaustion is reported") {
    EnumerationJob job{orb_coloring(make_named_group("cyclic:7"), 3)};
    job.ast_only = true;
    job.node_limit = 10;
    auto rep = enumerate_fusions(job);
    CHECK_FALSE(rep.complete);
}

TEST_CASE("catalog matching") {
    CHECK(match_catalog_group(make_named_group("agl1:7")) ==
          std::optional<std::string>("agl1:7"));
    CHECK(match_catalog_group(make_named_group("sym:9")) ==
          std::optional<std::string>("sym:9"));
    CHECK(match_catalog_group(make_named_group("psl:2:11")) ==
          std::optional<std::string>("psl:2:11"));
}

TEST_CASE("theorem check suites") {
    auto t11 = theorem_checks(5, "thm11");
    CHECK(t11.pass);
    CHECK(t11.complete);
    auto t51 = theorem_checks(13, "thm51");
    CHECK(t51.pass);
    CHECK(t51.results.size() == 2);
    CHECK_THROWS(theorem_checks(7, "thm51"));   // 7 = -1 mod 8
    CHECK_THROWS(theorem_checks(4, "thm11"));   // not prime
    CHECK_THROWS(theorem_checks(5, "nonsense"));
}
