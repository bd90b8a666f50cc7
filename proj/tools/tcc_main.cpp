// tcc: construct, refine, classify and schurity-test m-ary coherent
// configurations of small degree, with a Schur-partition toolkit over
// cyclic groups.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 budget exhaustion.

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tcc/config.hpp"
#include "tcc/json_io.hpp"
#include "tcc/perm.hpp"
#include "tcc/pipeline.hpp"
#include "tcc/prime.hpp"
#include "tcc/schur.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

double env_budget(double flag_value) {
    if (const char* s = std::getenv("TCC_BUDGET_SECONDS")) {
        try {
            return std::stod(s);
        } catch (const std::exception&) {
            throw std::invalid_argument("TCC_BUDGET_SECONDS is not a number");
        }
    }
    return flag_value;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

// --base accepts a catalog group spec (orb_3 of that group) or a
// configuration JSON path.
tcc::TensorConfig load_base(const std::string& base, int arity) {
    if (base.size() > 5 && base.substr(base.size() - 5) == ".json")
        return tcc::load_config(base);
    if (base == "-") return tcc::load_config(base);
    return tcc::orb_coloring(tcc::make_named_group(base), arity);
}

void print_summary(const tcc::TensorConfig& cfg) {
    std::cout << cfg.num_classes() << " classes";
    if (cfg.m() == 3) std::cout << ", AST: " << (tcc::is_ast(cfg) ? "true" : "false");
    std::cout << "\n";
}

int run_verify(const std::string& suite, int p, int max_p, int samples,
               const std::string& group, std::uint64_t node_limit, double budget,
               const std::string& out) {
    tcc::Report rep;
    rep.suite = suite;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.items.push_back({name, pass, detail});
        rep.pass = rep.pass && pass;
    };
    if (suite == "thm11" || suite == "thm51" || suite == "exception-probe") {
        rep = tcc::theorem_checks(p, suite, node_limit, budget);
    } else if (suite == "lemma41") {
        rep.p = max_p;
        int missing = 0, checked = 0;
        for (int q = 3; q <= max_p; ++q) {
            if (!tcc::is_prime(q)) continue;
            ++checked;
            if (!tcc::primitive_pair_witness(q)) ++missing;
        }
        add("witness-for-every-prime", missing == 0,
            std::to_string(checked) + " primes checked, " + std::to_string(missing) +
                " without witness");
    } else if (suite == "lemma42") {
        rep.p = max_p;
        std::mt19937 rng(20260826);
        std::vector<int> primes;
        for (int q = 3; q <= max_p; ++q)
            if (tcc::is_prime(q)) primes.push_back(q);
        int violations = 0;
        for (int i = 0; i < samples; ++i) {
            int q = primes[rng() % primes.size()];
            std::vector<int> X;
            for (int x = 2; x < q; ++x)
                if (rng() & 1) X.push_back(x);
            if (X.empty()) X.push_back(2 % q == 0 ? 1 : 2);
            auto rec = tcc::radical_shift_check(q, X);
            if (!rec.sum_identity_holds || !rec.statement1_holds || !rec.statement2_holds)
                ++violations;
        }
        add("random-instances", violations == 0,
            std::to_string(samples) + " samples, " + std::to_string(violations) +
                " violations");
    } else if (suite == "starred") {
        auto G = tcc::make_named_group(group);
        auto cfg = tcc::orb_coloring(G, 3);
        auto starred = tcc::starred_classes(cfg);
        rep.p = G.degree();
        std::cout << "starred classes: " << starred.size() << "\n";
        add("starred-count", true, group + ": " + std::to_string(starred.size()));
    } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitInput;
    }
    for (const auto& it : rep.items)
        std::cout << (it.pass ? "PASS" : "FAIL") << "  " << it.name
                  << (it.detail.empty() ? "" : "  (" + it.detail + ")") << "\n";
    if (!out.empty()) tcc::save_json(tcc::report_to_json(rep), out);
    if (!rep.complete) return kExitBudget;
    return rep.pass ? kExitOk : kExitFail;
}

int run_schur(const std::string& action, const std::string& in,
              const std::string& carrier_spec, const std::string& set_spec,
              const std::string& out) {
    using tcc::CyclicCarrier;
    if (action == "check" || action == "classify") {
        auto [carrier, classes] = tcc::partition_from_json(tcc::load_json(in));
        auto v = tcc::is_schur_partition(carrier, classes);
        if (action == "check") {
            std::cout << (v.ok ? "Schur partition" : "not a Schur partition: " + v.reason)
                      << "\n";
            return v.ok ? kExitOk : kExitFail;
        }
        if (!v.ok) {
            std::cerr << "not a Schur partition: " << v.reason << "\n";
            return kExitFail;
        }
        auto cls = tcc::classify_cyclic_schur(*v.partition);
        std::cout << "case " << cls.which << "\n";
        json j;
        j["case"] = std::string(1, cls.which);
        if (cls.which == 'a') {
            j["highest"] = cls.highest;
            j["radicals"] = cls.radicals;
        } else {
            json fs = json::array();
            for (const auto& f : cls.factors)
                fs.push_back({{"order", f.order},
                              {"subgroup", f.carrier_elements},
                              {"classes", f.classes},
                              {"trivial", f.trivial},
                              {"orbit", f.orbit}});
            j["factors"] = fs;
        }
        if (!out.empty()) tcc::save_json(j, out);
        return kExitOk;
    }
    auto carrier = CyclicCarrier::parse(carrier_spec);
    if (action == "radical") {
        auto r = tcc::radical(carrier, parse_int_list(set_spec));
        json j = r;
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    if (action == "cyclotomic") {
        auto pi = tcc::cyclotomic_partition(carrier, parse_int_list(set_spec));
        auto j = tcc::partition_to_json(pi.carrier, pi.classes);
        if (!out.empty())
            tcc::save_json(j, out);
        else
            std::cout << j.dump() << "\n";
        return kExitOk;
    }
    if (action == "enumerate") {
        auto all = tcc::enumerate_schur_partitions(carrier);
        std::cout << all.size() << " Schur partitions of " << carrier.to_string() << "\n";
        json j = json::array();
        for (const auto& pi : all) j.push_back(tcc::partition_to_json(pi.carrier, pi.classes));
        if (!out.empty()) tcc::save_json(j, out);
        return kExitOk;
    }
    std::cerr << "unknown schur action: " << action << "\n";
    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coherent-configuration toolkit"};
    app.require_subcommand(1);
    int jobs = 0;
    app.add_option("--jobs", jobs, "worker parallelism (output is identical for any value)");

    std::string group, in = "-", out, coords, point, base, suite = "thm51", action, set_spec,
                carrier_spec;
    int arity = 3, p = 5, max_p = 10000, samples = 100000;
    bool ast_only = false;
    std::uint64_t node_limit = 100'000'000;
    double budget = 0;

    auto* orb = app.add_subcommand("orb", "orbit configuration of a named group");
    orb->add_option("--group", group, "catalog group spec")->required();
    orb->add_option("--arity", arity, "tuple arity m");
    orb->add_option("-o,--out", out, "output configuration JSON path");

    auto* wl = app.add_subcommand("wl-close", "coherent closure of a configuration");
    wl->add_option("-i,--in", in, "input configuration JSON ('-' = stdin)");
    wl->add_option("-o,--out", out, "output path");

    auto* proj = app.add_subcommand("project", "projection to a coordinate subset");
    proj->add_option("-i,--in", in, "input configuration JSON");
    proj->add_option("--coords", coords, "comma-separated 0-based coordinates")->required();
    proj->add_option("-o,--out", out, "output path");

    auto* res = app.add_subcommand("residue", "residue at a fixed point tuple");
    res->add_option("-i,--in", in, "input configuration JSON");
    res->add_option("--coords", coords, "coordinates to fix")->required();
    res->add_option("--point", point, "comma-separated fixed points")->required();
    res->add_option("-o,--out", out, "output path");

    auto* aut = app.add_subcommand("aut", "automorphism group of a configuration");
    aut->add_option("-i,--in", in, "input configuration JSON");

    auto* schn = app.add_subcommand("schurian", "test cfg = orb_m(aut(cfg))");
    schn->add_option("-i,--in", in, "input configuration JSON");

    auto* enu = app.add_subcommand("enumerate", "coherent fusions of a base configuration");
    enu->add_option("--base", base, "catalog group spec or configuration JSON path")->required();
    enu->add_option("--arity", arity, "arity when --base is a group spec");
    enu->add_flag("--ast-only", ast_only, "keep only AST results");
    enu->add_option("--node-limit", node_limit, "search node budget");
    enu->add_option("--budget", budget, "wall-clock budget in seconds (0 = none)");
    enu->add_option("-o,--out", out, "Report JSON path");

    auto* ver = app.add_subcommand("verify", "verification suites");
    ver->add_option("--suite", suite,
                    "lemma41 | lemma42 | thm11 | thm51 | exception-probe | starred")
        ->required();
    ver->add_option("--p", p, "prime for theorem suites");
    ver->add_option("--max-p", max_p, "prime bound for sweep suites");
    ver->add_option("--samples", samples, "random sample count");
    ver->add_option("--group", group, "group for the starred suite");
    ver->add_option("--node-limit", node_limit, "search node budget");
    ver->add_option("--budget", budget, "wall-clock budget in seconds (0 = none)");
    ver->add_option("-o,--out", out, "Report JSON path");

    auto* sch = app.add_subcommand("schur", "Schur-partition subtools");
    sch->add_option("action", action, "check | classify | radical | cyclotomic | enumerate")
        ->required();
    sch->add_option("-i,--in", in, "partition JSON for check/classify");
    sch->add_option("--carrier", carrier_spec, "zmod:<n> | fstar:<p>");
    sch->add_option("--set", set_spec, "comma-separated elements (radical/cyclotomic)");
    sch->add_option("-o,--out", out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (orb->parsed()) {
            auto cfg = tcc::orb_coloring(tcc::make_named_group(group), arity);
            print_summary(cfg);
            if (!out.empty())
                tcc::save_json(tcc::config_to_json(cfg, {{"source", "orb"}, {"group", group}}),
                               out);
            return kExitOk;
        }
        if (wl->parsed()) {
            int rounds = 0;
            auto cfg = tcc::wl_close(tcc::load_config(in), &rounds);
            std::cout << cfg.num_classes() << " classes, " << rounds << " refining rounds\n";
            if (!out.empty()) tcc::save_json(tcc::config_to_json(cfg), out);
            return kExitOk;
        }
        if (proj->parsed()) {
            auto cfg = tcc::project(tcc::load_config(in), parse_int_list(coords));
            print_summary(cfg);
            if (!out.empty()) tcc::save_json(tcc::config_to_json(cfg), out);
            return kExitOk;
        }
        if (res->parsed()) {
            auto cfg =
                tcc::residue(tcc::load_config(in), parse_int_list(coords), parse_int_list(point));
            print_summary(cfg);
            if (!out.empty()) tcc::save_json(tcc::config_to_json(cfg), out);
            return kExitOk;
        }
        if (aut->parsed()) {
            auto G = tcc::automorphism_group(tcc::load_config(in));
            std::cout << "order " << G.order();
            if (auto name = tcc::match_catalog_group(G)) std::cout << " = " << *name;
            std::cout << "\n";
            for (const auto& g : G.generators()) std::cout << g.to_string() << "\n";
            return kExitOk;
        }
        if (schn->parsed()) {
            auto v = tcc::is_schurian(tcc::load_config(in));
            std::cout << (v.schurian ? "schurian" : "not schurian") << " (aut order "
                      << v.witness.order() << ")\n";
            return kExitOk;
        }
        if (enu->parsed()) {
            tcc::EnumerationJob job{load_base(base, arity)};
            job.ast_only = ast_only;
            job.node_limit = node_limit;
            job.time_limit_seconds = env_budget(budget);
            auto er = tcc::enumerate_fusions(job);
            std::cout << er.results.size() << " results, "
                      << (er.complete ? "complete" : "INCOMPLETE (budget exhausted)") << ", "
                      << er.nodes << " nodes\n";
            for (const auto& r : er.results)
                std::cout << "  classes=" << r.num_classes << " ast=" << (r.ast ? "true" : "false")
                          << " aut_order=" << r.aut_order
                          << " aut=" << (r.aut_matches ? *r.aut_matches : "?")
                          << " schurian=" << (r.schurian ? "true" : "false") << "\n";
            if (!out.empty()) {
                tcc::Report rep;
                rep.suite = "enumerate";
                rep.p = job.base.n();
                rep.complete = er.complete;
                rep.results = std::move(er.results);
                tcc::save_json(tcc::report_to_json(rep), out);
            }
            return er.complete ? kExitOk : kExitBudget;
        }
        if (ver->parsed()) return run_verify(suite, p, max_p, samples, group, node_limit,
                                             env_budget(budget), out);
        if (sch->parsed()) return run_schur(action, in, carrier_spec, set_spec, out);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitInput;
}
