#include "tcc/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "tcc/prime.hpp"

namespace tcc {

namespace {

// Single-solution backtracking for a color-preserving extension of a partial
// point map.  Checks every tuple over the mapped points that involves the
// newest point.
struct AutSearcher {
    const TensorConfig& cfg;
    int n, m;
    std::vector<int> img;     // point -> image, -1 if unmapped
    std::vector<char> used;   // image taken
    std::vector<int> mapped;  // mapped points, assignment order

    explicit AutSearcher(const TensorConfig& c)
        : cfg(c), n(c.n()), m(c.m()), img(n, -1), used(n, 0) {}

    bool consistent_with(int q) const {
        // all m-tuples over mapped points containing q
        const auto& sp = cfg.space();
        std::vector<int> x(m), y(m);
        const std::size_t count = [&] {
            std::size_t c = 1;
            for (int i = 0; i < m; ++i) c *= mapped.size();
            return c;
        }();
        for (std::size_t t = 0; t < count; ++t) {
            std::size_t tt = t;
            bool has_q = false;
            for (int i = 0; i < m; ++i) {
                x[i] = mapped[tt % mapped.size()];
                tt /= mapped.size();
                if (x[i] == q) has_q = true;
            }
            if (!has_q) continue;
            for (int i = 0; i < m; ++i) y[i] = img[x[i]];
            if (cfg.colors()[sp.rank(x)] != cfg.colors()[sp.rank(y)]) return false;
        }
        return true;
    }

    bool assign(int p, int b) {
        img[p] = b;
        used[b] = 1;
        mapped.push_back(p);
        if (consistent_with(p)) return true;
        unassign(p, b);
        return false;
    }

    void unassign(int p, int b) {
        img[p] = -1;
        used[b] = 0;
        mapped.pop_back();
    }

    bool extend() {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (img[i] < 0) { p = i; break; }
        if (p < 0) return true;
        for (int b = 0; b < n; ++b) {
            if (used[b]) continue;
            if (assign(p, b)) {
                if (extend()) return true;
                unassign(p, b);
            }
        }
        return false;
    }
};

// Orbit of `pt` under the generators that fix 0..level-1 pointwise.
std::vector<char> partial_orbit(int n, int level, int pt,
                                const std::vector<Permutation>& gens) {
    std::vector<char> in_orbit(n, 0);
    std::vector<int> stack{pt};
    in_orbit[pt] = 1;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            bool fixes = true;
            for (int i = 0; i < level; ++i)
                if (g.image(i) != i) { fixes = false; break; }
            if (!fixes) continue;
            int b = g.image(a);
            if (!in_orbit[b]) {
                in_orbit[b] = 1;
                stack.push_back(b);
            }
        }
    }
    return in_orbit;
}

}  // namespace

PermGroup automorphism_group(const TensorConfig& cfg) {
    const int n = cfg.n();
    std::vector<Permutation> gens;
    for (int level = 0; level < n - 1; ++level) {
        auto reached = partial_orbit(n, level, level, gens);
        for (int beta = level + 1; beta < n; ++beta) {
            if (reached[beta]) continue;  // a transversal element already exists
            AutSearcher s(cfg);
            bool ok = true;
            for (int i = 0; i < level && ok; ++i) ok = s.assign(i, i);
            if (ok) ok = s.assign(level, beta);
            if (ok && s.extend()) {
                gens.emplace_back(s.img);
                reached = partial_orbit(n, level, level, gens);
            }
        }
    }
    return PermGroup::from_generators(n, std::move(gens));
}

SchurianVerdict is_schurian(const TensorConfig& cfg) {
    SchurianVerdict v;
    v.witness = automorphism_group(cfg);
    v.schurian = orb_coloring(v.witness, cfg.m()) == cfg;
    return v;
}

PiPartition pi_partition(const TensorConfig& cfg) {
    if (cfg.m() != 3) throw std::invalid_argument("pi_partition: arity must be 3");
    const int p = cfg.n();
    if (!is_prime(p)) throw std::invalid_argument("pi_partition: degree must be prime");
    // translation invariance
    auto t = cycle_perm(p);
    for (std::size_t r = 0; r < cfg.colors().size(); ++r) {
        auto x = cfg.space().unrank(r);
        if (cfg.color_of(t.act_on_tuple(x)) != cfg.color(r))
            throw std::invalid_argument("pi_partition: configuration is not translation-invariant");
    }
    auto res = residue(cfg, {0, 1}, {0, 1});  // 1-ary partition of the points
    std::vector<std::vector<int>> cls(res.num_classes());
    for (int x = 0; x < p; ++x) cls[res.color(x)].push_back(x);
    auto singleton = [&](int x) {
        return cls[res.color(x)].size() == 1;
    };
    if (!singleton(0) || !singleton(1))
        throw std::runtime_error("pi_partition: {0} or {1} is not a singleton residue class");
    PiPartition pi{CyclicCarrier::fstar(p), {}};
    for (auto& c : cls)
        if (!(c.size() == 1 && c[0] == 0)) pi.classes.push_back(c);
    std::sort(pi.classes.begin(), pi.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return pi;
}

ResiduePartitionVerdict verify_residue_partition(const TensorConfig& cfg) {
    const int p = cfg.n();
    ResiduePartitionVerdict v;
    auto agl = make_named_group("agl1:" + std::to_string(p));
    v.agl_invariant = true;
    for (const auto& g : agl.generators()) {
        for (std::size_t r = 0; r < cfg.colors().size() && v.agl_invariant; ++r) {
            auto x = cfg.space().unrank(r);
            if (cfg.color_of(g.act_on_tuple(x)) != cfg.color(r)) v.agl_invariant = false;
        }
    }
    if (!v.agl_invariant)
        throw std::invalid_argument("verify_residue_partition: configuration is not AGL-invariant");
    auto pi = pi_partition(cfg);
    auto sv = is_schur_partition(pi.carrier, pi.classes);
    v.schur = sv.ok;
    v.tau_closed = true;
    std::set<std::vector<int>> cls_set(pi.classes.begin(), pi.classes.end());
    for (const auto& X : pi.classes) {
        // tau is defined away from 1 (1 - 1 = 0 leaves the punctured field)
        if (std::find(X.begin(), X.end(), 1) != X.end()) continue;
        if (!cls_set.count(tau_image(p, X))) v.tau_closed = false;
    }
    v.discrete = pi.classes.size() == static_cast<std::size_t>(p - 1);
    v.trivial = pi.classes.size() <= 2;
    v.dichotomy_applies = (p % 8 == 3 || p % 8 == 5);
    v.pass = v.schur && v.tau_closed && (!v.dichotomy_applies || v.discrete || v.trivial);
    return v;
}

std::vector<std::uint32_t> starred_classes(const TensorConfig& cfg) {
    std::vector<std::uint32_t> out;
    const auto& info = cfg.classes();
    for (std::uint32_t c = 0; c < cfg.num_classes(); ++c)
        if (info[c].pattern.num_classes() == cfg.m()) out.push_back(c);
    return out;
}

bool nonstarred_are_orbits(const TensorConfig& cfg, const PermGroup& G) {
    if (!G.is_2transitive()) throw std::invalid_argument("nonstarred_are_orbits: G not 2-transitive");
    auto orb = orb_coloring(G, cfg.m());
    auto starred = starred_classes(cfg);
    std::set<std::uint32_t> starset(starred.begin(), starred.end());
    // each non-starred class must be exactly one G-orbit
    std::map<std::uint32_t, std::set<std::uint32_t>> orbits_in_class;
    for (std::size_t r = 0; r < cfg.colors().size(); ++r)
        orbits_in_class[cfg.color(r)].insert(orb.color(r));
    std::map<std::uint32_t, std::set<std::uint32_t>> classes_in_orbit;
    for (std::size_t r = 0; r < cfg.colors().size(); ++r)
        classes_in_orbit[orb.color(r)].insert(cfg.color(r));
    for (auto& [cls, orbs] : orbits_in_class) {
        if (starset.count(cls)) continue;
        if (orbs.size() != 1) return false;
        if (classes_in_orbit[*orbs.begin()].size() != 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Fusion enumeration

namespace {

struct VecU32Hash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

struct FusionSearch {
    const TensorConfig& base;
    std::uint32_t k;
    std::vector<std::vector<std::uint32_t>> sigma_cls;  // sigma -> class -> image class
    std::vector<std::uint64_t> pattern_id;
    bool ast_only;
    std::uint64_t node_limit;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;

    std::unordered_set<std::vector<std::uint32_t>, VecU32Hash> visited;
    std::map<std::vector<std::uint32_t>, TensorConfig> emitted;
    std::uint64_t nodes = 0;
    bool complete = true;

    explicit FusionSearch(const EnumerationJob& job)
        : base(job.base), k(job.base.num_classes()), ast_only(job.ast_only),
          node_limit(job.node_limit) {
        if (job.time_limit_seconds > 0) {
            has_deadline = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(job.time_limit_seconds));
        }
        auto tabs = sigma_rank_tables(base.space());
        const auto& info = base.classes();
        sigma_cls.assign(tabs.size(), std::vector<std::uint32_t>(k));
        for (std::size_t s = 0; s < tabs.size(); ++s)
            for (std::uint32_t c = 0; c < k; ++c)
                sigma_cls[s][c] = base.color(tabs[s][info[c].representative]);
        pattern_id.resize(k);
        for (std::uint32_t c = 0; c < k; ++c) {
            std::uint64_t pid = 0;
            for (int v : info[c].pattern.rgs) pid = pid * base.m() + v;
            pattern_id[c] = pid;
        }
    }

    static std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }

    // Union with sigma-closure; fails only on a pattern-violating merge.
    bool merge_closed(std::vector<std::uint32_t>& parent, std::uint32_t a, std::uint32_t b) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{a, b}};
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            x = find(parent, x);
            y = find(parent, y);
            if (x == y) continue;
            if (pattern_id[x] != pattern_id[y]) return false;
            parent[y] = x;
            for (const auto& sc : sigma_cls) queue.emplace_back(sc[x], sc[y]);
        }
        return true;
    }

    std::vector<std::uint32_t> encode(std::vector<std::uint32_t> parent) {
        std::vector<std::uint32_t> enc(k), remap(k, UINT32_MAX);
        std::uint32_t next = 0;
        for (std::uint32_t c = 0; c < k; ++c) {
            auto r = find(parent, c);
            if (remap[r] == UINT32_MAX) remap[r] = next++;
            enc[c] = remap[r];
        }
        return enc;
    }

    bool budget_exceeded() {
        if (nodes > node_limit) return true;
        if (has_deadline && (nodes & 0xff) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            return true;
        return false;
    }

    // C3 check of the fused coloring; C1/C2 hold by construction.
    bool fused_coherent(const std::vector<std::uint32_t>& enc) {
        const auto& bc = base.colors();
        const int n = base.n(), m = base.m();
        const std::size_t N = bc.size();
        std::uint32_t kk = *std::max_element(enc.begin(), enc.end()) + 1;
        std::vector<std::size_t> stride(m, 1);
        for (int i = m - 2; i >= 0; --i) stride[i] = stride[i + 1] * n;
        std::vector<std::vector<std::uint64_t>> ref(kk);
        std::vector<char> seen(kk, 0);
        std::vector<std::uint64_t> packed(n);
        std::vector<int> x(m);
        for (std::size_t r = 0; r < N; ++r) {
            std::size_t rr = r;
            for (int i = m - 1; i >= 0; --i) { x[i] = static_cast<int>(rr % n); rr /= n; }
            for (int a = 0; a < n; ++a) {
                std::uint64_t v = 0;
                for (int i = 0; i < m; ++i)
                    v = v * kk + enc[bc[r + (a - x[i]) * static_cast<long long>(stride[i])]];
                packed[a] = v;
            }
            std::sort(packed.begin(), packed.end());
            auto c = enc[bc[r]];
            if (!seen[c]) {
                seen[c] = 1;
                ref[c] = packed;
            } else if (ref[c] != packed) {
                return false;
            }
        }
        return true;
    }

    void emit(const std::vector<std::uint32_t>& enc) {
        auto fused = fuse(base, FusionSpec{enc});
        if (ast_only && !is_ast(fused)) return;
        emitted.emplace(fused.colors(), fused);
    }

    void explore(std::vector<std::uint32_t> parent) {
        if (!complete) return;
        auto enc = encode(parent);
        if (!visited.insert(enc).second) return;
        if (budget_exceeded()) {
            complete = false;
            return;
        }
        ++nodes;
        if (fused_coherent(enc)) emit(enc);
        std::vector<std::uint32_t> roots;
        for (std::uint32_t c = 0; c < k; ++c)
            if (find(parent, c) == c) roots.push_back(c);
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                if (pattern_id[roots[i]] != pattern_id[roots[j]]) continue;
                auto child = parent;
                if (merge_closed(child, roots[i], roots[j])) explore(std::move(child));
                if (!complete) return;
            }
    }

    void run() {
        std::vector<std::uint32_t> parent(k);
        for (std::uint32_t c = 0; c < k; ++c) parent[c] = c;
        if (ast_only) {
            // pre-merge to the AST frame: one class per pattern with <= m-1
            // pattern classes
            const auto& info = base.classes();
            std::map<std::uint64_t, std::uint32_t> first;
            for (std::uint32_t c = 0; c < k; ++c) {
                if (info[c].pattern.num_classes() == base.m()) continue;
                auto [it, fresh] = first.emplace(pattern_id[c], c);
                if (!fresh && !merge_closed(parent, it->second, c)) return;
            }
        }
        explore(std::move(parent));
    }
};

}  // namespace

std::optional<std::string> match_catalog_group(const PermGroup& G) {
    const int n = G.degree();
    std::vector<std::string> candidates;
    candidates.push_back("cyclic:" + std::to_string(n));
    if (is_prime(n)) {
        for (int d = 2; d < n - 1; ++d)
            if ((n - 1) % d == 0)
                candidates.push_back("cyclotomic:" + std::to_string(n) + ":" + std::to_string(d));
        candidates.push_back("agl1:" + std::to_string(n));
    }
    if (n == 11) candidates.push_back("psl:2:11");
    for (int d = 3; d <= 5; ++d)
        for (int q : {2, 3, 5, 7, 11, 13}) {
            long long pts = 0, qq = 1;
            for (int i = 0; i < d; ++i) { pts += qq; qq *= q; }
            if (pts == n) candidates.push_back("pgl:" + std::to_string(d) + ":" + std::to_string(q));
        }
    candidates.push_back("alt:" + std::to_string(n));
    candidates.push_back("sym:" + std::to_string(n));
    for (const auto& spec : candidates) {
        try {
            auto H = make_named_group(spec);
            if (H.order() == G.order() && G.same_group(H)) return spec;
        } catch (const std::exception&) {
            // out-of-catalog parameters: skip
        }
    }
    return std::nullopt;
}

EnumerationReport enumerate_fusions(const EnumerationJob& job) {
    auto v = validate_cc(job.base);
    if (!v.coherent) throw std::invalid_argument("enumerate_fusions: base is not coherent");
    FusionSearch search(job);
    search.run();
    EnumerationReport rep;
    rep.complete = search.complete;
    rep.nodes = search.nodes;
    for (auto& [colors, cfg] : search.emitted) {
        FusionResult res;
        res.num_classes = cfg.num_classes();
        res.ast = cfg.m() == 3 && is_ast(cfg);
        if (job.analyze_results) {
            auto sv = is_schurian(cfg);
            res.schurian = sv.schurian;
            res.aut_order = sv.witness.order();
            res.aut_matches = match_catalog_group(sv.witness);
        }
        res.cfg = std::move(cfg);
        rep.results.push_back(std::move(res));
    }
    std::sort(rep.results.begin(), rep.results.end(),
              [](const FusionResult& a, const FusionResult& b) {
                  if (a.num_classes != b.num_classes) return a.num_classes > b.num_classes;
                  return a.cfg.colors() < b.cfg.colors();
              });
    return rep;
}

Report theorem_checks(int p, const std::string& suite, std::uint64_t node_limit,
                      double time_limit_seconds) {
    if (!is_prime(p)) throw std::invalid_argument("theorem_checks: p must be prime");
    Report rep;
    rep.suite = suite;
    rep.p = p;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.items.push_back({name, pass, detail});
        rep.pass = rep.pass && pass;
    };
    if (suite == "thm11") {
        EnumerationJob job{orb_coloring(make_named_group("cyclic:" + std::to_string(p)), 3)};
        job.node_limit = node_limit;
        job.time_limit_seconds = time_limit_seconds;
        auto er = enumerate_fusions(job);
        rep.complete = er.complete;
        add("enumeration-complete", er.complete,
            std::to_string(er.results.size()) + " coherent fusions, " +
                std::to_string(er.nodes) + " nodes");
        for (const auto& r : er.results) {
            if (r.ast) continue;
            add("non-ast-schurian(k=" + std::to_string(r.num_classes) + ")", r.schurian,
                "aut order " + std::to_string(r.aut_order));
        }
        rep.results = std::move(er.results);
    } else if (suite == "thm51") {
        if (p % 8 != 3 && p % 8 != 5)
            throw std::invalid_argument("thm51: requires p = +-3 (mod 8)");
        EnumerationJob job{orb_coloring(make_named_group("agl1:" + std::to_string(p)), 3)};
        job.node_limit = node_limit;
        job.time_limit_seconds = time_limit_seconds;
        auto er = enumerate_fusions(job);
        rep.complete = er.complete;
        add("enumeration-complete", er.complete, std::to_string(er.nodes) + " nodes");
        add("exactly-two-fusions", er.results.size() == 2,
            std::to_string(er.results.size()) + " found");
        auto agl = orb_coloring(make_named_group("agl1:" + std::to_string(p)), 3);
        auto sym = orb_coloring(make_named_group("sym:" + std::to_string(p)), 3);
        bool has_agl = false, has_sym = false;
        for (const auto& r : er.results) {
            if (r.cfg == agl) has_agl = true;
            if (r.cfg == sym) has_sym = true;
        }
        add("orb3-agl-present", has_agl, "");
        add("orb3-sym-present", has_sym, "");
        rep.results = std::move(er.results);
    } else if (suite == "exception-probe") {
        for (int d = 1; d <= p - 1; ++d) {
            if ((p - 1) % d != 0) continue;
            std::string spec = d == 1 ? "cyclic:" + std::to_string(p)
                                      : "cyclotomic:" + std::to_string(p) + ":" + std::to_string(d);
            EnumerationJob job{orb_coloring(make_named_group(spec), 3)};
            job.ast_only = true;
            job.node_limit = node_limit;
            job.time_limit_seconds = time_limit_seconds;
            auto er = enumerate_fusions(job);
            rep.complete = rep.complete && er.complete;
            bool consistent = true;
            auto t = cycle_perm(p);
            for (const auto& r : er.results) {
                if (!validate_cc(r.cfg).coherent) consistent = false;
                bool translation = true;
                for (std::size_t rr = 0; rr < r.cfg.colors().size(); ++rr) {
                    auto x = r.cfg.space().unrank(rr);
                    if (r.cfg.color_of(t.act_on_tuple(x)) != r.cfg.color(rr)) translation = false;
                }
                if (!translation) consistent = false;
                if (r.aut_order == 0) consistent = false;
            }
            add("base-" + spec, er.complete && consistent,
                std::to_string(er.results.size()) + " AST fusions, " +
                    std::to_string(er.nodes) + " nodes" +
                    (er.complete ? "" : " (budget exhausted)"));
            for (auto& r : er.results) rep.results.push_back(std::move(r));
        }
    } else {
        throw std::invalid_argument("theorem_checks: unknown suite " + suite);
    }
    return rep;
}

}  // namespace tcc
