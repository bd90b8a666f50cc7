#include "tcc/config.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace tcc {

namespace {

constexpr std::size_t kMaxTuples = std::size_t{1} << 26;

struct VecHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// Relabels arbitrary signatures by first occurrence in rank order.
std::vector<std::uint32_t> relabel(const std::vector<std::vector<std::uint64_t>>& sigs,
                                   std::uint32_t* k_out = nullptr) {
    std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, VecHash> ids;
    ids.reserve(sigs.size());
    std::vector<std::uint32_t> out(sigs.size());
    for (std::size_t r = 0; r < sigs.size(); ++r) {
        auto [it, fresh] = ids.emplace(sigs[r], static_cast<std::uint32_t>(ids.size()));
        out[r] = it->second;
    }
    if (k_out) *k_out = static_cast<std::uint32_t>(ids.size());
    return out;
}

std::vector<std::uint32_t> canonical(const std::vector<std::uint32_t>& colors,
                                     std::uint32_t* k_out = nullptr) {
    std::vector<std::uint32_t> map;
    std::vector<std::uint32_t> out(colors.size());
    std::unordered_map<std::uint32_t, std::uint32_t> ids;
    for (std::size_t r = 0; r < colors.size(); ++r) {
        auto [it, fresh] = ids.emplace(colors[r], static_cast<std::uint32_t>(ids.size()));
        out[r] = it->second;
    }
    if (k_out) *k_out = static_cast<std::uint32_t>(ids.size());
    return out;
}

}  // namespace

std::size_t TupleSpace::size() const {
    std::size_t s = 1;
    for (int i = 0; i < m; ++i) {
        s *= static_cast<std::size_t>(n);
        if (s > kMaxTuples) throw std::runtime_error("TupleSpace: size bound exceeded");
    }
    return s;
}

std::size_t TupleSpace::rank(const std::vector<int>& x) const {
    if (static_cast<int>(x.size()) != m) throw std::invalid_argument("TupleSpace::rank: arity mismatch");
    std::size_t r = 0;
    for (int i = 0; i < m; ++i) {
        if (x[i] < 0 || x[i] >= n) throw std::invalid_argument("TupleSpace::rank: point out of range");
        r = r * n + x[i];
    }
    return r;
}

std::vector<int> TupleSpace::unrank(std::size_t r) const {
    std::vector<int> x(m);
    for (int i = m - 1; i >= 0; --i) {
        x[i] = static_cast<int>(r % n);
        r /= n;
    }
    return x;
}

int EquivPattern::num_classes() const {
    return rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
}

std::string EquivPattern::to_string() const {
    std::string s;
    for (int v : rgs) s += static_cast<char>('0' + v);
    return s;
}

EquivPattern rho_pattern(const std::vector<int>& x) {
    EquivPattern p;
    p.rgs.resize(x.size());
    std::vector<int> seen;
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto it = std::find(seen.begin(), seen.end(), x[i]);
        if (it == seen.end()) {
            p.rgs[i] = static_cast<int>(seen.size());
            seen.push_back(x[i]);
        } else {
            p.rgs[i] = static_cast<int>(it - seen.begin());
        }
    }
    return p;
}

TensorConfig::TensorConfig(TupleSpace space, std::vector<std::uint32_t> colors)
    : space_(space) {
    if (colors.size() != space_.size())
        throw std::invalid_argument("TensorConfig: color array size mismatch");
    colors_ = canonical(colors, &k_);
}

const std::vector<ClassInfo>& TensorConfig::classes() const {
    if (classes_.empty() && k_ > 0) {
        classes_.resize(k_);
        std::vector<char> seen(k_, 0);
        for (std::size_t r = 0; r < colors_.size(); ++r) {
            auto c = colors_[r];
            if (!seen[c]) {
                seen[c] = 1;
                classes_[c].representative = r;
                classes_[c].pattern = rho_pattern(space_.unrank(r));
            }
            ++classes_[c].size;
        }
    }
    return classes_;
}

std::vector<std::size_t> TensorConfig::class_members(std::uint32_t cls) const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < colors_.size(); ++r)
        if (colors_[r] == cls) out.push_back(r);
    return out;
}

std::vector<std::vector<std::uint32_t>> sigma_rank_tables(const TupleSpace& space) {
    const int m = space.m;
    int count = 1;
    for (int i = 0; i < m; ++i) count *= m;
    const std::size_t N = space.size();
    std::vector<std::vector<std::uint32_t>> tabs(count, std::vector<std::uint32_t>(N));
    std::vector<int> sigma(m), x(m), y(m);
    for (int s = 0; s < count; ++s) {
        int t = s;
        for (int i = m - 1; i >= 0; --i) { sigma[i] = t % m; t /= m; }
        for (std::size_t r = 0; r < N; ++r) {
            std::size_t rr = r;
            for (int i = m - 1; i >= 0; --i) { x[i] = static_cast<int>(rr % space.n); rr /= space.n; }
            std::size_t q = 0;
            for (int i = 0; i < m; ++i) q = q * space.n + x[sigma[i]];
            tabs[s][r] = static_cast<std::uint32_t>(q);
        }
    }
    return tabs;
}

namespace {

// Packs the m substitution colors at one alpha into a single word.
std::uint64_t pack_colors(const std::uint32_t* c, int m, std::uint64_t k) {
    std::uint64_t v = 0;
    for (int i = 0; i < m; ++i) v = v * k + c[i];
    return v;
}

std::vector<std::uint32_t> sigma_refine(const TupleSpace&,
                                        const std::vector<std::uint32_t>& colors,
                                        const std::vector<std::vector<std::uint32_t>>& tabs,
                                        std::uint32_t* k_out) {
    const std::size_t N = colors.size();
    std::vector<std::vector<std::uint64_t>> sigs(N);
    for (std::size_t r = 0; r < N; ++r) {
        auto& s = sigs[r];
        s.reserve(tabs.size() + 1);
        s.push_back(colors[r]);
        for (const auto& tab : tabs) s.push_back(colors[tab[r]]);
    }
    return relabel(sigs, k_out);
}

std::vector<std::uint32_t> count_refine(const TupleSpace& space,
                                        const std::vector<std::uint32_t>& colors,
                                        std::uint32_t k,
                                        std::uint32_t* k_out) {
    const std::size_t N = colors.size();
    const int n = space.n, m = space.m;
    // stride[i] = n^(m-1-i)
    std::vector<std::size_t> stride(m, 1);
    for (int i = m - 2; i >= 0; --i) stride[i] = stride[i + 1] * n;
    std::vector<std::vector<std::uint64_t>> sigs(N);
    std::vector<std::uint32_t> sub(m);
    std::vector<std::uint64_t> packed(n);
    std::vector<int> x(m);
    for (std::size_t r = 0; r < N; ++r) {
        std::size_t rr = r;
        for (int i = m - 1; i >= 0; --i) { x[i] = static_cast<int>(rr % n); rr /= n; }
        for (int a = 0; a < n; ++a) {
            for (int i = 0; i < m; ++i)
                sub[i] = colors[r + (a - x[i]) * static_cast<long long>(stride[i])];
            packed[a] = pack_colors(sub.data(), m, k);
        }
        std::sort(packed.begin(), packed.end());
        auto& s = sigs[r];
        s.reserve(n + 1);
        s.push_back(colors[r]);
        s.insert(s.end(), packed.begin(), packed.end());
    }
    return relabel(sigs, k_out);
}

}  // namespace

TensorConfig wl_close(const TensorConfig& cfg) { return wl_close(cfg, nullptr); }

TensorConfig wl_close(const TensorConfig& cfg, int* rounds_out) {
    const TupleSpace space = cfg.space();
    auto tabs = sigma_rank_tables(space);
    std::vector<std::uint32_t> colors = cfg.colors();
    std::uint32_t k = cfg.num_classes();
    int rounds = 0;
    for (;;) {
        std::uint32_t k1 = 0, k2 = 0;
        auto c1 = sigma_refine(space, colors, tabs, &k1);
        auto c2 = count_refine(space, c1, k1, &k2);
        if (k2 == k) break;  // refinement only splits, so equal count means stable
        colors = std::move(c2);
        k = k2;
        ++rounds;
    }
    if (rounds_out) *rounds_out = rounds;
    return TensorConfig(space, std::move(colors));
}

CcVerdict validate_cc(const TensorConfig& cfg) {
    const auto& colors = cfg.colors();
    const TupleSpace space = cfg.space();
    const std::size_t N = colors.size();
    const std::uint32_t k = cfg.num_classes();

    // C1: pattern constancy per class
    {
        std::vector<EquivPattern> pat(k);
        std::vector<std::int64_t> first(k, -1);
        for (std::size_t r = 0; r < N; ++r) {
            auto c = colors[r];
            auto p = rho_pattern(space.unrank(r));
            if (first[c] < 0) {
                first[c] = static_cast<std::int64_t>(r);
                pat[c] = p;
            } else if (!(pat[c] == p)) {
                return {false, CcViolation{"C1", c, {static_cast<std::size_t>(first[c]), r},
                                           "tuples with different coordinate patterns share a class"}};
            }
        }
    }
    // C2: every sigma maps each class into a single class
    auto tabs = sigma_rank_tables(space);
    for (std::size_t s = 0; s < tabs.size(); ++s) {
        std::vector<std::int64_t> img(k, -1), first(k, -1);
        for (std::size_t r = 0; r < N; ++r) {
            auto c = colors[r];
            auto ic = colors[tabs[s][r]];
            if (img[c] < 0) {
                img[c] = ic;
                first[c] = static_cast<std::int64_t>(r);
            } else if (img[c] != ic) {
                return {false, CcViolation{"C2", c, {static_cast<std::size_t>(first[c]), r},
                                           "class image under a coordinate map is split (sigma #" +
                                               std::to_string(s) + ")"}};
            }
        }
    }
    // C3: the substitution multiset is constant on each class
    {
        const int n = space.n, m = space.m;
        std::vector<std::size_t> stride(m, 1);
        for (int i = m - 2; i >= 0; --i) stride[i] = stride[i + 1] * n;
        std::vector<std::vector<std::uint64_t>> ref(k);
        std::vector<std::int64_t> first(k, -1);
        std::vector<std::uint32_t> sub(m);
        std::vector<std::uint64_t> packed(n);
        std::vector<int> x(m);
        for (std::size_t r = 0; r < N; ++r) {
            std::size_t rr = r;
            for (int i = m - 1; i >= 0; --i) { x[i] = static_cast<int>(rr % n); rr /= n; }
            for (int a = 0; a < n; ++a) {
                for (int i = 0; i < m; ++i)
                    sub[i] = colors[r + (a - x[i]) * static_cast<long long>(stride[i])];
                packed[a] = pack_colors(sub.data(), m, k);
            }
            std::sort(packed.begin(), packed.end());
            auto c = colors[r];
            if (first[c] < 0) {
                first[c] = static_cast<std::int64_t>(r);
                ref[c] = packed;
            } else if (ref[c] != packed) {
                return {false, CcViolation{"C3", c, {static_cast<std::size_t>(first[c]), r},
                                           "intersection numbers depend on the representative"}};
            }
        }
    }
    return {true, std::nullopt};
}

std::optional<std::uint32_t> sigma_image(const TensorConfig& cfg, std::uint32_t cls,
                                         const std::vector<int>& sigma) {
    const int m = cfg.m();
    if (static_cast<int>(sigma.size()) != m)
        throw std::invalid_argument("sigma_image: sigma arity mismatch");
    for (int v : sigma)
        if (v < 0 || v >= m) throw std::invalid_argument("sigma_image: sigma out of range");
    std::int64_t img = -1;
    std::vector<int> y(m);
    for (std::size_t r = 0; r < cfg.colors().size(); ++r) {
        if (cfg.color(r) != cls) continue;
        auto x = cfg.space().unrank(r);
        for (int i = 0; i < m; ++i) y[i] = x[sigma[i]];
        auto ic = cfg.color_of(y);
        if (img < 0)
            img = ic;
        else if (img != ic)
            return std::nullopt;
    }
    return static_cast<std::uint32_t>(img);
}

std::size_t intersection_number(const TensorConfig& cfg, std::uint32_t X,
                                const std::vector<std::uint32_t>& Xi,
                                const std::vector<int>& x) {
    const int m = cfg.m();
    if (static_cast<int>(Xi.size()) != m)
        throw std::invalid_argument("intersection_number: need one class per coordinate");
    if (cfg.color_of(x) != X)
        throw std::invalid_argument("intersection_number: representative not in class");
    std::size_t count = 0;
    std::vector<int> y = x;
    for (int a = 0; a < cfg.n(); ++a) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            int save = y[i];
            y[i] = a;
            ok = cfg.color_of(y) == Xi[i];
            y[i] = save;
        }
        if (ok) ++count;
    }
    return count;
}

TensorConfig orb_coloring(const PermGroup& G, int m) {
    TupleSpace space{G.degree(), m};
    return TensorConfig(space, G.orbits_on_m_tuples(m));
}

TensorConfig project(const TensorConfig& cfg, const std::vector<int>& I) {
    const int m = cfg.m();
    if (I.empty()) throw std::invalid_argument("project: empty index set");
    for (int i : I)
        if (i < 0 || i >= m) throw std::invalid_argument("project: index out of range");
    TupleSpace out{cfg.n(), static_cast<int>(I.size())};
    const std::size_t M = out.size();
    // Projected tuples are classified by the set of colors above them.
    std::vector<std::set<std::uint32_t>> above(M);
    for (std::size_t r = 0; r < cfg.colors().size(); ++r) {
        auto x = cfg.space().unrank(r);
        std::size_t u = 0;
        for (int i : I) u = u * cfg.n() + x[i];
        above[u].insert(cfg.color(r));
    }
    std::vector<std::vector<std::uint64_t>> sigs(M);
    for (std::size_t u = 0; u < M; ++u) sigs[u].assign(above[u].begin(), above[u].end());
    return TensorConfig(out, relabel(sigs));
}

TensorConfig residue(const TensorConfig& cfg, const std::vector<int>& I,
                     const std::vector<int>& u) {
    const int m = cfg.m();
    if (I.size() != u.size() || I.empty() || static_cast<int>(I.size()) >= m)
        throw std::invalid_argument("residue: need 0 < |I| < m and |I| = |u|");
    std::vector<char> in_I(m, 0);
    for (int i : I) {
        if (i < 0 || i >= m || in_I[i]) throw std::invalid_argument("residue: bad index set");
        in_I[i] = 1;
    }
    for (int v : u)
        if (v < 0 || v >= cfg.n()) throw std::invalid_argument("residue: point out of range");
    std::vector<int> comp;
    for (int i = 0; i < m; ++i)
        if (!in_I[i]) comp.push_back(i);
    TupleSpace out{cfg.n(), static_cast<int>(comp.size())};
    const std::size_t M = out.size();
    std::vector<std::uint32_t> colors(M);
    std::vector<int> full(m);
    for (std::size_t i = 0; i < I.size(); ++i) full[I[i]] = u[i];
    for (std::size_t r = 0; r < M; ++r) {
        auto v = out.unrank(r);
        for (std::size_t i = 0; i < comp.size(); ++i) full[comp[i]] = v[i];
        colors[r] = cfg.color_of(full);
    }
    return TensorConfig(out, std::move(colors));
}

std::vector<std::vector<int>> fibers(const TensorConfig& cfg) {
    auto p1 = project(cfg, {0});
    std::vector<std::vector<int>> out(p1.num_classes());
    for (int i = 0; i < cfg.n(); ++i) out[p1.color(i)].push_back(i);
    return out;
}

TensorConfig restrict_to_fiber(const TensorConfig& cfg, const std::vector<int>& delta) {
    auto fb = fibers(cfg);
    if (std::find(fb.begin(), fb.end(), delta) == fb.end())
        throw std::invalid_argument("restrict_to_fiber: delta is not a fiber");
    TupleSpace out{static_cast<int>(delta.size()), cfg.m()};
    const std::size_t M = out.size();
    std::vector<std::uint32_t> colors(M);
    std::vector<int> x(cfg.m());
    for (std::size_t r = 0; r < M; ++r) {
        auto loc = out.unrank(r);
        for (int i = 0; i < cfg.m(); ++i) x[i] = delta[loc[i]];
        colors[r] = cfg.color_of(x);
    }
    return TensorConfig(out, std::move(colors));
}

bool leq(const TensorConfig& coarse, const TensorConfig& fine) {
    if (!(coarse.space() == fine.space()))
        throw std::invalid_argument("leq: space mismatch");
    std::vector<std::int64_t> to_coarse(fine.num_classes(), -1);
    for (std::size_t r = 0; r < fine.colors().size(); ++r) {
        auto f = fine.color(r);
        if (to_coarse[f] < 0)
            to_coarse[f] = coarse.color(r);
        else if (to_coarse[f] != coarse.color(r))
            return false;
    }
    return true;
}

TensorConfig fuse(const TensorConfig& cfg, const FusionSpec& spec) {
    if (spec.merge.size() != cfg.num_classes())
        throw std::invalid_argument("fuse: merge map size mismatch");
    const auto& info = cfg.classes();
    std::map<std::uint32_t, EquivPattern> pat;
    for (std::uint32_t c = 0; c < cfg.num_classes(); ++c) {
        auto [it, fresh] = pat.emplace(spec.merge[c], info[c].pattern);
        if (!fresh && !(it->second == info[c].pattern))
            throw std::invalid_argument("fuse: merging classes with different patterns");
    }
    std::vector<std::uint32_t> colors(cfg.colors().size());
    for (std::size_t r = 0; r < colors.size(); ++r) colors[r] = spec.merge[cfg.color(r)];
    return TensorConfig(cfg.space(), std::move(colors));
}

bool is_ast(const TensorConfig& cfg) {
    if (cfg.m() != 3) throw std::invalid_argument("is_ast: arity must be 3");
    return project(cfg, {0, 1}).num_classes() <= 2;
}

TensorConfig one_point_extension(const TensorConfig& cfg2, int omega) {
    if (cfg2.m() != 2) throw std::invalid_argument("one_point_extension: arity must be 2");
    if (omega < 0 || omega >= cfg2.n())
        throw std::invalid_argument("one_point_extension: point out of range");
    auto colors = cfg2.colors();
    std::size_t r = cfg2.space().rank({omega, omega});
    colors[r] = cfg2.num_classes();  // individualize (omega,omega)
    return wl_close(TensorConfig(cfg2.space(), std::move(colors)));
}

TensorConfig wl3_of_binary(const TensorConfig& cfg2) {
    if (cfg2.m() != 2) throw std::invalid_argument("wl3_of_binary: arity must be 2");
    const int n = cfg2.n();
    TupleSpace space{n, 3};
    const std::size_t N = space.size();
    std::vector<std::vector<std::uint64_t>> sigs(N);
    for (std::size_t r = 0; r < N; ++r) {
        auto x = space.unrank(r);
        auto pat = rho_pattern(x);
        std::uint64_t pid = 0;
        for (int v : pat.rgs) pid = pid * 3 + v;
        sigs[r] = {pid,
                   cfg2.color_of({x[0], x[1]}),
                   cfg2.color_of({x[1], x[2]}),
                   cfg2.color_of({x[0], x[2]})};
    }
    auto out = wl_close(TensorConfig(space, relabel(sigs)));
    if (!(project(out, {0, 1}) == cfg2))
        throw std::runtime_error("wl3_of_binary: binary projection does not reproduce the input");
    return out;
}

TensorConfig pattern_coloring(int n, int m) {
    TupleSpace space{n, m};
    const std::size_t N = space.size();
    std::vector<std::vector<std::uint64_t>> sigs(N);
    for (std::size_t r = 0; r < N; ++r) {
        auto pat = rho_pattern(space.unrank(r));
        std::uint64_t pid = 0;
        for (int v : pat.rgs) pid = pid * m + v;
        sigs[r] = {pid};
    }
    return TensorConfig(space, relabel(sigs));
}

}  // namespace tcc
