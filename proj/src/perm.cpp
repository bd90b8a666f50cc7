#include "tcc/perm.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tcc/prime.hpp"

namespace tcc {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= degree() || seen[v])
            throw std::invalid_argument("Permutation: image table is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation operator*(const Permutation& f, const Permutation& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("Permutation composition: degree mismatch");
    std::vector<int> img(f.degree());
    for (int i = 0; i < f.degree(); ++i) img[i] = g.img_[f.img_[i]];
    return Permutation(std::move(img));
}

std::vector<int> Permutation::act_on_tuple(const std::vector<int>& x) const {
    std::vector<int> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] >= degree())
            throw std::invalid_argument("act_on_tuple: point out of range");
        y[i] = img_[x[i]];
    }
    return y;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < degree(); ++i) {
        if (i) os << ' ';
        os << img_[i];
    }
    return os.str();
}

Permutation Permutation::parse(const std::string& line, int expected_degree) {
    std::istringstream is(line);
    std::vector<int> img;
    int v;
    while (is >> v) img.push_back(v);
    if (expected_degree >= 0 && static_cast<int>(img.size()) != expected_degree)
        throw std::invalid_argument("Permutation::parse: degree mismatch");
    return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------
// PermGroup / Schreier-Sims

PermGroup PermGroup::from_generators(int degree, std::vector<Permutation> gens,
                                     const std::vector<int>& base_prefix) {
    for (const auto& g : gens)
        if (g.degree() != degree)
            throw std::invalid_argument("PermGroup: inconsistent generator degrees");
    PermGroup G;
    G.degree_ = degree;
    G.gens_ = std::move(gens);
    G.build_chain(base_prefix);
    return G;
}

std::vector<const Permutation*> PermGroup::strong_fixing(std::size_t level) const {
    std::vector<const Permutation*> out;
    for (const auto& g : strong_) {
        bool fixes = true;
        for (std::size_t k = 0; k < level && fixes; ++k)
            fixes = g.image(chain_[k].base_point) == chain_[k].base_point;
        if (fixes) out.push_back(&g);
    }
    return out;
}

void PermGroup::recompute_orbit(std::size_t level) {
    Level& L = chain_[level];
    auto gens = strong_fixing(level);
    L.orbit.clear();
    L.transversal.clear();
    L.where.assign(degree_, -1);
    L.orbit.push_back(L.base_point);
    L.where[L.base_point] = 0;
    L.transversal.push_back(Permutation::identity(degree_));
    for (std::size_t i = 0; i < L.orbit.size(); ++i) {
        for (const auto* g : gens) {
            int b = g->image(L.orbit[i]);
            if (L.where[b] < 0) {
                L.where[b] = static_cast<int>(L.orbit.size());
                L.orbit.push_back(b);
                L.transversal.push_back(L.transversal[i] * *g);
            }
        }
    }
}

Permutation PermGroup::sift(const Permutation& f, std::size_t level) const {
    Permutation r = f;
    for (std::size_t l = level; l < chain_.size(); ++l) {
        const Level& L = chain_[l];
        int b = r.image(L.base_point);
        if (L.where[b] < 0) return r;  // not a member; partial residue
        r = r * L.transversal[L.where[b]].inverse();
    }
    return r;
}

void PermGroup::build_chain(const std::vector<int>& base_prefix) {
    chain_.clear();
    strong_.clear();
    for (int b : base_prefix) {
        if (b < 0 || b >= degree_)
            throw std::invalid_argument("PermGroup: base point out of range");
        chain_.push_back(Level{});
        chain_.back().base_point = b;
    }
    for (const auto& g : gens_)
        if (!g.is_identity()) strong_.push_back(g);
    // Fixpoint: every strong generator moves some base point, all orbits are
    // current, and every Schreier generator sifts to the identity.
    auto extend_base_for = [&](const Permutation& g) {
        for (const auto& L : chain_)
            if (g.image(L.base_point) != L.base_point) return false;
        for (int i = 0; i < degree_; ++i)
            if (g.image(i) != i) {
                chain_.push_back(Level{});
                chain_.back().base_point = i;
                return true;
            }
        return false;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& g : strong_)
            if (extend_base_for(g)) changed = true;
        for (std::size_t l = 0; l < chain_.size(); ++l) recompute_orbit(l);
        for (std::size_t l = chain_.size(); l-- > 0 && !changed;) {
            const Level& L = chain_[l];
            auto gens = strong_fixing(l);
            for (std::size_t i = 0; i < L.orbit.size() && !changed; ++i) {
                for (const auto* s : gens) {
                    int b = s->image(L.orbit[i]);
                    Permutation schreier =
                        L.transversal[i] * *s * L.transversal[L.where[b]].inverse();
                    if (schreier.is_identity()) continue;
                    Permutation r = sift(schreier, l + 1);
                    if (!r.is_identity()) {
                        strong_.push_back(std::move(r));
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    order_ = 1;
    for (const auto& L : chain_) {
        std::uint64_t next = order_ * static_cast<std::uint64_t>(L.orbit.size());
        if (!L.orbit.empty() && next / L.orbit.size() != order_)
            throw std::overflow_error("PermGroup: order exceeds 64 bits");
        order_ = next;
    }
}

bool PermGroup::contains(const Permutation& f) const {
    if (f.degree() != degree_)
        throw std::invalid_argument("PermGroup::contains: degree mismatch");
    return sift(f).is_identity();
}

bool PermGroup::same_group(const PermGroup& other) const {
    if (degree_ != other.degree_)
        throw std::invalid_argument("same_group: degree mismatch");
    if (order_ != other.order_) return false;
    for (const auto& g : other.gens_)
        if (!contains(g)) return false;
    for (const auto& g : gens_)
        if (!other.contains(g)) return false;
    return true;
}

PermGroup PermGroup::stabilizer_of_tuple(const std::vector<int>& y) const {
    for (int v : y)
        if (v < 0 || v >= degree_)
            throw std::invalid_argument("stabilizer_of_tuple: point out of range");
    // Rebuild the chain with y as the forced base prefix; the strong
    // generators fixing that prefix generate the pointwise stabilizer.
    PermGroup tmp = from_generators(degree_, gens_, y);
    std::vector<Permutation> stab_gens;
    for (const auto* g : tmp.strong_fixing(std::min(y.size(), tmp.chain_.size())))
        stab_gens.push_back(*g);
    return from_generators(degree_, std::move(stab_gens));
}

std::vector<std::uint32_t> PermGroup::orbits_on_m_tuples(int m) const {
    if (m < 1) throw std::invalid_argument("orbits_on_m_tuples: m must be >= 1");
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) {
        total *= static_cast<std::uint64_t>(degree_);
        if (total > (1u << 26)) throw std::runtime_error("orbits_on_m_tuples: size bound exceeded");
    }
    const std::size_t N = static_cast<std::size_t>(total);
    std::vector<std::uint32_t> color(N, UINT32_MAX);
    std::vector<int> x(m), y(m);
    std::vector<std::size_t> stack;
    std::uint32_t next = 0;
    for (std::size_t r = 0; r < N; ++r) {
        if (color[r] != UINT32_MAX) continue;
        std::uint32_t id = next++;
        color[r] = id;
        stack.assign(1, r);
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            std::size_t t = cur;
            for (int i = m - 1; i >= 0; --i) { x[i] = static_cast<int>(t % degree_); t /= degree_; }
            for (const auto& g : gens_) {
                std::size_t s = 0;
                for (int i = 0; i < m; ++i) s = s * degree_ + g.image(x[i]);
                if (color[s] == UINT32_MAX) {
                    color[s] = id;
                    stack.push_back(s);
                }
            }
        }
    }
    return color;
}

bool PermGroup::is_transitive() const {
    if (degree_ == 0) return true;
    auto c = orbits_on_m_tuples(1);
    return *std::max_element(c.begin(), c.end()) == 0;
}

bool PermGroup::is_2transitive() const {
    if (degree_ < 2) return false;
    auto c = orbits_on_m_tuples(2);
    return *std::max_element(c.begin(), c.end()) == 1;  // diagonal + one off-diagonal class
}

// ---------------------------------------------------------------------------
// Named group catalog

Permutation cycle_perm(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return Permutation(std::move(img));
}

namespace {

Permutation affine_scale(int p, int a) {
    std::vector<int> img(p);
    for (int i = 0; i < p; ++i) img[i] = static_cast<int>((static_cast<long long>(a) * i) % p);
    return Permutation(std::move(img));
}

PermGroup make_sym(int n) {
    std::vector<Permutation> gens;
    if (n >= 2) {
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        gens.emplace_back(std::move(t));
    }
    if (n >= 3) gens.push_back(cycle_perm(n));
    return PermGroup::from_generators(n, std::move(gens));
}

PermGroup make_alt(int n) {
    std::vector<Permutation> gens;
    if (n >= 3) {
        std::vector<int> t(n);
        std::iota(t.begin(), t.end(), 0);
        t[0] = 1; t[1] = 2; t[2] = 0;
        gens.emplace_back(std::move(t));
        if (n > 3) {
            std::vector<int> c(n);
            std::iota(c.begin(), c.end(), 0);
            if (n % 2 == 1) {
                for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
            } else {
                // (1 2 ... n-1), fixing 0
                for (int i = 1; i < n; ++i) c[i] = i % (n - 1) + 1;
            }
            gens.emplace_back(std::move(c));
        }
    }
    return PermGroup::from_generators(n, std::move(gens));
}

// C_p or the cyclotomic group C_p x| K with K <= F_p^x of order d,
// generated by x -> x+1 and x -> kx with k of multiplicative order d.
PermGroup make_cyclotomic(int p, int d) {
    if (!is_prime(p)) throw std::invalid_argument("cyclotomic: p must be prime");
    if (d < 1 || (p - 1) % d != 0) throw std::invalid_argument("cyclotomic: d must divide p-1");
    std::vector<Permutation> gens{cycle_perm(p)};
    if (d > 1 && p > 2) {
        int g = smallest_primitive_root(p);
        int k = pow_mod(g, (p - 1) / d, p);
        gens.push_back(affine_scale(p, k));
    }
    return PermGroup::from_generators(p, std::move(gens));
}

// PGL_d(q) acting on projective points, q prime.  Points are the nonzero
// vectors with first nonzero coordinate 1, ordered lexicographically.
PermGroup make_pgl(int d, int q) {
    if (d < 2) throw std::invalid_argument("pgl: d must be >= 2");
    if (!is_prime(q)) throw std::invalid_argument("pgl: only prime q supported");
    std::vector<std::vector<int>> pts;
    std::vector<int> v(d, 0);
    // enumerate all q^d vectors lexicographically, keep normalized ones
    for (;;) {
        int fnz = -1;
        for (int i = 0; i < d; ++i)
            if (v[i] != 0) { fnz = i; break; }
        if (fnz >= 0 && v[fnz] == 1) pts.push_back(v);
        int i = d - 1;
        while (i >= 0 && v[i] == q - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    auto pt_index = [&](std::vector<int> w) {
        int fnz = -1;
        for (int i = 0; i < d; ++i)
            if (w[i] != 0) { fnz = i; break; }
        int inv = pow_mod(w[fnz], q - 2, q);
        for (int i = 0; i < d; ++i) w[i] = (w[i] * inv) % q;
        auto it = std::lower_bound(pts.begin(), pts.end(), w);
        return static_cast<int>(it - pts.begin());
    };
    auto mat_perm = [&](const std::vector<std::vector<int>>& A) {
        std::vector<int> img(pts.size());
        for (std::size_t k = 0; k < pts.size(); ++k) {
            std::vector<int> w(d, 0);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    w[i] = (w[i] + A[i][j] * pts[k][j]) % q;
            img[k] = pt_index(std::move(w));
        }
        return Permutation(std::move(img));
    };
    std::vector<std::vector<int>> T(d, std::vector<int>(d, 0)), C(d, std::vector<int>(d, 0)),
        D(d, std::vector<int>(d, 0));
    for (int i = 0; i < d; ++i) T[i][i] = C[(i + 1) % d][i] = D[i][i] = 1;
    T[0][1] = 1;  // transvection
    D[0][0] = (q > 2) ? smallest_primitive_root(q) : 1;
    std::vector<Permutation> gens{mat_perm(T), mat_perm(C)};
    if (q > 2) gens.push_back(mat_perm(D));
    auto G = PermGroup::from_generators(static_cast<int>(pts.size()), std::move(gens));
    std::uint64_t expect = 1;
    for (int i = 0; i < d; ++i) {
        std::uint64_t qi = 1, qd = 1;
        for (int k = 0; k < i; ++k) qi *= q;
        for (int k = 0; k < d; ++k) qd *= q;
        expect *= qd - qi;
    }
    expect /= q - 1;
    if (G.order() != expect) throw std::runtime_error("pgl: generator validation failed");
    return G;
}

// The exceptional degree-11 action of PSL(2,11), from a fixed generator
// pair validated at load time (order 660, 2-transitive).
PermGroup make_psl_2_11() {
    Permutation a(std::vector<int>{1, 2, 3, 4, 6, 0, 8, 9, 7, 10, 5});
    Permutation b(std::vector<int>{1, 0, 2, 5, 7, 3, 6, 4, 8, 10, 9});
    auto G = PermGroup::from_generators(11, {a, b});
    if (G.order() != 660 || !G.is_2transitive())
        throw std::runtime_error("psl:2:11 generator validation failed");
    return G;
}

PermGroup from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("group file not found: " + path);
    std::vector<Permutation> gens;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        gens.push_back(Permutation::parse(line, gens.empty() ? -1 : gens.front().degree()));
    }
    if (gens.empty()) throw std::invalid_argument("group file has no generators: " + path);
    const int degree = gens.front().degree();
    return PermGroup::from_generators(degree, std::move(gens));
}

std::vector<std::string> split_colon(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t c = s.find(':', pos);
        if (c == std::string::npos) { out.push_back(s.substr(pos)); break; }
        out.push_back(s.substr(pos, c - pos));
        pos = c + 1;
    }
    return out;
}

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer in group spec: " + s);
    return v;
}

constexpr int kMaxDegree = 31;

}  // namespace

GroupSpec GroupSpec::parse(const std::string& s) {
    make_named_group(s);  // validate eagerly
    return GroupSpec{s};
}

PermGroup make_named_group(const GroupSpec& spec) { return make_named_group(spec.text); }

PermGroup make_named_group(const std::string& spec) {
    auto parts = split_colon(spec);
    if (parts.empty()) throw std::invalid_argument("empty group spec");
    const std::string& kind = parts[0];
    auto need = [&](std::size_t k) {
        if (parts.size() != k) throw std::invalid_argument("malformed group spec: " + spec);
    };
    auto check_degree = [&](int n) {
        if (n < 1 || n > kMaxDegree)
            throw std::invalid_argument("group spec degree out of bounds (1.." +
                                        std::to_string(kMaxDegree) + "): " + spec);
    };
    if (kind == "file") {
        need(2);
        return from_file(parts[1]);
    }
    if (kind == "cyclic") {
        need(2);
        int n = parse_int(parts[1]);
        check_degree(n);
        return PermGroup::from_generators(n, {cycle_perm(n)});
    }
    if (kind == "cyclotomic") {
        need(3);
        int p = parse_int(parts[1]);
        check_degree(p);
        return make_cyclotomic(p, parse_int(parts[2]));
    }
    if (kind == "agl1") {
        need(2);
        int p = parse_int(parts[1]);
        check_degree(p);
        return make_cyclotomic(p, p - 1);
    }
    if (kind == "sym") {
        need(2);
        int n = parse_int(parts[1]);
        check_degree(n);
        return make_sym(n);
    }
    if (kind == "alt") {
        need(2);
        int n = parse_int(parts[1]);
        check_degree(n);
        return make_alt(n);
    }
    if (kind == "psl") {
        need(3);
        if (parse_int(parts[1]) != 2 || parse_int(parts[2]) != 11)
            throw std::invalid_argument("psl: only psl:2:11 is in the catalog");
        return make_psl_2_11();
    }
    if (kind == "pgl") {
        need(3);
        int d = parse_int(parts[1]);
        int q = parse_int(parts[2]);
        auto G = make_pgl(d, q);
        check_degree(G.degree());
        return G;
    }
    throw std::invalid_argument("unknown group spec: " + spec);
}

}  // namespace tcc
