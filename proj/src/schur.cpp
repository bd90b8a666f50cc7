#include "tcc/schur.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tcc/prime.hpp"

namespace tcc {

namespace {

int gcd_int(int a, int b) { return std::gcd(a, b); }

std::vector<std::vector<int>> canonical_classes(std::vector<std::vector<int>> classes) {
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

}  // namespace

CyclicCarrier CyclicCarrier::zmod(int n) {
    if (n < 1) throw std::invalid_argument("zmod: n must be positive");
    CyclicCarrier c;
    c.kind_ = Kind::ZMod;
    c.order_ = n;
    c.modulus_ = n;
    c.elements_.resize(n);
    std::iota(c.elements_.begin(), c.elements_.end(), 0);
    return c;
}

CyclicCarrier CyclicCarrier::fstar(int p) {
    if (!is_prime(p)) throw std::invalid_argument("fstar: p must be prime");
    CyclicCarrier c;
    c.kind_ = Kind::FStar;
    c.order_ = p - 1;
    c.modulus_ = p;
    c.elements_.resize(p - 1);
    std::iota(c.elements_.begin(), c.elements_.end(), 1);
    return c;
}

CyclicCarrier CyclicCarrier::parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad carrier spec: " + s);
    int v = std::stoi(s.substr(colon + 1));
    auto kind = s.substr(0, colon);
    if (kind == "zmod") return zmod(v);
    if (kind == "fstar") return fstar(v);
    throw std::invalid_argument("bad carrier spec: " + s);
}

int CyclicCarrier::identity() const { return kind_ == Kind::ZMod ? 0 : 1; }

int CyclicCarrier::op(int a, int b) const {
    if (kind_ == Kind::ZMod) return (a + b) % modulus_;
    return static_cast<int>(static_cast<long long>(a) * b % modulus_);
}

int CyclicCarrier::inv(int a) const {
    if (kind_ == Kind::ZMod) return (modulus_ - a) % modulus_;
    return pow_mod(a, modulus_ - 2, modulus_);
}

bool CyclicCarrier::is_generator(int a) const {
    if (kind_ == Kind::ZMod) return gcd_int(a, modulus_) == 1;
    return is_primitive_root(a, modulus_);
}

std::vector<int> CyclicCarrier::generators() const {
    std::vector<int> out;
    for (int x : elements_)
        if (is_generator(x)) out.push_back(x);
    return out;
}

int CyclicCarrier::apply_aut(int k, int x) const {
    if (kind_ == Kind::ZMod) {
        if (gcd_int(k, modulus_) != 1) throw std::invalid_argument("apply_aut: k not a unit");
        return static_cast<int>(static_cast<long long>(k) * x % modulus_);
    }
    if (gcd_int(k, order_) != 1) throw std::invalid_argument("apply_aut: k not a unit");
    return pow_mod(x, k, modulus_);
}

std::string CyclicCarrier::to_string() const {
    return (kind_ == Kind::ZMod ? "zmod:" : "fstar:") + std::to_string(modulus_);
}

SchurVerdict is_schur_partition(const CyclicCarrier& carrier,
                                const std::vector<std::vector<int>>& classes_in) {
    auto classes = canonical_classes(classes_in);
    const int n = carrier.order();
    std::vector<int> cls_of(carrier.modulus() + 1, -1);
    int total = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (int x : classes[c]) {
            bool valid = std::find(carrier.elements().begin(), carrier.elements().end(), x) !=
                         carrier.elements().end();
            if (!valid || cls_of[x] != -1)
                return {false, "not a partition of the carrier", std::nullopt};
            cls_of[x] = static_cast<int>(c);
            ++total;
        }
    }
    if (total != n) return {false, "not a partition of the carrier", std::nullopt};
    if (classes.empty() || classes[0] != std::vector<int>{carrier.identity()})
        return {false, "identity is not a singleton class", std::nullopt};
    for (const auto& X : classes) {
        std::vector<int> Xinv;
        for (int x : X) Xinv.push_back(carrier.inv(x));
        std::sort(Xinv.begin(), Xinv.end());
        if (std::find(classes.begin(), classes.end(), Xinv) == classes.end())
            return {false, "inverse closure fails", std::nullopt};
    }
    const std::size_t k = classes.size();
    std::vector mult(carrier.modulus() + 1, 0);
    SchurPartition pi{carrier, classes, {}};
    pi.structure_constants.assign(k, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            std::fill(mult.begin(), mult.end(), 0);
            for (int x : classes[a])
                for (int y : classes[b]) ++mult[carrier.op(x, y)];
            for (std::size_t c = 0; c < k; ++c) {
                int m0 = mult[classes[c].front()];
                for (int z : classes[c])
                    if (mult[z] != m0)
                        return {false, "product of classes is not a class combination", std::nullopt};
                pi.structure_constants[c][a][b] = m0;
            }
        }
    }
    return {true, "", pi};
}

std::vector<int> radical(const CyclicCarrier& carrier, const std::vector<int>& X) {
    if (X.empty()) throw std::invalid_argument("radical: X must be nonempty");
    std::set<int> Xs(X.begin(), X.end());
    std::vector<int> rad;
    for (int y : carrier.elements()) {
        bool fixes = true;
        for (int x : X)
            if (!Xs.count(carrier.op(y, x))) { fixes = false; break; }
        if (fixes) rad.push_back(y);
    }
    return rad;
}

std::vector<std::vector<int>> highest_classes(const SchurPartition& pi) {
    std::vector<std::vector<int>> out;
    for (const auto& X : pi.classes) {
        bool has_gen = std::any_of(X.begin(), X.end(),
                                   [&](int x) { return pi.carrier.is_generator(x); });
        if (has_gen) out.push_back(X);
    }
    return out;
}

bool is_group_type(const CyclicCarrier& fstar, const std::vector<int>& X) {
    if (fstar.kind() != CyclicCarrier::Kind::FStar)
        throw std::invalid_argument("is_group_type: needs a multiplicative carrier");
    if (X.empty() || std::find(X.begin(), X.end(), 1) != X.end())
        throw std::invalid_argument("is_group_type: X must be nonempty with 1 not in X");
    std::set<int> H(X.begin(), X.end());
    H.insert(1);
    for (int a : H)
        for (int b : H)
            if (!H.count(fstar.op(a, b))) return false;
    return true;
}

std::vector<int> tau_image(int p, const std::vector<int>& X) {
    std::vector<int> out;
    for (int x : X) out.push_back(((1 - x) % p + p) % p);
    std::sort(out.begin(), out.end());
    return out;
}

SchurPartition cyclotomic_partition(const CyclicCarrier& carrier, const std::vector<int>& K) {
    const int aut_mod = carrier.kind() == CyclicCarrier::Kind::ZMod ? carrier.modulus()
                                                                    : carrier.order();
    std::set<int> Ks;
    for (int k : K) {
        int kk = ((k % aut_mod) + aut_mod) % aut_mod;
        if (aut_mod > 1 && gcd_int(kk, aut_mod) != 1)
            throw std::invalid_argument("cyclotomic_partition: K contains a non-unit");
        Ks.insert(kk);
    }
    if (aut_mod == 1) Ks = {0};  // the one-element group has a unique automorphism
    for (int a : Ks)
        for (int b : Ks)
            if (!Ks.count(static_cast<int>(static_cast<long long>(a) * b % aut_mod)))
                throw std::invalid_argument("cyclotomic_partition: K is not closed");
    std::vector<std::vector<int>> classes;
    std::set<int> done;
    for (int x : carrier.elements()) {
        if (done.count(x)) continue;
        std::set<int> orbit;
        for (int k : Ks) orbit.insert(aut_mod == 1 ? x : carrier.apply_aut(k, x));
        classes.emplace_back(orbit.begin(), orbit.end());
        done.insert(orbit.begin(), orbit.end());
    }
    auto v = is_schur_partition(carrier, classes);
    if (!v.ok) throw std::runtime_error("cyclotomic_partition: orbit partition not Schur: " + v.reason);
    return *v.partition;
}

namespace {

// Orbit-partition test: Pi is an orbit partition iff the classwise stabilizer
// K0 = {a : x^a lies in the class of x, for all x} has exactly Pi as orbits.
bool is_orbit_partition(const CyclicCarrier& carrier,
                        const std::vector<std::vector<int>>& classes) {
    const int aut_mod = carrier.kind() == CyclicCarrier::Kind::ZMod ? carrier.modulus()
                                                                    : carrier.order();
    std::vector<int> cls_of(carrier.modulus() + 1, -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int x : classes[c]) cls_of[x] = static_cast<int>(c);
    std::vector<int> K0;
    for (int a = 0; a < std::max(aut_mod, 1); ++a) {
        if (aut_mod > 1 && gcd_int(a, aut_mod) != 1) continue;
        bool classwise = true;
        for (int x : carrier.elements())
            if (cls_of[aut_mod == 1 ? x : carrier.apply_aut(a, x)] != cls_of[x]) {
                classwise = false;
                break;
            }
        if (classwise) K0.push_back(a);
    }
    std::set<std::vector<int>> orbits;
    for (int x : carrier.elements()) {
        std::set<int> orb;
        for (int a : K0) orb.insert(aut_mod == 1 ? x : carrier.apply_aut(a, x));
        orbits.insert(std::vector<int>(orb.begin(), orb.end()));
    }
    std::set<std::vector<int>> cls_set;
    for (auto c : classes) {
        std::sort(c.begin(), c.end());
        cls_set.insert(c);
    }
    return orbits == cls_set;
}

bool is_trivial_partition(const CyclicCarrier&,
                          const std::vector<std::vector<int>>& classes) {
    return classes.size() <= 2;
}

// All set partitions of {0,...,t-1}, canonical (restricted growth) order.
std::vector<std::vector<std::vector<int>>> set_partitions(int t) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(t, 0);
    auto emit = [&]() {
        int k = t ? *std::max_element(rgs.begin(), rgs.end()) + 1 : 0;
        std::vector<std::vector<int>> blocks(k);
        for (int i = 0; i < t; ++i) blocks[rgs[i]].push_back(i);
        out.push_back(std::move(blocks));
    };
    if (t == 0) {
        out.push_back({});
        return out;
    }
    // iterate restricted growth strings
    for (;;) {
        emit();
        int i = t - 1;
        while (i > 0) {
            int maxp = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] <= maxp) { ++rgs[i]; break; }
            rgs[i--] = 0;
        }
        if (i == 0) break;
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return out;
}

}  // namespace

CyclicSchurClassification classify_cyclic_schur(const SchurPartition& pi) {
    const CyclicCarrier& G = pi.carrier;
    CyclicSchurClassification res;
    res.highest = highest_classes(pi);
    bool all_nontrivial = !res.highest.empty();
    for (const auto& X : res.highest) {
        auto r = radical(G, X);
        res.radicals.push_back(r);
        if (r.size() == 1) all_nontrivial = false;
    }
    if (all_nontrivial) {
        res.which = 'a';
        return res;
    }

    const int n = G.order();
    // prime-power components of n
    std::vector<int> components;
    for (int q : prime_factors(n)) {
        int qq = 1;
        int t = n;
        while (t % q == 0) { qq *= q; t /= q; }
        components.push_back(qq);
    }
    if (components.empty()) components.push_back(1);  // identity group
    auto subgroup_of_order = [&](int d) {
        // unique subgroup of order d in a cyclic group of order n
        std::vector<int> out;
        for (int x : G.elements()) {
            // element order divides d  <=>  x^(d) = identity
            int y = G.identity();
            int e = d;
            int acc = x;
            // fast exponentiation in the carrier
            while (e > 0) {
                if (e & 1) y = G.op(y, acc);
                acc = G.op(acc, acc);
                e >>= 1;
            }
            if (y == G.identity()) out.push_back(x);
        }
        return out;
    };
    const int t = static_cast<int>(components.size());
    for (const auto& blocks : set_partitions(t)) {
        std::vector<int> orders;
        for (const auto& b : blocks) {
            int d = 1;
            for (int i : b) d *= components[i];
            orders.push_back(d);
        }
        const int k = static_cast<int>(orders.size());
        // CRT projection onto the factor of order d: x -> x^(e_d) where
        // e_d = 1 mod d and 0 mod n/d
        std::vector<long long> idem(k);
        for (int i = 0; i < k; ++i) {
            int d = orders[i], cod = n / d;
            long long e = 0;
            for (long long c = 0; c < d; ++c)
                if ((c * cod) % d == 1 % d) { e = c * cod; break; }
            if (d == 1) e = 0;
            idem[i] = e;
        }
        auto proj = [&](int x, int i) {
            int y = G.identity(), acc = x;
            long long e = idem[i];
            while (e > 0) {
                if (e & 1) y = G.op(y, acc);
                acc = G.op(acc, acc);
                e >>= 1;
            }
            return y;
        };
        // projected partitions and the product-formula check
        std::vector<std::set<std::vector<int>>> parts(k);
        bool ok = true;
        for (const auto& X : pi.classes) {
            std::vector<std::set<int>> Xi(k);
            for (int x : X)
                for (int i = 0; i < k; ++i) Xi[i].insert(proj(x, i));
            std::size_t prod = 1;
            for (int i = 0; i < k; ++i) prod *= Xi[i].size();
            if (prod != X.size()) { ok = false; break; }
            for (int i = 0; i < k; ++i)
                parts[i].insert(std::vector<int>(Xi[i].begin(), Xi[i].end()));
        }
        if (!ok) continue;
        // every combination of factor classes must be a class of pi
        std::set<std::vector<int>> pi_set;
        for (auto c : pi.classes) pi_set.insert(c);
        std::size_t combos = 1;
        for (int i = 0; i < k; ++i) combos *= parts[i].size();
        if (combos != pi.classes.size()) continue;
        // factor partitions must be Schur and satisfy (b1)
        std::vector<SchurFactor> factors;
        int non_trivial = 0;
        for (int i = 0; i < k && ok; ++i) {
            SchurFactor f;
            f.order = orders[i];
            f.carrier_elements = subgroup_of_order(orders[i]);
            f.classes.assign(parts[i].begin(), parts[i].end());
            // view the factor as a cyclic carrier in its own right via the
            // element indices within the subgroup
            std::vector<int> idx_of(G.modulus() + 1, -1);
            for (std::size_t j = 0; j < f.carrier_elements.size(); ++j)
                idx_of[f.carrier_elements[j]] = static_cast<int>(j);
            // check partition-ness of the factor
            std::set<int> covered;
            for (const auto& c : f.classes)
                for (int x : c) {
                    if (idx_of[x] < 0) ok = false;
                    covered.insert(x);
                }
            if (covered.size() != f.carrier_elements.size()) ok = false;
            if (!ok) break;
            // classwise tests run inside the subgroup: build a zmod view
            // through the discrete-log relabeling of the cyclic subgroup
            int g = -1;
            for (int x : f.carrier_elements) {
                // generator of the subgroup: element of order exactly f.order
                std::set<int> pw;
                int y = x;
                for (int e = 1; e <= f.order; ++e) { pw.insert(y); y = G.op(y, x); }
                if (static_cast<int>(pw.size()) == f.order) { g = x; break; }
            }
            std::vector<int> dlog(G.modulus() + 1, -1);
            int y = G.identity();
            for (int e = 0; e < f.order; ++e) { dlog[y] = e; y = G.op(y, g); }
            auto z = CyclicCarrier::zmod(f.order);
            std::vector<std::vector<int>> zcls;
            for (const auto& c : f.classes) {
                std::vector<int> zc;
                for (int x : c) zc.push_back(dlog[x]);
                std::sort(zc.begin(), zc.end());
                zcls.push_back(zc);
            }
            if (!is_schur_partition(z, zcls).ok) { ok = false; break; }
            f.trivial = is_trivial_partition(z, zcls);
            f.orbit = is_orbit_partition(z, zcls);
            if (!f.trivial) {
                ++non_trivial;
                if (!f.orbit) ok = false;
            }
            factors.push_back(std::move(f));
        }
        if (!ok || non_trivial > 1) continue;
        // verify (b2) exactly: all combinations are classes
        std::vector<std::vector<std::vector<int>>> pv;
        for (int i = 0; i < k; ++i) pv.emplace_back(parts[i].begin(), parts[i].end());
        std::vector<std::size_t> pick(k, 0);
        bool all_classes = true;
        for (;;) {
            std::set<int> combo{G.identity()};
            for (int i = 0; i < k; ++i) {
                std::set<int> next;
                for (int a : combo)
                    for (int b : pv[i][pick[i]]) next.insert(G.op(a, b));
                combo = std::move(next);
            }
            std::vector<int> cv(combo.begin(), combo.end());
            if (!pi_set.count(cv)) { all_classes = false; break; }
            int i = k - 1;
            while (i >= 0 && pick[i] + 1 == pv[i].size()) pick[i--] = 0;
            if (i < 0) break;
            ++pick[i];
        }
        if (!all_classes) continue;
        res.which = 'b';
        res.factors = std::move(factors);
        return res;
    }
    throw std::runtime_error("classify_cyclic_schur: dichotomy failed (implementation bug)");
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of Schur partitions (n <= 16)

namespace {

struct Enumerator {
    const CyclicCarrier& G;
    std::vector<int> cls_of;  // element value -> class id, -1 if unassigned
    std::vector<std::vector<int>> classes;
    std::vector<SchurPartition> out;

    explicit Enumerator(const CyclicCarrier& g) : G(g), cls_of(g.modulus() + 1, -1) {
        cls_of[G.identity()] = 0;
        classes.push_back({G.identity()});
    }

    // Multiplicity signature of the unassigned elements with respect to the
    // completed classes: elements that must share a class have equal rows.
    std::map<int, std::vector<int>> signatures() const {
        std::map<int, std::vector<int>> sig;
        for (int z : G.elements())
            if (cls_of[z] < 0) sig[z] = {};
        for (const auto& X : classes)
            for (const auto& Y : classes) {
                std::vector<int> mult(G.modulus() + 1, 0);
                for (int x : X)
                    for (int y : Y) ++mult[G.op(x, y)];
                for (auto& [z, s] : sig) s.push_back(mult[z]);
            }
        return sig;
    }

    // The partial-closure test: products of completed classes must be
    // constant on every completed class.
    bool completed_consistent() const {
        for (const auto& X : classes)
            for (const auto& Y : classes) {
                std::vector<int> mult(G.modulus() + 1, 0);
                for (int x : X)
                    for (int y : Y) ++mult[G.op(x, y)];
                for (const auto& Z : classes) {
                    int m0 = mult[Z.front()];
                    for (int z : Z)
                        if (mult[z] != m0) return false;
                }
            }
        return true;
    }

    void assign(const std::vector<int>& X, int id) {
        for (int x : X) cls_of[x] = id;
    }
    void unassign(const std::vector<int>& X) {
        for (int x : X) cls_of[x] = -1;
    }

    void recurse() {
        int e = -1;
        for (int z : G.elements())
            if (cls_of[z] < 0) { e = z; break; }
        if (e < 0) {
            auto v = is_schur_partition(G, classes);
            if (v.ok) out.push_back(*v.partition);
            return;
        }
        auto sig = signatures();
        // candidates for the class of e: unassigned elements with e's signature
        std::vector<int> cand;
        for (auto& [z, s] : sig)
            if (z != e && s == sig[e]) cand.push_back(z);
        const int nc = static_cast<int>(cand.size());
        for (int mask = 0; mask < (1 << nc); ++mask) {
            std::vector<int> X{e};
            for (int i = 0; i < nc; ++i)
                if (mask & (1 << i)) X.push_back(cand[i]);
            std::sort(X.begin(), X.end());
            std::vector<int> Xinv;
            for (int x : X) Xinv.push_back(G.inv(x));
            std::sort(Xinv.begin(), Xinv.end());
            bool self_paired = Xinv == X;
            if (!self_paired) {
                // X^{-1} must be assignable as its own class: disjoint from X,
                // fully unassigned, and signature-uniform
                bool ok = true;
                for (int x : Xinv)
                    if (cls_of[x] >= 0 ||
                        std::binary_search(X.begin(), X.end(), x)) { ok = false; break; }
                if (ok)
                    for (int x : Xinv)
                        if (sig[x] != sig[Xinv.front()]) { ok = false; break; }
                if (!ok) continue;
            }
            int id = static_cast<int>(classes.size());
            classes.push_back(X);
            assign(X, id);
            if (!self_paired) {
                classes.push_back(Xinv);
                assign(Xinv, id + 1);
            }
            if (completed_consistent()) recurse();
            if (!self_paired) {
                unassign(Xinv);
                classes.pop_back();
            }
            unassign(X);
            classes.pop_back();
        }
    }
};

}  // namespace

std::vector<SchurPartition> enumerate_schur_partitions(const CyclicCarrier& carrier) {
    if (carrier.order() > 16)
        throw std::invalid_argument("enumerate_schur_partitions: order bound 16 exceeded");
    Enumerator en(carrier);
    en.recurse();
    std::sort(en.out.begin(), en.out.end(),
              [](const SchurPartition& a, const SchurPartition& b) {
                  return a.classes < b.classes;
              });
    return en.out;
}

}  // namespace tcc
