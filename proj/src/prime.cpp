#include "tcc/prime.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tcc {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int pow_mod(int base, long long exp, int mod) {
    long long b = ((base % mod) + mod) % mod, r = 1;
    while (exp > 0) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<int>(r);
}

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_primitive_root(int x, int p) {
    x = ((x % p) + p) % p;
    if (x == 0) return false;
    for (int q : prime_factors(p - 1))
        if (pow_mod(x, (p - 1) / q, p) == 1) return false;
    return true;
}

int smallest_primitive_root(int p) {
    for (int x = 1; x < p; ++x)
        if (is_primitive_root(x, p)) return x;
    throw std::invalid_argument("smallest_primitive_root: no generator (p not prime?)");
}

std::vector<int> primitive_roots(int p) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("primitive_roots: p must be an odd prime");
    std::vector<int> out;
    for (int x = 2; x < p; ++x)
        if (is_primitive_root(x, p)) out.push_back(x);
    return out;
}

QuadraticClass quadratic_class(int p) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("quadratic_class: p must be an odd prime");
    bool square = pow_mod(2, (p - 1) / 2, p) == 1;  // Euler criterion
    QuadraticClass qc{p % 8, square};
    bool pm1 = qc.p_mod_8 == 1 || qc.p_mod_8 == 7;
    if (pm1 != square) throw std::runtime_error("quadratic_class: mod-8 dichotomy violated");
    return qc;
}

std::optional<int> primitive_pair_witness(int p) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("primitive_pair_witness: p must be an odd prime");
    for (int x = 1; x < p; ++x)
        if (is_primitive_root(x, p) && is_primitive_root((1 - x % p + p) % p, p)) return x;
    return std::nullopt;
}

namespace {

// rad(X) = {y in F^x : yX = X}, always a subgroup of F_p^x.
std::vector<int> mult_radical(int p, const std::set<int>& X) {
    std::vector<int> rad;
    for (int y = 1; y < p; ++y) {
        bool fixes = true;
        for (int x : X)
            if (!X.count(static_cast<int>(static_cast<long long>(y) * x % p))) { fixes = false; break; }
        if (fixes) rad.push_back(y);
    }
    return rad;
}

bool mult_group_type(int p, const std::set<int>& X) {
    if (X.count(1) || X.empty()) return false;
    std::set<int> H = X;
    H.insert(1);
    for (int a : H)
        for (int b : H)
            if (!H.count(static_cast<int>(static_cast<long long>(a) * b % p))) return false;
    return true;
}

}  // namespace

RadicalShiftRecord radical_shift_check(int p, const std::vector<int>& Xv) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("radical_shift_check: p must be an odd prime");
    std::set<int> X(Xv.begin(), Xv.end());
    if (X.empty() || X.count(1))
        throw std::invalid_argument("radical_shift_check: X must be nonempty with 1 not in X");
    for (int x : X)
        if (x < 1 || x >= p) throw std::invalid_argument("radical_shift_check: X not a subset of F_p^x");

    std::set<int> Y;  // 1 - X, never contains 0 since 1 not in X
    long long sx = 0, sy = 0;
    for (int x : X) {
        int y = ((1 - x) % p + p) % p;
        Y.insert(y);
        sx += x;
        sy += y;
    }
    RadicalShiftRecord rec;
    rec.rad_X = mult_radical(p, X);
    rec.rad_one_minus_X = mult_radical(p, Y);
    rec.X_group_type = mult_group_type(p, X);
    rec.one_minus_X_group_type = mult_group_type(p, Y);
    rec.sum_identity_holds = (sx + sy) % p == static_cast<long long>(X.size()) % p;
    rec.statement1_holds = rec.rad_X.size() == 1 || rec.rad_one_minus_X.size() == 1;
    rec.statement2_holds = !(rec.X_group_type && rec.one_minus_X_group_type) ||
                           X.size() == static_cast<std::size_t>(p - 2);
    return rec;
}

}  // namespace tcc
