#include "sd/racks.hpp"

#include <algorithm>
#include <numeric>

namespace sd {

std::vector<int> FiniteRack::column(int q) const {
    std::vector<int> col(n);
    for (int p = 0; p < n; ++p) col[p] = T[p][q];
    return col;
}

static void require_square(const std::vector<std::vector<int>>& T) {
    const int n = static_cast<int>(T.size());
    for (int p = 0; p < n; ++p) {
        if (static_cast<int>(T[p].size()) != n)
            throw InputError("rack table is not square (row " + std::to_string(p) + ")");
        for (int q = 0; q < n; ++q)
            if (T[p][q] < 0 || T[p][q] >= n)
                throw InputError("rack table entry out of range at (" + std::to_string(p) + "," +
                                 std::to_string(q) + ")");
    }
}

RackCheck verify_rack(const std::vector<std::vector<int>>& T) {
    require_square(T);
    const int n = static_cast<int>(T.size());
    RackCheck c;
    c.is_rack = true;
    c.is_quandle = true;

    // axiom 1: every column map is a bijection
    for (int q = 0; q < n; ++q) {
        std::vector<bool> hit(n, false);
        for (int p = 0; p < n; ++p) {
            if (hit[T[p][q]]) {
                c.is_rack = false;
                c.witnesses.push_back({"column-bijective", {q, p}, "repeated value in column"});
                break;
            }
            hit[T[p][q]] = true;
        }
    }
    // axiom 2: (p<|q)<|r = (p<|r)<|(q<|r)
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (int r = 0; r < n; ++r)
                if (T[T[p][q]][r] != T[T[p][r]][T[q][r]]) {
                    c.is_rack = false;
                    c.witnesses.push_back({"self-distributivity", {p, q, r}});
                    goto distrib_done;
                }
distrib_done:
    for (int p = 0; p < n; ++p)
        if (T[p][p] != p) {
            c.is_quandle = false;
            c.witnesses.push_back({"idempotency", {p}});
            break;
        }
    c.is_quandle = c.is_quandle && c.is_rack;
    return c;
}

RackCheck verify_rack(const FiniteRack& r) { return verify_rack(r.T); }

FiniteRack trivial_rack(int n) {
    if (n < 1) throw InputError("trivial rack needs n >= 1");
    FiniteRack r;
    r.n = n;
    r.T.assign(n, std::vector<int>(n));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) r.T[p][q] = p;
    return r;
}

FiniteRack conjugation_quandle(const FiniteGroup& g, const std::vector<int>& conj_class) {
    std::vector<int> cls = conj_class;
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    if (cls.empty()) throw InputError("conjugacy class is empty");
    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < static_cast<int>(cls.size()); ++i) {
        if (cls[i] < 0 || cls[i] >= g.n) throw InputError("class element out of range");
        pos[cls[i]] = i;
    }
    // closure under conjugation makes the operation well-defined on the class
    for (int a : cls)
        for (int h = 0; h < g.n; ++h)
            if (pos[g.conj(a, h)] < 0)
                throw InputError("set is not closed under conjugation (element " + std::to_string(a) +
                                 " conjugated by " + std::to_string(h) + ")");
    FiniteRack r;
    r.n = static_cast<int>(cls.size());
    r.T.assign(r.n, std::vector<int>(r.n));
    for (int p = 0; p < r.n; ++p)
        for (int q = 0; q < r.n; ++q) r.T[p][q] = pos[g.conj(cls[p], cls[q])];
    return r;
}

FiniteRack core_quandle(const FiniteGroup& g) {
    FiniteRack r;
    r.n = g.n;
    r.T.assign(g.n, std::vector<int>(g.n));
    for (int p = 0; p < g.n; ++p)
        for (int q = 0; q < g.n; ++q) r.T[p][q] = g.mul(g.mul(q, g.inverse(p)), q);
    return r;
}

FiniteRack alexander_quandle(int modulus, int t) {
    if (modulus < 1) throw InputError("modulus must be >= 1");
    t %= modulus;
    if (t < 0) t += modulus;
    if (std::gcd(t, modulus) != 1)
        throw InputError("t = " + std::to_string(t) + " is not a unit mod " + std::to_string(modulus));
    FiniteRack r;
    r.n = modulus;
    r.T.assign(modulus, std::vector<int>(modulus));
    for (int p = 0; p < modulus; ++p)
        for (int q = 0; q < modulus; ++q) {
            long long v = static_cast<long long>(t) * p + static_cast<long long>(1 - t) * q;
            r.T[p][q] = static_cast<int>(((v % modulus) + modulus) % modulus);
        }
    return r;
}

FiniteRack generalized_alexander_quandle(const FiniteGroup& g, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != g.n) throw InputError("automorphism arity differs from group order");
    std::vector<bool> hit(g.n, false);
    for (int x : f) {
        if (x < 0 || x >= g.n || hit[x]) throw InputError("map is not a permutation");
        hit[x] = true;
    }
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (f[g.mul(a, b)] != g.mul(f[a], f[b]))
                throw InputError("map is not an automorphism (fails at " + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
    FiniteRack r;
    r.n = g.n;
    r.T.assign(g.n, std::vector<int>(g.n));
    for (int p = 0; p < g.n; ++p)
        for (int q = 0; q < g.n; ++q) r.T[p][q] = g.mul(f[g.mul(p, g.inverse(q))], q);
    return r;
}

FaithfulResult is_faithful(const FiniteRack& r) {
    FaithfulResult res;
    for (int q = 0; q < r.n; ++q)
        for (int q2 = q + 1; q2 < r.n; ++q2) {
            bool same = true;
            for (int p = 0; p < r.n && same; ++p) same = r.T[p][q] == r.T[p][q2];
            if (same) {
                res.faithful = false;
                res.collision = {q, q2};
                return res;
            }
        }
    res.faithful = true;
    return res;
}

std::uint64_t permutation_order(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    std::uint64_t order = 1;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::uint64_t len = 0;
        for (int x = s; !seen[x]; x = perm[x]) {
            seen[x] = true;
            ++len;
        }
        order = lcm_u64(order, len);
    }
    return order;
}

std::uint64_t translation_order(const FiniteRack& r) {
    constexpr std::uint64_t kCap = 1000000;
    std::uint64_t order = 1;
    for (int q = 0; q < r.n; ++q) {
        order = lcm_u64(order, permutation_order(r.column(q)));
        if (order > kCap)
            throw InputError("translation order exceeds cap 10^6; table looks corrupted");
    }
    return order;
}

HomCheck check_rack_hom(const RackHom& h) {
    const FiniteRack& S = *h.source;
    const FiniteRack& T = *h.target;
    if (static_cast<int>(h.map.size()) != S.n) throw InputError("hom map arity differs from source size");
    for (int v : h.map)
        if (v < 0 || v >= T.n) throw InputError("hom map value out of target range");
    HomCheck c;
    c.valid = true;
    for (int p = 0; p < S.n; ++p)
        for (int q = 0; q < S.n; ++q)
            if (h.map[S.op(p, q)] != T.op(h.map[p], h.map[q])) {
                c.valid = false;
                c.witness = {p, q};
                return c;
            }
    return c;
}

}  // namespace sd
