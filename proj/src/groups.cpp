#include "sd/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sd {

std::string Violation::describe() const {
    std::ostringstream os;
    os << rule << " at (";
    for (std::size_t i = 0; i < where.size(); ++i) os << (i ? "," : "") << where[i];
    os << ")";
    if (!note.empty()) os << ": " << note;
    return os.str();
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return a / std::gcd(a, b) * b;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw InputError("cyclic group order must be >= 1");
    FiniteGroup g;
    g.n = n;
    g.table.assign(n, std::vector<int>(n));
    g.inv.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
        g.inv[a] = (n - a) % n;
    }
    g.e = 0;
    return g;
}

FiniteGroup symmetric_group(int k) {
    if (k < 1) throw InputError("symmetric group degree must be >= 1");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<int>, int> rank;
    for (int i = 0; i < static_cast<int>(perms.size()); ++i) rank[perms[i]] = i;

    const int n = static_cast<int>(perms.size());
    FiniteGroup g;
    g.n = n;
    g.table.assign(n, std::vector<int>(n));
    g.inv.assign(n, 0);
    std::vector<int> comp(k), ip(k);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            // (a*b)(x) = a(b(x)): right factor acts first
            for (int x = 0; x < k; ++x) comp[x] = perms[a][perms[b][x]];
            g.table[a][b] = rank.at(comp);
        }
        for (int x = 0; x < k; ++x) ip[perms[a][x]] = x;
        g.inv[a] = rank.at(ip);
    }
    g.e = 0;  // identity is lexicographically first
    return g;
}

ValidationReport verify_group_table(const std::vector<std::vector<int>>& table) {
    ValidationReport rep;
    const int n = static_cast<int>(table.size());
    if (n == 0) {
        rep.add("nonempty", {}, "table has no rows");
        return rep;
    }
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n) {
            rep.add("square", {a}, "row length differs from row count");
            return rep;
        }
        for (int b = 0; b < n; ++b) {
            if (table[a][b] < 0 || table[a][b] >= n) {
                rep.add("closure", {a, b}, "entry out of range");
                return rep;
            }
        }
    }
    // identity
    int e = -1;
    for (int c = 0; c < n && e < 0; ++c) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = table[c][a] == a && table[a][c] == a;
        if (ok) e = c;
    }
    if (e < 0) {
        int witness = 0;
        rep.add("identity", {witness}, "no two-sided identity element");
    }
    // associativity
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]]) {
                    rep.add("associativity", {a, b, c});
                    goto assoc_done;
                }
assoc_done:
    if (e >= 0) {
        for (int a = 0; a < n; ++a) {
            bool has = false;
            for (int b = 0; b < n && !has; ++b)
                has = table[a][b] == e && table[b][a] == e;
            if (!has) rep.add("inverses", {a}, "no two-sided inverse");
        }
    }
    return rep;
}

ValidationReport verify_group(const FiniteGroup& g) {
    ValidationReport rep = verify_group_table(g.table);
    if (!rep.ok()) return rep;
    for (int a = 0; a < g.n; ++a) {
        if (g.table[g.e][a] != a || g.table[a][g.e] != a) rep.add("identity", {g.e, a}, "stored identity wrong");
        if (g.table[a][g.inv[a]] != g.e) rep.add("inverses", {a}, "stored inverse wrong");
    }
    return rep;
}

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table) {
    ValidationReport rep = verify_group_table(table);
    if (!rep.ok()) throw InputError("not a group: " + rep.violations.front().describe());
    FiniteGroup g;
    g.n = static_cast<int>(table.size());
    g.table = table;
    for (int c = 0; c < g.n; ++c) {
        bool ok = true;
        for (int a = 0; a < g.n && ok; ++a) ok = table[c][a] == a && table[a][c] == a;
        if (ok) {
            g.e = c;
            break;
        }
    }
    g.inv.assign(g.n, 0);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (table[a][b] == g.e && table[b][a] == g.e) {
                g.inv[a] = b;
                break;
            }
    return g;
}

GroupQueries group_queries(const FiniteGroup& g) {
    GroupQueries q;
    q.is_abelian = true;
    for (int z = 0; z < g.n; ++z) {
        bool central = true;
        for (int a = 0; a < g.n && central; ++a)
            central = g.mul(z, a) == g.mul(a, z);
        if (central) q.center.push_back(z);
    }
    q.is_abelian = static_cast<int>(q.center.size()) == g.n;

    std::vector<bool> seen(g.n, false);
    for (int a = 0; a < g.n; ++a) {
        if (seen[a]) continue;
        std::set<int> cls;
        for (int h = 0; h < g.n; ++h) cls.insert(g.conj(a, h));
        std::vector<int> v(cls.begin(), cls.end());
        for (int x : v) seen[x] = true;
        q.conjugacy_classes.push_back(std::move(v));
    }
    // classes come out ordered by minimal element because `a` scans ascending
    return q;
}

GroupAction conjugation_action(const FiniteGroup& g) {
    GroupAction a;
    a.group = g;
    a.target = g;
    a.maps.assign(g.n, std::vector<int>(g.n));
    for (int h = 0; h < g.n; ++h)
        for (int x = 0; x < g.n; ++x) a.maps[h][x] = g.conj(x, h);
    return a;
}

GroupAction trivial_action(const FiniteGroup& g, const FiniteGroup& target) {
    GroupAction a;
    a.group = g;
    a.target = target;
    a.maps.assign(g.n, std::vector<int>(target.n));
    for (int h = 0; h < g.n; ++h)
        for (int x = 0; x < target.n; ++x) a.maps[h][x] = x;
    return a;
}

ValidationReport verify_action(const GroupAction& act) {
    ValidationReport rep;
    const FiniteGroup& G = act.group;
    const FiniteGroup& F = act.target;
    if (static_cast<int>(act.maps.size()) != G.n) {
        rep.add("shape", {}, "one permutation required per group element");
        return rep;
    }
    for (int g = 0; g < G.n; ++g) {
        if (static_cast<int>(act.maps[g].size()) != F.n) {
            rep.add("shape", {g}, "map arity differs from target order");
            return rep;
        }
        std::vector<bool> hit(F.n, false);
        for (int x = 0; x < F.n; ++x) {
            int y = act.maps[g][x];
            if (y < 0 || y >= F.n || hit[y]) {
                rep.add("bijection", {g, x});
                break;
            }
            hit[y] = true;
        }
        for (int x = 0; x < F.n; ++x)
            for (int y = 0; y < F.n; ++y)
                if (act.maps[g][F.mul(x, y)] != F.mul(act.maps[g][x], act.maps[g][y])) {
                    rep.add("automorphism", {g, x, y});
                    goto next_g;
                }
    next_g:;
    }
    for (int x = 0; x < F.n; ++x)
        if (act.maps[G.e][x] != x) {
            rep.add("unit-map", {x}, "rho_e is not the identity");
            break;
        }
    // right action: rho_{gh} = rho_h ∘ rho_g
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < G.n; ++h)
            for (int x = 0; x < F.n; ++x)
                if (act.maps[G.mul(g, h)][x] != act.maps[h][act.maps[g][x]]) {
                    rep.add("composition", {g, h, x});
                    goto comp_done;
                }
comp_done:
    return rep;
}

}  // namespace sd
