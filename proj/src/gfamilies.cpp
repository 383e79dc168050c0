#include "sd/gfamilies.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sd {

FiniteRack GFamily::slice(int g) const {
    FiniteRack r;
    r.n = carrier_size;
    r.T = tables[g];
    return r;
}

FamilyCheck verify_gfamily(const GFamily& fam) {
    FamilyCheck c;
    const int n = fam.carrier_size;
    const FiniteGroup& G = fam.group;
    if (static_cast<int>(fam.tables.size()) != G.n)
        throw InputError("family needs one table per group element");
    for (int g = 0; g < G.n; ++g) {
        if (static_cast<int>(fam.tables[g].size()) != n)
            throw InputError("table for g=" + std::to_string(g) + " has wrong carrier size");
        for (int p = 0; p < n; ++p) {
            if (static_cast<int>(fam.tables[g][p].size()) != n)
                throw InputError("table for g=" + std::to_string(g) + " is not square");
            for (int q = 0; q < n; ++q)
                if (fam.tables[g][p][q] < 0 || fam.tables[g][p][q] >= n)
                    throw InputError("table entry out of range");
        }
    }

    c.rack_family = true;
    bool idem = true;

    // axiom 1: p <|_g p = p
    for (int g = 0; g < G.n && idem; ++g)
        for (int p = 0; p < n; ++p)
            if (fam.op(p, p, g) != p) {
                idem = false;
                c.witnesses.push_back({"family-idempotency", {p, g}});
                break;
            }

    // axiom 2: (q <|_g p) <|_h p = q <|_{gh} p, and q <|_e p = q
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p) {
            if (fam.op(q, p, G.e) != q) {
                c.rack_family = false;
                c.witnesses.push_back({"family-unit", {q, p}, "q <|_e p != q"});
                goto axiom2_done;
            }
            for (int g = 0; g < G.n; ++g)
                for (int h = 0; h < G.n; ++h)
                    if (fam.op(fam.op(q, p, g), p, h) != fam.op(q, p, G.mul(g, h))) {
                        c.rack_family = false;
                        c.witnesses.push_back({"family-group-law", {q, p, g, h}});
                        goto axiom2_done;
                    }
        }
axiom2_done:

    // axiom 3: (q <|_g p) <|_h r = (q <|_h r) <|_{h^-1 g h} (p <|_h r)
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p)
            for (int r = 0; r < n; ++r)
                for (int g = 0; g < G.n; ++g)
                    for (int h = 0; h < G.n; ++h) {
                        int lhs = fam.op(fam.op(q, p, g), r, h);
                        int rhs = fam.op(fam.op(q, r, h), fam.op(p, r, h), G.conj(g, h));
                        if (lhs != rhs) {
                            c.rack_family = false;
                            c.witnesses.push_back({"family-distributivity", {q, p, r, g, h}});
                            goto axiom3_done;
                        }
                    }
axiom3_done:
    c.quandle_family = c.rack_family && idem;
    return c;
}

GFamily trivial_gfamily(int carrier_size, const FiniteGroup& group) {
    if (carrier_size < 1) throw InputError("carrier size must be >= 1");
    GFamily fam;
    fam.carrier_size = carrier_size;
    fam.group = group;
    fam.tables.assign(group.n, std::vector<std::vector<int>>(carrier_size, std::vector<int>(carrier_size)));
    for (int g = 0; g < group.n; ++g)
        for (int p = 0; p < carrier_size; ++p)
            for (int q = 0; q < carrier_size; ++q) fam.tables[g][p][q] = p;
    return fam;
}

GFamily power_gfamily(const FiniteRack& rack) {
    RackCheck rc = verify_rack(rack);
    if (!rc.is_rack) throw InputError("power family input is not a rack");
    const int N = static_cast<int>(translation_order(rack));
    GFamily fam;
    fam.carrier_size = rack.n;
    fam.group = cyclic_group(N);
    fam.tables.assign(N, std::vector<std::vector<int>>(rack.n, std::vector<int>(rack.n)));
    for (int q = 0; q < rack.n; ++q) {
        std::vector<int> power(rack.n);
        std::iota(power.begin(), power.end(), 0);  // R_q^0 = id
        for (int i = 0; i < N; ++i) {
            for (int p = 0; p < rack.n; ++p) fam.tables[i][p][q] = power[p];
            for (int p = 0; p < rack.n; ++p) power[p] = rack.op(power[p], q);
        }
    }
    return fam;
}

GFamily module_gfamily(int modulus, const FiniteGroup& group, const std::vector<int>& units) {
    if (modulus < 1) throw InputError("modulus must be >= 1");
    if (static_cast<int>(units.size()) != group.n) throw InputError("one unit required per group element");
    for (int g = 0; g < group.n; ++g) {
        int u = units[g];
        if (u < 0 || u >= modulus || std::gcd(u, modulus) != 1)
            throw InputError("units[" + std::to_string(g) + "] is not a unit mod " + std::to_string(modulus));
    }
    if (units[group.e] % modulus != 1 % modulus)
        throw InputError("unit map must send the identity to 1");
    for (int g = 0; g < group.n; ++g)
        for (int h = 0; h < group.n; ++h)
            if (units[group.mul(g, h)] != (units[g] * units[h]) % modulus)
                throw InputError("unit map is not a homomorphism into (Z_m)^x");

    GFamily fam;
    fam.carrier_size = modulus;
    fam.group = group;
    fam.tables.assign(group.n, std::vector<std::vector<int>>(modulus, std::vector<int>(modulus)));
    for (int g = 0; g < group.n; ++g) {
        long long u = units[g];
        for (int p = 0; p < modulus; ++p)
            for (int q = 0; q < modulus; ++q) {
                long long v = p * u + q * (1 - u);
                fam.tables[g][p][q] = static_cast<int>(((v % modulus) + modulus) % modulus);
            }
    }
    return fam;
}

namespace {

struct CosetStructure {
    std::vector<int> coset_of;               // element -> coset index
    std::vector<std::vector<int>> members;   // coset index -> sorted elements
};

std::vector<int> normalized_subgroup(const FiniteGroup& F, std::vector<int> H) {
    std::sort(H.begin(), H.end());
    H.erase(std::unique(H.begin(), H.end()), H.end());
    if (H.empty()) throw InputError("subgroup set is empty");
    std::vector<bool> in(F.n, false);
    for (int h : H) {
        if (h < 0 || h >= F.n) throw InputError("subgroup element out of range");
        in[h] = true;
    }
    if (!in[F.e]) throw InputError("subgroup does not contain the identity");
    for (int a : H) {
        if (!in[F.inverse(a)]) throw InputError("subgroup not closed under inverse");
        for (int b : H)
            if (!in[F.mul(a, b)]) throw InputError("subgroup not closed under product");
    }
    return H;
}

CosetStructure left_cosets(const FiniteGroup& F, const std::vector<int>& H) {
    CosetStructure cs;
    cs.coset_of.assign(F.n, -1);
    // scanning ascending f orders cosets by their minimal element
    for (int f = 0; f < F.n; ++f) {
        if (cs.coset_of[f] >= 0) continue;
        int idx = static_cast<int>(cs.members.size());
        std::set<int> mem;
        for (int h : H) mem.insert(F.mul(f, h));
        for (int x : mem) cs.coset_of[x] = idx;
        cs.members.emplace_back(mem.begin(), mem.end());
    }
    return cs;
}

}  // namespace

CosetHypotheses check_coset_hypotheses(const CosetFamilyData& d) {
    CosetHypotheses hy;
    const FiniteGroup& F = d.F;
    const FiniteGroup& G = d.action.group;

    std::vector<int> H;
    try {
        H = normalized_subgroup(F, d.H);
        hy.H_subgroup = true;
    } catch (const InputError& err) {
        hy.witnesses.push_back({"H-subgroup", {}, err.what()});
        return hy;
    }
    std::vector<bool> inH(F.n, false);
    for (int h : H) inH[h] = true;

    ValidationReport act = verify_action(d.action);
    hy.automorphisms_ok = act.ok();
    for (auto& v : act.violations) hy.witnesses.push_back(v);

    hy.H_stable = true;
    for (int g = 0; g < G.n && hy.H_stable; ++g)
        for (int h : H)
            if (!inH[d.action.apply(g, h)]) {
                hy.H_stable = false;
                hy.witnesses.push_back({"H-stable", {g, h}, "rho_g(h) escapes H"});
                break;
            }

    hy.symmetry_ok = true;
    for (int g = 0; g < G.n && hy.symmetry_ok; ++g)
        for (int f = 0; f < F.n; ++f) {
            bool fwd = inH[F.mul(F.inverse(f), d.action.apply(g, f))];
            bool bwd = inH[F.mul(f, d.action.apply(g, F.inverse(f)))];
            if (fwd && !bwd) {
                hy.symmetry_ok = false;
                hy.witnesses.push_back({"symmetry", {f, g}, "f^-1 rho_g(f) in H but f rho_g(f^-1) not in H"});
                break;
            }
        }
    return hy;
}

GFamily coset_gfamily(const CosetFamilyData& d) {
    const FiniteGroup& F = d.F;
    const FiniteGroup& G = d.action.group;
    std::vector<int> H = normalized_subgroup(F, d.H);
    std::vector<bool> inH(F.n, false);
    for (int h : H) inH[h] = true;

    ValidationReport act = verify_action(d.action);
    if (!act.ok()) throw InputError("coset family action invalid: " + act.violations.front().describe());
    for (int g = 0; g < G.n; ++g)
        for (int h : H)
            if (!inH[d.action.apply(g, h)])
                throw InputError("rho_" + std::to_string(g) + "(H) not contained in H");

    CosetStructure cs = left_cosets(F, H);
    const int n = static_cast<int>(cs.members.size());

    GFamily fam;
    fam.carrier_size = n;
    fam.group = G;
    fam.tables.assign(G.n, std::vector<std::vector<int>>(n, std::vector<int>(n, -1)));
    for (int g = 0; g < G.n; ++g)
        for (int ci = 0; ci < n; ++ci)      // acted-on coset f'H
            for (int cj = 0; cj < n; ++cj)  // acting coset fH
                for (int fp : cs.members[ci])
                    for (int f : cs.members[cj]) {
                        int val = F.mul(f, d.action.apply(g, F.mul(F.inverse(f), fp)));
                        int coset = cs.coset_of[val];
                        int& cell = fam.tables[g][ci][cj];
                        if (cell < 0)
                            cell = coset;
                        else if (cell != coset)
                            throw InputError("coset operation not well-defined at cosets (" +
                                             std::to_string(ci) + "," + std::to_string(cj) + "), g=" +
                                             std::to_string(g));
                    }
    return fam;
}

FiniteRack associated_quandle(const GFamily& fam) {
    const int nQ = fam.carrier_size;
    const int nG = fam.group.n;
    FiniteRack r;
    r.n = nQ * nG;
    r.T.assign(r.n, std::vector<int>(r.n));
    for (int p = 0; p < nQ; ++p)
        for (int g = 0; g < nG; ++g)
            for (int q = 0; q < nQ; ++q)
                for (int h = 0; h < nG; ++h)
                    r.T[p * nG + g][q * nG + h] = fam.op(p, q, g) * nG + fam.group.conj(g, h);
    return r;
}

NoetherResult check_noether_first(const GFamily& fam) {
    NoetherResult res;
    const int n = fam.carrier_size;
    const int nG = fam.group.n;
    for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r) {
            bool q_fixed = true, r_fixed = true;
            for (int g = 0; g < nG && q_fixed; ++g) q_fixed = fam.op(q, r, g) == q;
            for (int g = 0; g < nG && r_fixed; ++g) r_fixed = fam.op(r, q, g) == r;
            if (q_fixed == r_fixed) continue;
            res.holds = false;
            NoetherWitness w;
            w.q = q;
            w.r = r;
            w.forward = q_fixed;
            for (int g = 0; g < nG; ++g)
                if (q_fixed ? fam.op(r, q, g) != r : fam.op(q, r, g) != q) {
                    w.g = g;
                    break;
                }
            res.witness = w;
            return res;
        }
    res.holds = true;
    return res;
}

CentralFaithfulResult check_central_faithful(const GFamily& fam) {
    CentralFaithfulResult res;
    GroupQueries q = group_queries(fam.group);
    for (int g : q.center) {
        if (is_faithful(fam.slice(g)).faithful) {
            res.applicable = true;
            res.central_witness = g;
            return res;
        }
    }
    return res;
}

}  // namespace sd
