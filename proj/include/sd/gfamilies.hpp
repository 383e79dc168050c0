#pragma once

#include <optional>
#include <vector>

#include "sd/common.hpp"
#include "sd/groups.hpp"
#include "sd/racks.hpp"

namespace sd {

/// Group-indexed family of quandle operations on a common carrier:
/// tables[g][p][q] = p <|_g q.
struct GFamily {
    int carrier_size = 0;
    FiniteGroup group;
    std::vector<std::vector<std::vector<int>>> tables;

    int op(int p, int q, int g) const { return tables[g][p][q]; }
    /// The single-operation rack (Q, <|_g).
    FiniteRack slice(int g) const;
};

struct FamilyCheck {
    bool rack_family = false;    // axioms 2 and 3 (idempotency dropped)
    bool quandle_family = false; // all three axioms
    std::vector<Violation> witnesses;
};

/// Verifies family axioms. Idempotency is reported separately so that
/// G-families of racks (the relaxed notion) can be accepted where wanted.
FamilyCheck verify_gfamily(const GFamily& fam);

GFamily trivial_gfamily(int carrier_size, const FiniteGroup& group);

/// p <|_i q = R_q^i(p) over Z_N with N the rack's translation order.
/// A quandle input yields a quandle family; a non-quandle rack yields a
/// rack family (axiom 1 fails by construction).
GFamily power_gfamily(const FiniteRack& rack);

/// Carrier Z_m with G acting through units: p <|_g q = p*u(g) + q*(1-u(g)).
/// units[g] must define a homomorphism G -> (Z_m)^x.
GFamily module_gfamily(int modulus, const FiniteGroup& group, const std::vector<int>& units);

struct CosetFamilyData {
    FiniteGroup F;
    std::vector<int> H;  // subgroup element indices
    GroupAction action;  // action of the parameter group on F
};

struct CosetHypotheses {
    bool automorphisms_ok = false;
    bool H_subgroup = false;
    bool H_stable = false;   // rho_g(H) ⊆ H for all g
    bool symmetry_ok = false; // f^-1 rho_g(f) in H  =>  f rho_g(f^-1) in H
    std::vector<Violation> witnesses;

    bool all() const { return automorphisms_ok && H_subgroup && H_stable && symmetry_ok; }
};

CosetHypotheses check_coset_hypotheses(const CosetFamilyData& d);

/// Carrier = left cosets fH ordered by minimal element,
/// operation f'H <|_g fH = f rho_g(f^-1 f') H. Checks stability of H and
/// representative independence; either failure is an InputError.
GFamily coset_gfamily(const CosetFamilyData& d);

/// The quandle on Q x G with (p,g)*(q,h) = (p <|_g q, h^-1 g h),
/// pair (p,g) at index p*|G| + g.
FiniteRack associated_quandle(const GFamily& fam);

struct NoetherWitness {
    int q = 0, r = 0;
    int g = 0;           // index breaking the reverse direction
    bool forward = true; // true: q fixed by r for all g, but r <|_g q != r
};

struct NoetherResult {
    bool holds = false;
    std::optional<NoetherWitness> witness;
};

/// First Noether property: for every pair (q,r),
/// [q <|_g r = q for all g] iff [r <|_g q = r for all g].
NoetherResult check_noether_first(const GFamily& fam);

struct CentralFaithfulResult {
    bool applicable = false;
    std::optional<int> central_witness;  // central g' with (Q, <|_{g'}) faithful
};

CentralFaithfulResult check_central_faithful(const GFamily& fam);

}  // namespace sd
