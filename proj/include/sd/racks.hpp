#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sd/common.hpp"
#include "sd/groups.hpp"

namespace sd {

/// Finite rack as an operation table T[p][q] = p <| q.
/// Rows index the left argument, columns the right argument.
struct FiniteRack {
    int n = 0;
    std::vector<std::vector<int>> T;

    int op(int p, int q) const { return T[p][q]; }
    /// Right translation R_q as a permutation of the carrier.
    std::vector<int> column(int q) const;
};

struct RackCheck {
    bool is_rack = false;
    bool is_quandle = false;
    std::vector<Violation> witnesses;
};

/// Checks both rack axioms and idempotency on a raw table.
/// Throws InputError if the table is not square or has out-of-range entries.
RackCheck verify_rack(const std::vector<std::vector<int>>& T);
RackCheck verify_rack(const FiniteRack& r);

FiniteRack trivial_rack(int n);

/// Conjugation quandle p <| q = q^-1 p q on one conjugacy class, elements
/// relabelled by ascending group index.
FiniteRack conjugation_quandle(const FiniteGroup& g, const std::vector<int>& conj_class);

/// Core quandle p <| q = q p^-1 q on the whole group.
FiniteRack core_quandle(const FiniteGroup& g);

/// Alexander quandle p <| q = t*p + (1-t)*q on Z_m; t must be a unit mod m.
FiniteRack alexander_quandle(int modulus, int t);

/// Generalized Alexander quandle p <| q = f(p q^-1) q for f in Aut(G),
/// given as an explicit permutation (validated).
FiniteRack generalized_alexander_quandle(const FiniteGroup& g, const std::vector<int>& automorphism);

struct FaithfulResult {
    bool faithful = false;
    std::optional<std::pair<int, int>> collision;  // two elements with equal columns
};

/// Faithful iff q |-> R_q is injective.
FaithfulResult is_faithful(const FiniteRack& r);

/// Least N >= 1 with R_q^N = id for all q (lcm of the column permutation
/// orders). Throws InputError past the documented cap of 10^6, which only a
/// corrupted table can reach at supported sizes.
std::uint64_t translation_order(const FiniteRack& r);

/// Order of one permutation (lcm of its cycle lengths).
std::uint64_t permutation_order(const std::vector<int>& perm);

struct RackHom {
    std::vector<int> map;  // map[p] in target
    const FiniteRack* source = nullptr;
    const FiniteRack* target = nullptr;
};

struct HomCheck {
    bool valid = false;
    std::optional<std::pair<int, int>> witness;  // pair (p,q) breaking the equation
};

HomCheck check_rack_hom(const RackHom& h);

}  // namespace sd
