#pragma once

#include <vector>

#include "sd/common.hpp"

namespace sd {

/// Finite group as a Cayley table over dense indices 0..n-1.
///
/// Canonical numberings: cyclic groups use residues, symmetric groups use the
/// lexicographic rank of the permutation. Exhaustive verification loops are
/// O(n^3); the documented soft limit is n <= 64.
struct FiniteGroup {
    int n = 0;
    std::vector<std::vector<int>> table;  // table[a][b] = a*b
    int e = 0;
    std::vector<int> inv;

    int mul(int a, int b) const { return table[a][b]; }
    int inverse(int a) const { return inv[a]; }
    /// b^-1 * a * b
    int conj(int a, int b) const { return mul(mul(inv[b], a), b); }
};

FiniteGroup cyclic_group(int n);

/// Symmetric group on {0..k-1}; element i is the i-th permutation in
/// lexicographic order, product a*b acts as "apply b first, then a".
FiniteGroup symmetric_group(int k);

/// Validates the raw table (group axioms) and fills in identity and inverses.
/// Throws InputError naming the first failing axiom if it is not a group.
FiniteGroup group_from_table(const std::vector<std::vector<int>>& table);

/// Checks every group axiom and reports all violations with witness triples.
ValidationReport verify_group_table(const std::vector<std::vector<int>>& table);
ValidationReport verify_group(const FiniteGroup& g);

struct GroupQueries {
    std::vector<int> center;
    std::vector<std::vector<int>> conjugacy_classes;  // sorted, ordered by min element
    bool is_abelian = false;
};

GroupQueries group_queries(const FiniteGroup& g);

/// Action of `group` on `target` by automorphisms, one permutation per group
/// element. Composition convention is the right action rho_{gh} = rho_h ∘ rho_g,
/// matching the right-handed family axiom (q <|_g p) <|_h p = q <|_{gh} p.
struct GroupAction {
    FiniteGroup group;
    FiniteGroup target;
    std::vector<std::vector<int>> maps;  // maps[g][x] = rho_g(x)

    int apply(int g, int x) const { return maps[g][x]; }
};

/// rho_g(x) = g^-1 x g  (right conjugation action of a group on itself).
GroupAction conjugation_action(const FiniteGroup& g);

/// rho_g = id for all g.
GroupAction trivial_action(const FiniteGroup& g, const FiniteGroup& target);

/// Checks automorphism property, identity map at e, and the composition
/// convention; all failures reported with witnesses.
ValidationReport verify_action(const GroupAction& a);

}  // namespace sd
