#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "condorcet/core.hpp"

namespace condorcet {

/// Roles in a never-last composition: x is absent from d1 and appended below
/// its orders, y likewise for d2.
struct CompositionRoles {
    Alternative x;
    Alternative y;
};

/// Checklist of the composition theorem's hypotheses for a factor pair.
struct HypothesisReport {
    bool e_is_condorcet;
    bool x_never_obstructs_in_d2;
    bool y_never_obstructs_in_d1;
    bool d1_maximal;
    bool d2_maximal;
    bool d1_ample;
    bool d2_ample;
    bool d1_copious;
    bool d2_copious;
};

struct Decomposition {
    CompositionRoles roles;
    Domain d1;
    Domain d2;
};

struct TheoremCounterexample {
    std::size_t index1;
    std::size_t index2;
    std::string failed_conclusion;  // "condorcet", "maximal", "ample" or "copious"
};

/// Deduce (x, y) for d1 ⋄ d2: each factor's alternatives must miss exactly
/// one alternative of the union, and the two misses must differ.
CompositionRoles infer_roles(const Domain& d1, const Domain& d2);

/// { u·x : u ∈ d1 } ∪ { v·y : v ∈ d2 }. Cardinality is |d1| + |d2|.
Domain nl_compose(const Domain& d1, const Domain& d2);

/// Every ordered pair (x, y) splitting the domain into two non-empty blocks
/// of orders ending in x resp. y, with the last element stripped. Sorted by
/// (x, y). Empty when the domain is not decomposable.
std::vector<Decomposition> nl_decompose(const Domain& domain);

/// True iff appending the order c≻b≻a to the {a,b,c}-restriction breaks the
/// Condorcet property, i.e. a blocks the swap bc→cb. Requires a Condorcet
/// domain and three distinct member alternatives.
bool is_right_obstruction(const Domain& domain, Alternative a, Alternative b, Alternative c);

/// True iff for every pair {i,j}, both i≻j≻a and j≻i≻a can be added to the
/// {i,j,a}-restriction without breaking the Condorcet property (a obstructs
/// neither orientation of any listed swap).
bool never_obstructs(const Domain& domain, Alternative a,
                     const std::vector<std::pair<Alternative, Alternative>>& pairs);

/// Union of both factors' restrictions to their common alternatives.
Domain overlap_domain(const Domain& d1, const Domain& d2);

/// Evaluate every hypothesis of the composition theorem for d1 ⋄ d2.
/// Both factors must be Condorcet.
HypothesisReport theorem_hypotheses(const Domain& d1, const Domain& d2);

/// For every pair from the two pools whose hypothesis flags all hold, check
/// the theorem's conclusions; returns the violating pairs (expected: none).
std::vector<TheoremCounterexample> verify_composition_theorem(
    const std::vector<Domain>& factor_pool_1, const std::vector<Domain>& factor_pool_2);

}  // namespace condorcet
