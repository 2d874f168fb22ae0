#pragma once

#include <string>
#include <utility>
#include <vector>

#include "condorcet/core.hpp"

namespace condorcet {

/// One equivalence class of domains under relabeling (+ flip for the default
/// classification), with the labeled input domains that landed in it.
struct DomainClass {
    std::string canonical_key;
    std::vector<Domain> representatives;
    bool decomposable;  // some representative has a non-empty nl_decompose
};

/// All labeled maximal Condorcet domains on {1,…,n}, sorted by their
/// rendered text. Tries every assignment of one never-condition per triple
/// (9^C(n,3) candidates) and keeps the maximal results. n = 5 is allowed
/// only with allow_large and can take a long time.
std::vector<Domain> enumerate_maximal(int n, bool allow_large = false);

/// Independent cross-check of enumerate_maximal: depth-first search over
/// subsets of all n! orders, pruning as soon as a cyclic triple completes.
std::vector<Domain> enumerate_maximal_backtracking(int n, bool allow_large = false);

/// Lexicographically minimal rendered form over all relabelings onto
/// {1,…,k} and the flip, joined with commas. Equal keys ⟺ same class under
/// isomorphism + flip. At most 7 alternatives.
std::string canonical_form(const Domain& domain);

/// As canonical_form but without the flip: isomorphism classes only.
std::string canonical_form_iso(const Domain& domain);

/// Group by canonical_form (isomorphism + flip); classes sorted by key.
std::vector<DomainClass> classify(const std::vector<Domain>& domains);

/// Group by canonical_form_iso (isomorphism only).
std::vector<DomainClass> classify_iso(const std::vector<Domain>& domains);

/// How many classes contain a decomposable domain, and their keys. A class
/// counts when any representative or its flip has a non-empty nl_decompose
/// (composition appends at the bottom, so flipping can matter).
std::pair<int, std::vector<std::string>> decomposability_census(
    const std::vector<DomainClass>& classes);

}  // namespace condorcet
