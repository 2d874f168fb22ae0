#pragma once

// Shared internals for triple restrictions. Each 3-element restriction is one
// of six patterns, indexed by the rank sequence of the sorted triple (a<b<c):
//   0:abc 1:acb 2:bac 3:bca 4:cab 5:cba
// The two cyclic orbits are {abc,bca,cab} and {acb,bac,cba}.

#include <array>
#include <cstdint>
#include <vector>

#include "condorcet/core.hpp"

namespace condorcet::detail {

inline constexpr unsigned kOrbitForward = 0b011001u;   // abc, bca, cab
inline constexpr unsigned kOrbitBackward = 0b100110u;  // acb, bac, cba

inline bool completes_orbit(unsigned mask) {
    return (mask & kOrbitForward) == kOrbitForward ||
           (mask & kOrbitBackward) == kOrbitBackward;
}

/// Pattern index of `order` restricted to the sorted triple {t[0],t[1],t[2]}.
inline int triple_class(const LinearOrder& order, const std::array<Alternative, 3>& triple) {
    int rank[3];
    int seen = 0;
    for (Alternative a : order.ranking()) {
        for (int i = 0; i < 3; ++i) {
            if (a == triple[i]) {
                rank[seen++] = i;
                break;
            }
        }
        if (seen == 3) break;
    }
    return rank[0] * 2 + (rank[1] > rank[2] ? 1 : 0);
}

/// Position (1..3) of triple[member] within pattern `cls`.
int pattern_position(int cls, int member);

/// All 3-element subsets of `alternatives`, each sorted, in ascending order.
std::vector<std::array<Alternative, 3>> all_triples(const AlternativeSet& alternatives);

}  // namespace condorcet::detail
