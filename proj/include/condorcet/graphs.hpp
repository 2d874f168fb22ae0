#pragma once

#include <string>
#include <utility>
#include <vector>

#include "condorcet/core.hpp"

namespace condorcet {

/// Swap-adjacency graph of a domain: vertices are the orders (sorted),
/// edges join orders differing by exactly one adjacent transposition.
/// Edges hold index pairs (i, j) into `vertices` with i < j, sorted.
struct DomainGraph {
    std::vector<LinearOrder> vertices;
    std::vector<std::pair<int, int>> edges;
};

DomainGraph build_graph(const Domain& domain);

bool is_connected(const DomainGraph& graph);

/// Connected, acyclic, every degree at most 2.
bool is_path(const DomainGraph& graph);

/// Deterministic DOT text: one node line per vertex, one line per edge,
/// both in sorted sequence. Byte-identical across runs.
std::string to_dot(const DomainGraph& graph);

}  // namespace condorcet
