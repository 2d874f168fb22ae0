#include "condorcet/graphs.hpp"

#include <sstream>
#include <vector>

#include "condorcet/text_format.hpp"

namespace condorcet {

namespace {

bool swap_adjacent(const LinearOrder& a, const LinearOrder& b) {
    const auto& ra = a.ranking();
    const auto& rb = b.ranking();
    if (ra.size() != rb.size()) return false;
    std::size_t i = 0;
    while (i < ra.size() && ra[i] == rb[i]) ++i;
    if (i + 1 >= ra.size()) return false;
    if (ra[i] != rb[i + 1] || ra[i + 1] != rb[i]) return false;
    for (std::size_t j = i + 2; j < ra.size(); ++j) {
        if (ra[j] != rb[j]) return false;
    }
    return true;
}

}  // namespace

DomainGraph build_graph(const Domain& domain) {
    DomainGraph graph;
    graph.vertices.assign(domain.orders().begin(), domain.orders().end());
    const int n = static_cast<int>(graph.vertices.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (swap_adjacent(graph.vertices[static_cast<std::size_t>(i)],
                              graph.vertices[static_cast<std::size_t>(j)])) {
                graph.edges.emplace_back(i, j);
            }
        }
    }
    return graph;
}

bool is_connected(const DomainGraph& graph) {
    const int n = static_cast<int>(graph.vertices.size());
    if (n == 0) return false;
    std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(n));
    for (const auto& [i, j] : graph.edges) {
        adjacent[static_cast<std::size_t>(i)].push_back(j);
        adjacent[static_cast<std::size_t>(j)].push_back(i);
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adjacent[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_path(const DomainGraph& graph) {
    const int n = static_cast<int>(graph.vertices.size());
    if (n == 0) return false;
    // connected + |E| = |V|-1 rules out cycles
    if (static_cast<int>(graph.edges.size()) != n - 1) return false;
    if (!is_connected(graph)) return false;
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (const auto& [i, j] : graph.edges) {
        if (++degree[static_cast<std::size_t>(i)] > 2) return false;
        if (++degree[static_cast<std::size_t>(j)] > 2) return false;
    }
    return true;
}

std::string to_dot(const DomainGraph& graph) {
    std::ostringstream out;
    out << "graph D {\n";
    for (const LinearOrder& vertex : graph.vertices) {
        std::string name = order_text(vertex);
        out << "  \"" << name << "\" [label=\"" << name << "\"];\n";
    }
    for (const auto& [i, j] : graph.edges) {
        out << "  \"" << order_text(graph.vertices[static_cast<std::size_t>(i)]) << "\" -- \""
            << order_text(graph.vertices[static_cast<std::size_t>(j)]) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace condorcet
