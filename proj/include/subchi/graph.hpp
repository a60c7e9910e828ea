#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace subchi {

// Simple undirected graph on vertices 0..n-1 with a loop flag per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return static_cast<int>(neighbors_.size()); }
    // u == v sets the loop flag. Duplicate edges are ignored.
    void add_edge(int u, int v);

    bool adjacent(int u, int v) const { return adjacency_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
    const std::vector<int>& neighbors(int v) const { return neighbors_[static_cast<std::size_t>(v)]; }
    const boost::dynamic_bitset<>& adjacency(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    bool has_loop(int v) const { return loops_[static_cast<std::size_t>(v)] != 0; }
    bool has_any_loop() const;
    std::size_t edge_count() const { return edge_count_; }
    // Sorted (u < v) edge list.
    std::vector<std::pair<int, int>> edges() const;

    // Induced subgraph on the given vertices (in the given order).
    Graph induced(const std::vector<int>& vertices) const;
    // Connected components, each sorted, ordered by smallest vertex.
    std::vector<std::vector<int>> components() const;

    static Graph cycle(int n);
    static Graph path(int n);
    static Graph complete(int n);

private:
    std::vector<boost::dynamic_bitset<>> adjacency_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<char> loops_;
    std::size_t edge_count_ = 0;
};

}  // namespace subchi
