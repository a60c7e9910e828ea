#include "subchi/graph.hpp"

#include <algorithm>

#include "subchi/errors.hpp"

namespace subchi {

Graph::Graph(int n) {
    if (n < 0)
        throw InvalidArgument("negative vertex count");
    const auto size = static_cast<std::size_t>(n);
    adjacency_.assign(size, boost::dynamic_bitset<>(size));
    neighbors_.resize(size);
    loops_.assign(size, 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= size() || v >= size())
        throw InvalidArgument("edge endpoint out of range");
    if (u == v) {
        loops_[static_cast<std::size_t>(u)] = 1;
        return;
    }
    if (adjacent(u, v))
        return;
    adjacency_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adjacency_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    auto insert_sorted = [](std::vector<int>& list, int x) {
        list.insert(std::upper_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(neighbors_[static_cast<std::size_t>(u)], v);
    insert_sorted(neighbors_[static_cast<std::size_t>(v)], u);
    ++edge_count_;
}

bool Graph::has_any_loop() const {
    return std::any_of(loops_.begin(), loops_.end(), [](char c) { return c != 0; });
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < size(); ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    Graph g(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (has_loop(vertices[i]))
            g.add_edge(static_cast<int>(i), static_cast<int>(i));
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return g;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<std::size_t>(size()), 0);
    for (int s = 0; s < size(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<int> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (int w : neighbors(comp[head]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Graph Graph::cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

}  // namespace subchi
