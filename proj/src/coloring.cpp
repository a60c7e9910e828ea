#include "subchi/coloring.hpp"

#include <algorithm>

#include "subchi/errors.hpp"

namespace subchi {

std::string to_string(ChromaticResult::Status status) {
    switch (status) {
    case ChromaticResult::Status::Exact: return "exact";
    case ChromaticResult::Status::Bounds: return "bounds";
    case ChromaticResult::Status::Uncolorable: return "uncolorable";
    }
    return "unknown";
}

bool is_proper_coloring(const Graph& g, std::span<const int> coloring) {
    if (coloring.size() != static_cast<std::size_t>(g.size()))
        return false;
    for (int v = 0; v < g.size(); ++v) {
        if (g.has_loop(v) || coloring[static_cast<std::size_t>(v)] < 0)
            return false;
        for (int w : g.neighbors(v))
            if (coloring[static_cast<std::size_t>(v)] == coloring[static_cast<std::size_t>(w)])
                return false;
    }
    return true;
}

int color_count(std::span<const int> coloring) {
    int top = -1;
    for (int c : coloring)
        top = std::max(top, c);
    return top + 1;
}

// ---------------------------------------------------------------------------
// Maximum clique: branch and bound with a greedy-coloring bound.

namespace {

using Bits = boost::dynamic_bitset<>;

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g) {}

    std::vector<int> run() {
        Bits candidates(static_cast<std::size_t>(g_.size()));
        candidates.set();
        std::vector<int> current;
        expand(current, candidates);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(std::vector<int>& current, Bits candidates) {
        // Greedy color classes over the candidates give an upper bound.
        std::vector<int> order;
        std::vector<int> bound;
        {
            Bits uncolored = candidates;
            int color = 0;
            while (uncolored.any()) {
                ++color;
                Bits q = uncolored;
                for (auto v = q.find_first(); v != Bits::npos; v = q.find_next(v)) {
                    q -= g_.adjacency(static_cast<int>(v));
                    uncolored.reset(v);
                    order.push_back(static_cast<int>(v));
                    bound.push_back(color);
                    q.reset(v);
                }
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + static_cast<std::size_t>(bound[i]) <= best_.size())
                return;
            const int v = order[i];
            current.push_back(v);
            Bits next = candidates & g_.adjacency(v);
            if (next.none()) {
                if (current.size() > best_.size())
                    best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
            candidates.reset(static_cast<std::size_t>(v));
        }
    }

    const Graph& g_;
    std::vector<int> best_;
};

}  // namespace

std::vector<int> max_clique(const Graph& g) {
    if (g.size() == 0)
        return {};
    return CliqueSearch(g).run();
}

// ---------------------------------------------------------------------------
// DSATUR

namespace {

// Saturation bookkeeping shared by the greedy and the exact search.
class Saturation {
public:
    Saturation(const Graph& g, int max_colors)
        : g_(g),
          color_(static_cast<std::size_t>(g.size()), -1),
          counts_(static_cast<std::size_t>(g.size()), std::vector<int>(static_cast<std::size_t>(max_colors), 0)),
          saturation_(static_cast<std::size_t>(g.size()), 0) {}

    int color(int v) const { return color_[static_cast<std::size_t>(v)]; }
    bool available(int v, int c) const { return counts_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] == 0; }

    void assign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        for (int w : g_.neighbors(v))
            if (counts_[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)]++ == 0)
                ++saturation_[static_cast<std::size_t>(w)];
    }

    void unassign(int v) {
        const int c = color_[static_cast<std::size_t>(v)];
        color_[static_cast<std::size_t>(v)] = -1;
        for (int w : g_.neighbors(v))
            if (--counts_[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)] == 0)
                --saturation_[static_cast<std::size_t>(w)];
    }

    // Uncolored vertex of maximum saturation; the smallest index wins ties.
    int pick() const {
        int best = -1;
        for (int v = 0; v < g_.size(); ++v) {
            if (color_[static_cast<std::size_t>(v)] >= 0)
                continue;
            if (best < 0 || saturation_[static_cast<std::size_t>(v)] > saturation_[static_cast<std::size_t>(best)])
                best = v;
        }
        return best;
    }

    const std::vector<int>& colors() const { return color_; }

private:
    const Graph& g_;
    std::vector<int> color_;
    std::vector<std::vector<int>> counts_;
    std::vector<int> saturation_;
};

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, std::vector<int> clique, std::vector<int> incumbent, std::uint64_t node_limit)
        : g_(g),
          state_(g, std::max(1, color_count(incumbent))),
          clique_(std::move(clique)),
          best_(std::move(incumbent)),
          best_count_(color_count(best_)),
          node_limit_(node_limit) {}

    std::vector<int> run() {
        const int lower = static_cast<int>(clique_.size());
        if (best_count_ <= lower)
            return best_;
        for (std::size_t i = 0; i < clique_.size(); ++i)
            state_.assign(clique_[i], static_cast<int>(i));
        search(static_cast<int>(clique_.size()), static_cast<int>(clique_.size()), lower);
        return best_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    // Returns true when the clique bound is met and the search can stop.
    bool search(int colored, int used, int lower) {
        if (++nodes_ > node_limit_)
            throw ResourceLimit("chromatic search exceeded " + std::to_string(node_limit_) + " nodes");
        if (colored == g_.size()) {
            best_ = state_.colors();
            best_count_ = used;
            return best_count_ <= lower;
        }
        const int v = state_.pick();
        for (int c = 0; c <= used && c < best_count_ - 1; ++c) {
            if (!state_.available(v, c))
                continue;
            state_.assign(v, c);
            const bool done = search(colored + 1, std::max(used, c + 1), lower);
            state_.unassign(v);
            if (done)
                return true;
            if (used >= best_count_)
                break;
        }
        return false;
    }

    const Graph& g_;
    Saturation state_;
    std::vector<int> clique_;
    std::vector<int> best_;
    int best_count_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
};

// Lexicographically least proper coloring with at most k colors, vertices
// taken in index order, with forward checking.
class LexLeastColoring {
public:
    LexLeastColoring(const Graph& g, int k, std::uint64_t node_limit)
        : g_(g), k_(k), state_(g, k), node_limit_(node_limit),
          options_(static_cast<std::size_t>(g.size()), k) {}

    std::vector<int> run() {
        if (!extend(0, 0))
            throw InvalidArgument("no proper coloring with " + std::to_string(k_) + " colors");
        return state_.colors();
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool extend(int v, int used) {
        if (++nodes_ > node_limit_)
            throw ResourceLimit("canonical coloring search exceeded " + std::to_string(node_limit_) + " nodes");
        if (v == g_.size())
            return true;
        // A least coloring never opens color c+1 before c is used.
        const int top = std::min(k_ - 1, used);
        for (int c = 0; c <= top; ++c) {
            if (!state_.available(v, c))
                continue;
            std::vector<int> touched;
            bool wiped = false;
            for (int w : g_.neighbors(v)) {
                if (w <= v || !state_.available(w, c))
                    continue;
                touched.push_back(w);
                if (--options_[static_cast<std::size_t>(w)] == 0)
                    wiped = true;
            }
            state_.assign(v, c);
            if (!wiped && extend(v + 1, std::max(used, c + 1)))
                return true;
            state_.unassign(v);
            for (int w : touched)
                ++options_[static_cast<std::size_t>(w)];
        }
        return false;
    }

    const Graph& g_;
    int k_;
    Saturation state_;
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    std::vector<int> options_;
};

}  // namespace

std::vector<int> dsatur_coloring(const Graph& g) {
    Saturation state(g, std::max(1, g.size()));
    for (int step = 0; step < g.size(); ++step) {
        const int v = state.pick();
        int c = 0;
        while (!state.available(v, c))
            ++c;
        state.assign(v, c);
    }
    return state.colors();
}

ChromaticResult chromatic_number(const Graph& g, ChromaticMode mode, const SolverLimits& limits) {
    ChromaticResult result;
    if (g.has_any_loop()) {
        result.status = ChromaticResult::Status::Uncolorable;
        result.lower = result.upper = -1;
        return result;
    }
    if (mode == ChromaticMode::Bounds) {
        result.status = ChromaticResult::Status::Bounds;
        result.lower = static_cast<int>(max_clique(g).size());
        result.coloring = dsatur_coloring(g);
        result.upper = color_count(result.coloring);
        return result;
    }

    result.status = ChromaticResult::Status::Exact;
    result.coloring.assign(static_cast<std::size_t>(g.size()), 0);
    int chi = 0;
    for (const auto& comp : g.components()) {
        const Graph sub = g.induced(comp);
        const auto clique = max_clique(sub);
        DsaturSearch search(sub, clique, dsatur_coloring(sub), limits.node_limit);
        const auto optimal = search.run();
        result.nodes += search.nodes();
        chi = std::max(chi, color_count(optimal));
    }
    // Components are independent, so the least coloring is assembled per component.
    for (const auto& comp : g.components()) {
        const Graph sub = g.induced(comp);
        LexLeastColoring least(sub, chi, limits.node_limit);
        const auto colors = least.run();
        result.nodes += least.nodes();
        for (std::size_t i = 0; i < comp.size(); ++i)
            result.coloring[static_cast<std::size_t>(comp[i])] = colors[i];
    }
    result.lower = result.upper = chi;
    return result;
}

}  // namespace subchi
