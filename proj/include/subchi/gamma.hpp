#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subchi/graph.hpp"
#include "subchi/submeasure.hpp"

namespace subchi {

using LatticePoint = std::vector<std::int64_t>;

// Parameters of the lattice graph on Z^P: mu, a partition with P blocks and
// a positive threshold epsilon. Immutable; the submeasure of every union of
// blocks is tabulated up front (P <= 20).
class GammaSpec {
public:
    static constexpr std::size_t kMaxBlocks = 20;

    GammaSpec(FiniteSubmeasure mu, Partition partition, Rational epsilon);

    const FiniteSubmeasure& mu() const { return mu_; }
    const Partition& partition() const { return partition_; }
    const Rational& epsilon() const { return epsilon_; }
    std::size_t dimension() const { return partition_.size(); }

    // mu(union of blocks in block_mask) < epsilon
    bool admissible(std::uint64_t block_mask) const { return admissible_[block_mask] != 0; }
    // Loops everywhere iff mu(X) < epsilon.
    bool loops() const { return admissible(full_mask()); }
    std::uint64_t full_mask() const { return (std::uint64_t{1} << dimension()) - 1; }

private:
    FiniteSubmeasure mu_;
    Partition partition_;
    Rational epsilon_;
    std::vector<char> admissible_;
};

// Union of the blocks A with k_A != l_A + 1.
AtomSet bad_set(const GammaSpec& spec, const LatticePoint& k, const LatticePoint& l);

// Symmetrized edge relation: mu(bad_set(k,l)) < eps or mu(bad_set(l,k)) < eps.
// For k == l this reports whether there is a loop, i.e. mu(X) < eps.
bool is_edge(const GammaSpec& spec, const LatticePoint& k, const LatticePoint& l);

struct FiniteGraph {
    enum class Provenance { Box, Quotient };
    Graph graph;
    std::vector<LatticePoint> vertices;  // lexicographic order
    Provenance provenance = Provenance::Box;
    int parameter = 0;  // B for boxes, m for quotients

    bool uncolorable() const { return graph.has_any_loop(); }
    std::string describe() const;
};

struct GraphLimits {
    std::size_t max_vertices = 4096;
};

// Induced subgraph on {0..B-1}^P.
FiniteGraph box_subgraph(const GammaSpec& spec, int box, const GraphLimits& limits = {});

// Graph on (Z/m)^P with k ~ l iff mu(U{A : k_A != l_A + 1 mod m}) < eps in
// either direction. Reduction mod m is a homomorphism from the lattice graph.
FiniteGraph quotient_graph(const GammaSpec& spec, int modulus, const GraphLimits& limits = {});

struct RefinementReport {
    bool ok = true;
    std::uint64_t pairs_checked = 0;
    std::uint64_t edges_checked = 0;
    // Coarse edge (k, l) whose diagonal image is not an edge of the fine graph.
    std::optional<std::pair<LatticePoint, LatticePoint>> counterexample;
};

// Checks on {0..B-1}^{P0} that the diagonal embedding Z^{P0} -> Z^{P1}
// (constant on the sub-blocks of each coarse block) maps edges to edges.
// Requires the same mu and epsilon and that the fine partition refines the
// coarse one.
RefinementReport diagonal_refinement_hom(const GammaSpec& coarse, const GammaSpec& fine, int box);

// The diagonal embedding used above.
LatticePoint diagonal_embed(const Partition& coarse, const Partition& fine, const LatticePoint& k);

std::string point_label(const LatticePoint& p);  // "1,0,2"
std::string to_dot(const FiniteGraph& g);
std::string to_edge_list(const FiniteGraph& g);
std::string coloring_csv(const FiniteGraph& g, const std::vector<int>& coloring);

}  // namespace subchi
