#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "subchi/resource.hpp"

namespace subchi {

// Sorted list of vertex indices.
using Simplex = std::vector<int>;

// Z/p acting on vertices through the permutation `generator` (the action of
// 1); q acts as generator^q.
struct GroupAction {
    int order = 1;
    std::vector<int> generator;

    int apply(int vertex, int q) const;
};

struct ComplexLimits {
    std::size_t max_vertices = default_resource_cap();
    std::size_t max_simplices = 5 * default_resource_cap();
};

// Finite abstract simplicial complex stored by its facets (maximal simplices)
// over vertices 0..V-1, each with a canonical string payload. The complex
// with no facets is the void complex; the complex {∅} has one empty facet.
// Immutable after construction.
class Complex {
public:
    Complex() = default;
    // Facets are sorted and reduced to the maximal ones.
    Complex(std::vector<std::string> labels, std::vector<Simplex> facets,
            std::optional<GroupAction> action = std::nullopt);

    // Caller guarantees facets are sorted, distinct and maximal.
    static Complex from_maximal_facets(std::vector<std::string> labels, std::vector<Simplex> facets,
                                       std::optional<GroupAction> action = std::nullopt);

    static Complex void_complex() { return {}; }
    static Complex empty_simplex() { return from_maximal_facets({}, {Simplex{}}); }
    // n isolated vertices labelled by `labels`.
    static Complex points(std::vector<std::string> labels);

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    std::optional<int> find_vertex(std::string_view label) const;
    const std::vector<Simplex>& facets() const { return facets_; }
    const std::optional<GroupAction>& action() const { return action_; }
    bool is_void() const { return facets_.empty(); }
    // -1 for {∅} and for the void complex.
    int dimension() const;

    // Is `s` (sorted) a simplex?
    bool contains(const Simplex& s) const;
    bool is_facet(const Simplex& s) const;

    // All nonempty simplices grouped by dimension (index d = d-simplices),
    // each group sorted lexicographically. Throws ResourceLimit past the cap.
    std::vector<std::vector<Simplex>> simplices_by_dimension(std::size_t cap = 5 * default_resource_cap()) const;
    std::size_t face_count_upper_bound() const;

    // Action sanity: permutation, order divides p, facets go to facets.
    bool action_is_valid() const;
    Complex with_action(GroupAction action) const;
    Complex without_action() const;

private:
    void index();

    std::vector<std::string> labels_;
    std::vector<Simplex> facets_;
    std::optional<GroupAction> action_;
    std::unordered_map<std::string, int> label_index_;
    std::vector<std::vector<int>> incidence_;  // vertex -> facets containing it
};

// Join with vertices of the left operand first. With `tag`, labels become
// "a.<label>" and "b.<label>"; without it, shared labels are an error. When
// both operands carry actions of the same order, the product action is kept.
Complex join(const Complex& left, const Complex& right, bool tag = true);

// Barycentric subdivision: vertices are the nonempty simplices of the input
// ordered by (dimension, lexicographic), labelled "{a|b|...}"; facets are full
// flags inside the input facets. The action is transported.
struct Subdivision {
    Complex complex;
    std::vector<Simplex> origin;  // vertex -> simplex of the subdivided complex
};
Subdivision barycentric(const Complex& k, const ComplexLimits& limits = {});

// Reduced Euler characteristic from the face counts (counting the empty simplex).
long long reduced_euler_characteristic(const Complex& k);

// Text facet list: a header comment, then one facet per line as
// space-separated vertex labels; "-" is the empty facet.
std::string complex_to_text(const Complex& k);
// Vertices are ordered as in the file's "# vertices" line when present,
// else by first appearance. With p, the Z/p value-shift action is recovered
// from the labels (partial functions, "{..|..}" chains, "a."/"b." tags).
Complex complex_from_text(std::string_view text, std::optional<int> p = std::nullopt);

// Value shift on canonical labels.
std::string shift_label(std::string_view label, int q, int p);

}  // namespace subchi
