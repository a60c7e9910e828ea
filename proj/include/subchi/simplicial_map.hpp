#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subchi/complex.hpp"
#include "subchi/errors.hpp"

namespace subchi {

class NotSimplicial : public Error {
public:
    explicit NotSimplicial(const std::string& what) : Error("not-simplicial", what) {}
};

// Vertex assignment between two complexes. `assignment[v]` is the image of
// source vertex v.
struct SimplicialMap {
    std::shared_ptr<const Complex> source;
    std::shared_ptr<const Complex> target;
    std::vector<int> assignment;

    int operator()(int v) const { return assignment.at(static_cast<std::size_t>(v)); }
    // Sorted, duplicate-free image of a simplex.
    Simplex image(const Simplex& s) const;
};

SimplicialMap identity_map(std::shared_ptr<const Complex> k);
// g after f.
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);

struct SimplicialReport {
    bool ok = true;
    std::size_t facets_checked = 0;
    std::optional<Simplex> counterexample;  // source facet
    std::optional<Simplex> image;           // its image, not a simplex of the target
};

// Checks every source facet.
SimplicialReport verify_simplicial(const SimplicialMap& f);

struct EquivarianceReport {
    bool ok = true;
    std::size_t pairs_checked = 0;
    std::optional<int> vertex;
    std::optional<int> shift;
};

// f(q.v) == q.f(v) for all vertices v and q in Z/p. Both complexes need
// actions of order p.
EquivarianceReport verify_equivariant(const SimplicialMap& f, int p);

// Induced map sd(source) -> sd(target). Throws NotSimplicial unless f is.
struct SubdividedMap {
    SimplicialMap map;
    Subdivision source;
    Subdivision target;
};
SubdividedMap sd_map(const SimplicialMap& f, const ComplexLimits& limits = {});

std::string describe_simplex(const Complex& k, const Simplex& s);

}  // namespace subchi
