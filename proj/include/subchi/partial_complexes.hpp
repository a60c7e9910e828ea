#pragma once

#include <memory>
#include <vector>

#include "subchi/complex.hpp"
#include "subchi/partial_fn.hpp"
#include "subchi/simplicial_map.hpp"

namespace subchi {

bool is_prime(long long n);

// A complex whose vertices are partial functions, in canonical order, with
// the value-shift action of Z/p.
struct PartialFnComplex {
    std::shared_ptr<const Complex> complex;
    std::vector<PartialFn> vertices;
    int n = 0;
    int l = 0;
    int p = 0;

    int index_of(const PartialFn& f) const;
};

// K^{n,l}_p: chains of partial functions satisfying n - |dom f| <= l and
// having at most l component intervals.
PartialFnComplex build_K(int n, int l, int p, const ComplexLimits& limits = {});
// S^{l+1}_p: the (l+1)-fold join of p points, on singleton partial functions.
PartialFnComplex build_S(int l_plus_1, int p, const ComplexLimits& limits = {});

// The vertex assignment of the lemma map sd(K^{n,l}_p) -> K^{n+1,l}_p. A
// nontrivial chain goes to its largest element; a single f goes to
// f u {(n+1, q)} with q the value on the last component interval of f.
PartialFn map_s(std::vector<PartialFn> chain, int n, int l, int p);

struct LemmaMap {
    PartialFnComplex domain;  // K^{n,l}_p
    Subdivision sd;           // sd(K^{n,l}_p)
    PartialFnComplex codomain;
    SimplicialMap map;        // sd(K^{n,l}_p) -> K^{n+1,l}_p
};
LemmaMap lemma_map(int n, int l, int p, const ComplexLimits& limits = {});

// The identity on vertices S^{l+1}_p -> K^{l+1,l+1}_p.
SimplicialMap inclusion_map(int l, int p, const ComplexLimits& limits = {});

// sd^{l_n}(S^{l+1}_p) -> K^{l+1+l_n, l+1}_p, built stage by stage: each new
// vertex (a simplex of the previous stage) goes to map_s of the images of its
// vertices. Throws NotSimplicial when some image is not a chain.
SimplicialMap compose_tower(int l, int p, int l_n, const ComplexLimits& limits = {});

}  // namespace subchi
