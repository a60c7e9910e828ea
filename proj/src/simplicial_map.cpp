#include "subchi/simplicial_map.hpp"

#include <algorithm>
#include <map>

namespace subchi {

Simplex SimplicialMap::image(const Simplex& s) const {
    Simplex out;
    out.reserve(s.size());
    for (int v : s)
        out.push_back((*this)(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SimplicialMap identity_map(std::shared_ptr<const Complex> k) {
    SimplicialMap f;
    f.assignment.resize(k->vertex_count());
    for (std::size_t v = 0; v < f.assignment.size(); ++v)
        f.assignment[v] = static_cast<int>(v);
    f.source = k;
    f.target = std::move(k);
    return f;
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
    if (f.target->vertex_count() != g.source->vertex_count())
        throw InvalidArgument("maps are not composable");
    SimplicialMap h;
    h.source = f.source;
    h.target = g.target;
    h.assignment.reserve(f.assignment.size());
    for (int v : f.assignment)
        h.assignment.push_back(g(v));
    return h;
}

std::string describe_simplex(const Complex& k, const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += k.label(s[i]);
    }
    return out + "]";
}

SimplicialReport verify_simplicial(const SimplicialMap& f) {
    if (f.assignment.size() != f.source->vertex_count())
        throw InvalidArgument("assignment does not cover the source vertices");
    SimplicialReport report;
    for (const auto& facet : f.source->facets()) {
        ++report.facets_checked;
        Simplex img = f.image(facet);
        if (!f.target->contains(img)) {
            report.ok = false;
            report.counterexample = facet;
            report.image = std::move(img);
            return report;
        }
    }
    return report;
}

EquivarianceReport verify_equivariant(const SimplicialMap& f, int p) {
    const auto& a = f.source->action();
    const auto& b = f.target->action();
    if (!a || !b)
        throw InvalidArgument("equivariance check needs actions on both complexes");
    if (a->order != p || b->order != p)
        throw InvalidArgument("action orders do not match Z/" + std::to_string(p));
    EquivarianceReport report;
    for (int v = 0; v < static_cast<int>(f.source->vertex_count()); ++v)
        for (int q = 0; q < p; ++q) {
            ++report.pairs_checked;
            if (f(a->apply(v, q)) != b->apply(f(v), q)) {
                report.ok = false;
                report.vertex = v;
                report.shift = q;
                return report;
            }
        }
    return report;
}

SubdividedMap sd_map(const SimplicialMap& f, const ComplexLimits& limits) {
    const auto check = verify_simplicial(f);
    if (!check.ok)
        throw NotSimplicial("map sends " + describe_simplex(*f.source, *check.counterexample) + " to " +
                            describe_simplex(*f.target, *check.image) + ", which is not a simplex");
    SubdividedMap out;
    out.source = barycentric(*f.source, limits);
    out.target = barycentric(*f.target, limits);
    std::map<Simplex, int> index;
    for (std::size_t i = 0; i < out.target.origin.size(); ++i)
        index.emplace(out.target.origin[i], static_cast<int>(i));
    out.map.source = std::make_shared<const Complex>(out.source.complex);
    out.map.target = std::make_shared<const Complex>(out.target.complex);
    out.map.assignment.reserve(out.source.origin.size());
    for (const auto& s : out.source.origin)
        out.map.assignment.push_back(index.at(f.image(s)));
    return out;
}

}  // namespace subchi
