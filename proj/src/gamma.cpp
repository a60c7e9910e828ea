#include "subchi/gamma.hpp"

#include <sstream>

#include "subchi/errors.hpp"
#include "subchi/submeasure_io.hpp"

namespace subchi {

GammaSpec::GammaSpec(FiniteSubmeasure mu, Partition partition, Rational epsilon)
    : mu_(std::move(mu)), partition_(std::move(partition)), epsilon_(std::move(epsilon)) {
    if (epsilon_ <= 0)
        throw InvalidArgument("epsilon must be positive");
    if (partition_.universe() != static_cast<std::size_t>(mu_.atom_count()))
        throw InvalidArgument("partition ground set does not match the submeasure");
    if (partition_.size() > kMaxBlocks)
        throw ResourceLimit("lattice graphs support at most " + std::to_string(kMaxBlocks) + " blocks");
    const std::size_t size = std::size_t{1} << partition_.size();
    admissible_.resize(size);
    for (std::uint64_t m = 0; m < size; ++m)
        admissible_[m] = mu_.eval(partition_.union_of(m)) < epsilon_;
}

namespace {

void check_lengths(const GammaSpec& spec, const LatticePoint& k, const LatticePoint& l) {
    if (k.size() != spec.dimension() || l.size() != spec.dimension())
        throw InvalidArgument("lattice points must have " + std::to_string(spec.dimension()) + " coordinates");
}

std::uint64_t bad_mask(const LatticePoint& k, const LatticePoint& l) {
    std::uint64_t mask = 0;
    for (std::size_t a = 0; a < k.size(); ++a)
        if (k[a] != l[a] + 1)
            mask |= std::uint64_t{1} << a;
    return mask;
}

std::uint64_t bad_mask_mod(const LatticePoint& k, const LatticePoint& l, std::int64_t m) {
    std::uint64_t mask = 0;
    for (std::size_t a = 0; a < k.size(); ++a) {
        const std::int64_t diff = ((k[a] - l[a] - 1) % m + m) % m;
        if (diff != 0)
            mask |= std::uint64_t{1} << a;
    }
    return mask;
}

std::vector<LatticePoint> lattice_box(std::size_t dimension, int side, const GraphLimits& limits) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < dimension; ++i) {
        count *= static_cast<std::size_t>(side);
        if (count > limits.max_vertices)
            throw ResourceLimit(std::to_string(side) + "^" + std::to_string(dimension) + " vertices exceed the limit of " +
                                std::to_string(limits.max_vertices));
    }
    std::vector<LatticePoint> points;
    points.reserve(count);
    LatticePoint p(dimension, 0);
    for (std::size_t i = 0; i < count; ++i) {
        points.push_back(p);
        for (std::size_t a = dimension; a-- > 0;) {
            if (++p[a] < side)
                break;
            p[a] = 0;
        }
    }
    return points;
}

template <typename BadMask>
FiniteGraph build(const GammaSpec& spec, std::vector<LatticePoint> points, BadMask bad) {
    FiniteGraph g;
    g.graph = Graph(static_cast<int>(points.size()));
    if (spec.loops())
        for (int v = 0; v < g.graph.size(); ++v)
            g.graph.add_edge(v, v);
    for (std::size_t u = 0; u < points.size(); ++u)
        for (std::size_t v = u + 1; v < points.size(); ++v)
            if (spec.admissible(bad(points[u], points[v])) || spec.admissible(bad(points[v], points[u])))
                g.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
    g.vertices = std::move(points);
    return g;
}

}  // namespace

AtomSet bad_set(const GammaSpec& spec, const LatticePoint& k, const LatticePoint& l) {
    check_lengths(spec, k, l);
    return spec.partition().union_of(bad_mask(k, l));
}

bool is_edge(const GammaSpec& spec, const LatticePoint& k, const LatticePoint& l) {
    check_lengths(spec, k, l);
    return spec.admissible(bad_mask(k, l)) || spec.admissible(bad_mask(l, k));
}

std::string FiniteGraph::describe() const {
    return provenance == Provenance::Box ? "box(" + std::to_string(parameter) + ")"
                                         : "quotient(" + std::to_string(parameter) + ")";
}

FiniteGraph box_subgraph(const GammaSpec& spec, int box, const GraphLimits& limits) {
    if (box < 2)
        throw InvalidArgument("box side must be at least 2");
    FiniteGraph g = build(spec, lattice_box(spec.dimension(), box, limits),
                          [](const LatticePoint& k, const LatticePoint& l) { return bad_mask(k, l); });
    g.provenance = FiniteGraph::Provenance::Box;
    g.parameter = box;
    return g;
}

FiniteGraph quotient_graph(const GammaSpec& spec, int modulus, const GraphLimits& limits) {
    if (modulus < 2)
        throw InvalidArgument("quotient modulus must be at least 2");
    const std::int64_t m = modulus;
    FiniteGraph g = build(spec, lattice_box(spec.dimension(), modulus, limits),
                          [m](const LatticePoint& k, const LatticePoint& l) { return bad_mask_mod(k, l, m); });
    g.provenance = FiniteGraph::Provenance::Quotient;
    g.parameter = modulus;
    return g;
}

LatticePoint diagonal_embed(const Partition& coarse, const Partition& fine, const LatticePoint& k) {
    if (k.size() != coarse.size())
        throw InvalidArgument("point does not match the coarse partition");
    LatticePoint out(fine.size());
    for (std::size_t j = 0; j < fine.size(); ++j)
        out[j] = k[coarse.block_of(fine.block(j).atoms().front())];
    return out;
}

RefinementReport diagonal_refinement_hom(const GammaSpec& coarse, const GammaSpec& fine, int box) {
    if (coarse.epsilon() != fine.epsilon())
        throw InvalidArgument("refinement check needs the same epsilon");
    if (submeasure_to_json(coarse.mu()) != submeasure_to_json(fine.mu()))
        throw InvalidArgument("refinement check needs the same submeasure");
    if (!fine.partition().refines(coarse.partition()))
        throw InvalidArgument("fine partition " + fine.partition().to_string() + " does not refine " +
                              coarse.partition().to_string());
    if (box < 2)
        throw InvalidArgument("box side must be at least 2");

    const auto points = lattice_box(coarse.dimension(), box, GraphLimits{1u << 20});
    std::vector<LatticePoint> images;
    images.reserve(points.size());
    for (const auto& p : points)
        images.push_back(diagonal_embed(coarse.partition(), fine.partition(), p));

    RefinementReport report;
    for (std::size_t u = 0; u < points.size(); ++u) {
        for (std::size_t v = u; v < points.size(); ++v) {
            ++report.pairs_checked;
            if (!is_edge(coarse, points[u], points[v]))
                continue;
            ++report.edges_checked;
            if (!is_edge(fine, images[u], images[v])) {
                report.ok = false;
                report.counterexample = std::make_pair(points[u], points[v]);
                return report;
            }
        }
    }
    return report;
}

std::string point_label(const LatticePoint& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

std::string to_dot(const FiniteGraph& g) {
    std::ostringstream os;
    os << "graph gamma {\n";
    os << "  // " << g.describe() << ", " << g.graph.size() << " vertices, " << g.graph.edge_count() << " edges\n";
    for (int v = 0; v < g.graph.size(); ++v)
        os << "  \"" << point_label(g.vertices[static_cast<std::size_t>(v)]) << "\";\n";
    for (int v = 0; v < g.graph.size(); ++v)
        if (g.graph.has_loop(v))
            os << "  \"" << point_label(g.vertices[static_cast<std::size_t>(v)]) << "\" -- \""
               << point_label(g.vertices[static_cast<std::size_t>(v)]) << "\";\n";
    for (const auto& [u, v] : g.graph.edges())
        os << "  \"" << point_label(g.vertices[static_cast<std::size_t>(u)]) << "\" -- \""
           << point_label(g.vertices[static_cast<std::size_t>(v)]) << "\";\n";
    os << "}\n";
    return os.str();
}

std::string to_edge_list(const FiniteGraph& g) {
    std::ostringstream os;
    for (int v = 0; v < g.graph.size(); ++v)
        if (g.graph.has_loop(v))
            os << point_label(g.vertices[static_cast<std::size_t>(v)]) << ' '
               << point_label(g.vertices[static_cast<std::size_t>(v)]) << '\n';
    for (const auto& [u, v] : g.graph.edges())
        os << point_label(g.vertices[static_cast<std::size_t>(u)]) << ' '
           << point_label(g.vertices[static_cast<std::size_t>(v)]) << '\n';
    return os.str();
}

std::string coloring_csv(const FiniteGraph& g, const std::vector<int>& coloring) {
    std::ostringstream os;
    os << "vertex,color\n";
    for (std::size_t v = 0; v < coloring.size(); ++v)
        os << '"' << point_label(g.vertices[v]) << "\"," << coloring[v] << '\n';
    return os.str();
}

}  // namespace subchi
