#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "subchi/coloring.hpp"
#include "subchi/errors.hpp"
#include "subchi/gamma.hpp"

using namespace subchi;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

GammaSpec halves(Rational eps) {
    return GammaSpec(FiniteSubmeasure::uniform(4, q(1, 4)), Partition::from_lists(4, {{1, 2}, {3, 4}}), eps);
}

GammaSpec single_block(Rational eps) {
    return GammaSpec(FiniteSubmeasure::uniform(2, q(1, 2)), Partition::whole(2), eps);
}

// Edge set as (label, label) pairs, for comparisons independent of indices.
std::set<std::pair<std::string, std::string>> labelled_edges(const FiniteGraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, v] : g.graph.edges())
        out.emplace(point_label(g.vertices[static_cast<std::size_t>(u)]),
                    point_label(g.vertices[static_cast<std::size_t>(v)]));
    return out;
}

// Specs with at most 3 blocks over uniform and capped measures.
std::vector<GammaSpec> spec_grid() {
    std::vector<GammaSpec> out;
    const std::vector<FiniteSubmeasure> mus = {FiniteSubmeasure::uniform(6, q(1, 6)),
                                               FiniteSubmeasure::capped_uniform(6, q(1, 2), q(1, 6))};
    const std::vector<Partition> parts = {Partition::whole(6), Partition::contiguous(6, 2),
                                          Partition::from_lists(6, {{1, 2, 3, 4}, {5, 6}}),
                                          Partition::contiguous(6, 3)};
    for (const auto& mu : mus)
        for (const auto& p : parts)
            for (auto eps : {q(1, 6), q(1, 3), q(1, 2), q(2, 3)})
                out.emplace_back(mu, p, eps);
    return out;
}

}  // namespace

TEST(BadSet, Examples) {
    auto spec = halves(q(3, 10));
    EXPECT_TRUE(bad_set(spec, {5, 7}, {4, 6}).empty());
    EXPECT_EQ(bad_set(spec, {5, 7}, {5, 7}), AtomSet::full(4));
    EXPECT_EQ(bad_set(spec, {5, 7}, {4, 7}), AtomSet(4, {3, 4}));
    EXPECT_THROW(bad_set(spec, {1}, {1, 2}), InvalidArgument);
}

TEST(IsEdge, Examples) {
    auto spec = halves(q(3, 10));
    EXPECT_TRUE(is_edge(spec, {5, 7}, {4, 6}));
    EXPECT_FALSE(is_edge(spec, {5, 7}, {4, 7}));
    auto loose = GammaSpec(FiniteSubmeasure::uniform(1, q(1)), Partition::whole(1), q(2));
    EXPECT_TRUE(is_edge(loose, {3}, {9}));
    EXPECT_TRUE(loose.loops());
}

TEST(IsEdge, SymmetricAndTranslationInvariant) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coord(-6, 6);
    for (const auto& spec : spec_grid()) {
        const auto dim = spec.dimension();
        for (int t = 0; t < 40; ++t) {
            LatticePoint k(dim), l(dim), c(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                l[i] = coord(rng);
                k[i] = l[i] + (rng() % 3 == 0 ? 1 : coord(rng) % 2);
                c[i] = coord(rng);
            }
            EXPECT_EQ(is_edge(spec, k, l), is_edge(spec, l, k));
            LatticePoint kc = k, lc = l;
            for (std::size_t i = 0; i < dim; ++i) {
                kc[i] += c[i];
                lc[i] += c[i];
            }
            EXPECT_EQ(is_edge(spec, k, l), is_edge(spec, kc, lc));
        }
    }
}

TEST(Box, SingleBlockIsPath) {
    auto g = box_subgraph(single_block(q(1, 2)), 4);
    ASSERT_EQ(g.graph.size(), 4);
    EXPECT_EQ(g.graph.edges(), Graph::path(4).edges());
    EXPECT_FALSE(g.uncolorable());
}

TEST(Box, TwoHalvesDiagonalOnly) {
    auto g = box_subgraph(halves(q(3, 10)), 2);
    EXPECT_EQ(labelled_edges(g), (std::set<std::pair<std::string, std::string>>{{"0,0", "1,1"}}));
}

TEST(Box, LargeEpsIsCompleteWithLoops) {
    auto g = box_subgraph(single_block(q(2)), 3);
    EXPECT_TRUE(g.uncolorable());
    EXPECT_EQ(g.graph.edge_count(), 3u);
    EXPECT_EQ(chromatic_number(g.graph).status, ChromaticResult::Status::Uncolorable);
}

TEST(Box, SizeGuard) {
    EXPECT_THROW(box_subgraph(halves(q(1, 2)), 100, GraphLimits{1000}), ResourceLimit);
    EXPECT_THROW(box_subgraph(halves(q(1, 2)), 1), InvalidArgument);
}

TEST(Quotient, SingleBlock) {
    auto five = quotient_graph(single_block(q(1, 2)), 5);
    EXPECT_EQ(five.graph.edges(), Graph::cycle(5).edges());
    auto two = quotient_graph(single_block(q(1, 2)), 2);
    EXPECT_EQ(two.graph.edges(), (std::vector<std::pair<int, int>>{{0, 1}}));
    EXPECT_TRUE(quotient_graph(single_block(q(3)), 4).uncolorable());
}

TEST(Quotient, ReductionIsHomomorphism) {
    // Every edge of the box maps to an edge (or a loop) of the quotient.
    for (const auto& spec : spec_grid()) {
        auto box = box_subgraph(spec, 4);
        for (int m : {2, 3, 5}) {
            auto qg = quotient_graph(spec, m);
            std::map<LatticePoint, int> index;
            for (std::size_t i = 0; i < qg.vertices.size(); ++i)
                index[qg.vertices[i]] = static_cast<int>(i);
            auto reduce = [&](LatticePoint x) {
                for (auto& c : x)
                    c %= m;
                return index.at(x);
            };
            for (auto [u, v] : box.graph.edges()) {
                const int a = reduce(box.vertices[static_cast<std::size_t>(u)]);
                const int b = reduce(box.vertices[static_cast<std::size_t>(v)]);
                if (a == b)
                    EXPECT_TRUE(qg.graph.has_loop(a));
                else
                    EXPECT_TRUE(qg.graph.adjacent(a, b));
            }
        }
    }
}

TEST(Chromatic, Examples) {
    EXPECT_EQ(chromatic_number(Graph::cycle(5)).value(), 3);
    EXPECT_EQ(chromatic_number(Graph::path(4)).value(), 2);
    EXPECT_EQ(chromatic_number(Graph::complete(4)).value(), 4);
    EXPECT_EQ(chromatic_number(Graph(0)).value(), 0);
    auto b = chromatic_number(Graph::cycle(7), ChromaticMode::Bounds);
    EXPECT_EQ(b.status, ChromaticResult::Status::Bounds);
    EXPECT_LE(b.lower, 3);
    EXPECT_GE(b.upper, 3);
}

TEST(Chromatic, MatchesBacktrackingOracleOnRandomGraphs) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const double density = (rng() % 100) / 100.0;
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((rng() % 1000) / 1000.0 < density)
                    g.add_edge(u, v);
        const auto r = chromatic_number(g);
        EXPECT_EQ(r.value(), oracle::chromatic(g)) << "trial " << trial;
        EXPECT_TRUE(is_proper_coloring(g, r.coloring));
        EXPECT_EQ(color_count(r.coloring), r.value());
        const auto clique = max_clique(g);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                EXPECT_TRUE(g.adjacent(clique[i], clique[j]));
        EXPECT_LE(static_cast<int>(clique.size()), r.value());
        EXPECT_TRUE(is_proper_coloring(g, dsatur_coloring(g)));
    }
}

TEST(Chromatic, NodeLimitIsReported) {
    EXPECT_THROW(chromatic_number(Graph::cycle(51), ChromaticMode::Exact, SolverLimits{1}), ResourceLimit);
}

TEST(Chromatic, Deterministic) {
    auto g = quotient_graph(GammaSpec(FiniteSubmeasure::uniform(6, q(1, 6)), Partition::contiguous(6, 2), q(1, 2)), 4);
    auto a = chromatic_number(g.graph);
    auto b = chromatic_number(g.graph);
    EXPECT_EQ(a.coloring, b.coloring);
    EXPECT_EQ(a.nodes, b.nodes);
}

TEST(Sandwich, BoxBelowQuotient) {
    for (const auto& spec : spec_grid()) {
        if (spec.loops())
            continue;
        const int lower = chromatic_number(box_subgraph(spec, 3).graph).value();
        for (int m : {2, 3, 4}) {
            auto qg = quotient_graph(spec, m);
            if (qg.uncolorable())
                continue;
            EXPECT_LE(lower, chromatic_number(qg.graph).value());
        }
    }
}

TEST(Sandwich, MonotoneInEps) {
    const auto mu = FiniteSubmeasure::uniform(6, q(1, 6));
    const auto p = Partition::contiguous(6, 2);
    int prev = 0;
    for (int i = 1; i <= 6; ++i) {
        const int chi = chromatic_number(box_subgraph(GammaSpec(mu, p, q(i, 6)), 3).graph).value();
        EXPECT_GE(chi, prev);
        prev = chi;
    }
}

TEST(Refine, Examples) {
    auto mu = FiniteSubmeasure::uniform(4, q(1, 4));
    GammaSpec coarse(mu, Partition::whole(4), q(3, 10));
    GammaSpec fine(mu, Partition::from_lists(4, {{1, 2}, {3, 4}}), q(3, 10));
    EXPECT_TRUE(diagonal_refinement_hom(coarse, fine, 3).ok);
    EXPECT_TRUE(diagonal_refinement_hom(fine, fine, 3).ok);
    GammaSpec other(mu, Partition::from_lists(4, {{1, 3}, {2, 4}}), q(3, 10));
    EXPECT_THROW(diagonal_refinement_hom(fine, other, 3), InvalidArgument);
    EXPECT_EQ(diagonal_embed(coarse.partition(), fine.partition(), {7}), (LatticePoint{7, 7}));
}

TEST(Export, Formats) {
    auto g = quotient_graph(single_block(q(1, 2)), 3);
    const auto edges = to_edge_list(g);
    EXPECT_NE(edges.find("0 1"), std::string::npos);
    EXPECT_NE(to_dot(g).find("graph"), std::string::npos);
}
