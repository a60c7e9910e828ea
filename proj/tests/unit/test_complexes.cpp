#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "subchi/errors.hpp"
#include "subchi/partial_complexes.hpp"
#include "subchi/simplicial_map.hpp"

using namespace subchi;

namespace {

PartialFn pf(int n, std::vector<std::pair<int, int>> e) { return PartialFn(n, std::move(e)); }

std::map<int, int> as_map(const PartialFn& f) {
    std::map<int, int> m;
    for (std::size_t i = 0; i < f.size(); ++i)
        m[f.domain()[i]] = f.values()[i];
    return m;
}

bool restricts(const std::map<int, int>& a, const std::map<int, int>& b) {
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        if (it == b.end() || it->second != v)
            return false;
    }
    return true;
}

// Vertices of K^{n,l}_p straight from the definition.
std::vector<std::map<int, int>> oracle_vertices(int n, int l, int p) {
    std::vector<std::map<int, int>> out;
    for (const auto& f : oracle::all_partial_functions(n, p))
        if (n - static_cast<int>(f.size()) <= l && oracle::runs(f) <= l)
            out.push_back(f);
    return out;
}

// Maximal chains of the restriction order, by exhaustive extension.
std::size_t oracle_maximal_chains(const std::vector<std::map<int, int>>& verts) {
    const std::size_t v = verts.size();
    std::vector<std::vector<char>> below(v, std::vector<char>(v, 0));
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = 0; j < v; ++j)
            below[i][j] = i != j && restricts(verts[i], verts[j]);
    std::size_t count = 0;
    std::vector<std::size_t> chain;
    std::function<void()> go = [&]() {
        // chain is increasing; try every extension above the top, and check
        // that nothing fits anywhere else.
        bool extended = false;
        for (std::size_t c = 0; c < v; ++c) {
            if (!chain.empty() && !below[chain.back()][c])
                continue;
            extended = true;
            chain.push_back(c);
            go();
            chain.pop_back();
        }
        if (extended || chain.empty())
            return;
        for (std::size_t c = 0; c < v; ++c) {
            bool fits = std::find(chain.begin(), chain.end(), c) == chain.end();
            for (auto x : chain)
                fits = fits && (below[x][c] || below[c][x]);
            if (fits)
                return;
        }
        ++count;
    };
    go();
    return count;
}

bool every_face_present(const Complex& k) {
    for (const auto& f : k.facets()) {
        const std::size_t d = f.size();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
            Simplex s;
            for (std::size_t i = 0; i < d; ++i)
                if (m >> i & 1)
                    s.push_back(f[i]);
            if (!k.contains(s))
                return false;
        }
    }
    return true;
}

Complex points(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back("v" + std::to_string(i));
    return Complex::points(labels);
}

}  // namespace

TEST(ComponentIntervals, Examples) {
    auto c = component_intervals(pf(3, {{1, 2}, {2, 2}, {3, 2}}));
    EXPECT_EQ(c.count, 1);
    c = component_intervals(pf(5, {{1, 0}, {2, 0}, {4, 1}}));
    EXPECT_EQ(c.count, 2);
    EXPECT_EQ(c.last_value, 1);
    c = component_intervals(pf(4, {{1, 0}, {3, 0}}));
    EXPECT_EQ(c.count, 1);
    EXPECT_EQ(c.last_value, 0);
    EXPECT_THROW(pf(3, {}), InvalidArgument);
}

TEST(PartialFn, LabelsRoundTrip) {
    auto f = pf(5, {{4, 1}, {1, 0}, {2, 0}});
    EXPECT_EQ(f.label(), "1,2,4:0,0,1");
    EXPECT_EQ(PartialFn::parse(5, f.label()), f);
    EXPECT_EQ(f.shifted(2, 3).label(), "1,2,4:2,2,0");
    EXPECT_TRUE(pf(5, {{2, 0}}).is_restriction_of(f));
    EXPECT_FALSE(pf(5, {{2, 1}}).is_restriction_of(f));
    EXPECT_THROW(PartialFn::parse(5, "1,2:0"), ParseError);
}

TEST(BuildK, Examples) {
    EXPECT_EQ(build_K(3, 1, 2).complex->vertex_count(), 8u);
    EXPECT_EQ(build_K(1, 1, 2).complex->vertex_count(), 2u);
    EXPECT_EQ(build_K(2, 2, 3).complex->vertex_count(), 15u);
    EXPECT_TRUE(build_K(3, 0, 2).complex->is_void());
    EXPECT_THROW(build_K(3, 1, 4), InvalidArgument);
    EXPECT_THROW(build_K(1, 2, 2), InvalidArgument);
}

TEST(BuildK, VerticesMatchDefinition) {
    for (int n = 1; n <= 4; ++n)
        for (int l = 1; l <= n; ++l)
            for (int p : {2, 3}) {
                auto k = build_K(n, l, p);
                auto expect = oracle_vertices(n, l, p);
                ASSERT_EQ(k.vertices.size(), expect.size()) << n << "," << l << "," << p;
                std::set<std::map<int, int>> got;
                for (const auto& f : k.vertices)
                    got.insert(as_map(f));
                EXPECT_EQ(got, (std::set<std::map<int, int>>(expect.begin(), expect.end())));
            }
}

TEST(BuildK, FacetsAreMaximalChains) {
    for (int n = 1; n <= 3; ++n)
        for (int l = 1; l <= n; ++l)
            for (int p : {2, 3}) {
                auto k = build_K(n, l, p);
                EXPECT_EQ(k.complex->facets().size(), oracle_maximal_chains(oracle_vertices(n, l, p)))
                    << n << "," << l << "," << p;
                for (const auto& f : k.complex->facets())
                    for (std::size_t i = 0; i + 1 < f.size(); ++i)
                        EXPECT_TRUE(k.vertices[static_cast<std::size_t>(f[i])].is_restriction_of(
                            k.vertices[static_cast<std::size_t>(f[i + 1])]));
            }
}

TEST(BuildK, ActionIsFreeAndValid) {
    for (int n = 1; n <= 3; ++n)
        for (int l = 1; l <= n; ++l)
            for (int p : {2, 3}) {
                auto k = build_K(n, l, p);
                ASSERT_TRUE(k.complex->action());
                EXPECT_TRUE(k.complex->action_is_valid());
                const auto& act = *k.complex->action();
                for (int v = 0; v < static_cast<int>(k.vertices.size()); ++v) {
                    EXPECT_EQ(act.apply(v, 0), v);
                    EXPECT_EQ(act.apply(v, p), v);
                    for (int q = 1; q < p; ++q)
                        EXPECT_NE(act.apply(v, q), v);
                }
                EXPECT_TRUE(every_face_present(*k.complex));
            }
}

TEST(BuildS, Examples) {
    auto s13 = build_S(1, 3);
    EXPECT_EQ(s13.complex->vertex_count(), 3u);
    EXPECT_EQ(s13.complex->dimension(), 0);
    auto s22 = build_S(2, 2);
    EXPECT_EQ(s22.complex->vertex_count(), 4u);
    EXPECT_EQ(s22.complex->facets().size(), 4u);
    EXPECT_EQ(s22.complex->dimension(), 1);
    auto s23 = build_S(2, 3);
    EXPECT_EQ(s23.complex->facets().size(), 9u);
    for (const auto& f : s23.complex->facets()) {
        const auto& a = s23.vertices[static_cast<std::size_t>(f[0])];
        const auto& b = s23.vertices[static_cast<std::size_t>(f[1])];
        EXPECT_NE(a.domain(), b.domain());
    }
    EXPECT_THROW(build_S(2, 6), InvalidArgument);
}

TEST(Join, Examples) {
    auto edge = join(points(1), points(1));
    EXPECT_EQ(edge.facets(), (std::vector<Simplex>{{0, 1}}));
    auto square = join(points(2), points(2));
    EXPECT_EQ(square.facets().size(), build_S(2, 2).complex->facets().size());
    EXPECT_EQ(square.dimension(), 1);
    auto k = join(points(3), Complex::empty_simplex(), false);
    EXPECT_EQ(k.facets(), points(3).facets());
    EXPECT_THROW(join(points(2), points(2), false), InvalidArgument);
}

TEST(Join, ReducedEulerMultiplies) {
    std::vector<Complex> ks = {points(1), points(2), points(3), *build_S(2, 2).complex, *build_K(2, 1, 2).complex};
    for (const auto& a : ks)
        for (const auto& b : ks)
            EXPECT_EQ(reduced_euler_characteristic(join(a, b)),
                      -reduced_euler_characteristic(a) * reduced_euler_characteristic(b));
}

TEST(Join, ProductActionIsValid) {
    auto a = *build_S(1, 3).complex;
    auto j = join(a, a);
    ASSERT_TRUE(j.action());
    EXPECT_TRUE(j.action_is_valid());
}

TEST(Barycentric, Examples) {
    auto edge = Complex({"a", "b"}, {{0, 1}});
    auto sd = barycentric(edge);
    EXPECT_EQ(sd.complex.vertex_count(), 3u);
    EXPECT_EQ(sd.complex.facets().size(), 2u);

    auto triangle = Complex({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
    auto hex = barycentric(triangle).complex;
    EXPECT_EQ(hex.vertex_count(), 6u);
    EXPECT_EQ(hex.facets().size(), 6u);
    std::vector<int> degree(6, 0);
    for (const auto& f : hex.facets())
        for (int v : f)
            ++degree[static_cast<std::size_t>(v)];
    EXPECT_EQ(degree, std::vector<int>(6, 2));
}

TEST(Barycentric, VertexCountIsSimplexCount) {
    for (const auto& k : {*build_K(2, 2, 2).complex, *build_S(3, 2).complex, *build_K(3, 1, 3).complex}) {
        std::size_t simplices = 0;
        for (const auto& d : k.simplices_by_dimension())
            simplices += d.size();
        auto sd = barycentric(k);
        EXPECT_EQ(sd.complex.vertex_count(), simplices);
        EXPECT_TRUE(every_face_present(sd.complex));
        ASSERT_TRUE(sd.complex.action());
        EXPECT_TRUE(sd.complex.action_is_valid());
    }
}

TEST(Barycentric, ResourceGuard) {
    ComplexLimits tight;
    tight.max_vertices = 10;
    EXPECT_THROW(barycentric(*build_K(3, 3, 2).complex, tight), ResourceLimit);
}

TEST(Maps, IdentityAndViolations) {
    auto square = std::make_shared<const Complex>(*build_S(2, 2).complex);
    auto id = identity_map(square);
    EXPECT_TRUE(verify_simplicial(id).ok);
    EXPECT_TRUE(verify_equivariant(id, 2).ok);

    // Vertices are (1->0), (1->1), (2->0), (2->1); (1->0) and (2->0) are
    // adjacent, (1->0) and (1->1) are not.
    SimplicialMap bad{square, square, {0, 1, 1, 3}};
    auto r = verify_simplicial(bad);
    EXPECT_FALSE(r.ok);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(r.counterexample->size(), 2u);

    SimplicialMap swap{square, square, {2, 3, 0, 1}};
    EXPECT_TRUE(verify_simplicial(swap).ok);
    EXPECT_TRUE(verify_equivariant(swap, 2).ok);
    auto three = std::make_shared<const Complex>(*build_S(1, 3).complex);
    SimplicialMap relabel{three, three, {0, 2, 1}};
    EXPECT_TRUE(verify_simplicial(relabel).ok);
    auto eq = verify_equivariant(compose(identity_map(three), relabel), 3);
    EXPECT_FALSE(eq.ok);
    EXPECT_TRUE(eq.vertex.has_value());

    auto plain = std::make_shared<const Complex>(points(2));
    EXPECT_THROW(verify_equivariant(identity_map(plain), 2), InvalidArgument);
}

TEST(Maps, SdOfIdentityIsIdentity) {
    auto k = std::make_shared<const Complex>(*build_K(2, 2, 2).complex);
    auto s = sd_map(identity_map(k));
    for (int v = 0; v < static_cast<int>(s.map.assignment.size()); ++v)
        EXPECT_EQ(s.map(v), v);
}

TEST(Maps, SdOfConstantCollapses) {
    auto k = std::make_shared<const Complex>(Complex({"a", "b", "c"}, {{0, 1, 2}}));
    auto pt = std::make_shared<const Complex>(points(1));
    auto s = sd_map(SimplicialMap{k, pt, {0, 0, 0}});
    EXPECT_EQ(s.target.complex.vertex_count(), 1u);
    for (int v : s.map.assignment)
        EXPECT_EQ(v, 0);
}

TEST(Maps, SdOfInclusionWhenSimplicial) {
    auto i = inclusion_map(0, 3);
    EXPECT_TRUE(verify_simplicial(i).ok);
    auto s = sd_map(i);
    std::set<int> image(s.map.assignment.begin(), s.map.assignment.end());
    EXPECT_EQ(image.size(), s.map.assignment.size());
}

TEST(MapS, Examples) {
    EXPECT_EQ(map_s({pf(2, {{1, 1}, {2, 0}})}, 2, 2, 2), pf(3, {{1, 1}, {2, 0}, {3, 0}}));
    EXPECT_EQ(map_s({pf(2, {{1, 1}}), pf(2, {{1, 1}, {2, 1}})}, 2, 2, 2), pf(3, {{1, 1}, {2, 1}}));
    const std::vector<PartialFn> chain = {pf(2, {{2, 0}}), pf(2, {{1, 2}, {2, 0}})};
    std::vector<PartialFn> shifted;
    for (const auto& f : chain)
        shifted.push_back(f.shifted(1, 3));
    EXPECT_EQ(map_s(shifted, 2, 2, 3), map_s(chain, 2, 2, 3).shifted(1, 3));
    EXPECT_THROW(map_s({pf(2, {{1, 0}}), pf(2, {{1, 1}, {2, 0}})}, 2, 2, 2), InvalidArgument);
    EXPECT_THROW(map_s({pf(3, {{1, 0}})}, 3, 1, 2), InvalidArgument);
}

TEST(MapS, OutputLandsInNextComplex) {
    for (int n = 1; n <= 4; ++n)
        for (int l = 1; l <= n; ++l)
            for (int p : {2, 3}) {
                auto lm = lemma_map(n, l, p);
                for (const auto& origin : lm.sd.origin) {
                    std::vector<PartialFn> chain;
                    for (int v : origin)
                        chain.push_back(lm.domain.vertices[static_cast<std::size_t>(v)]);
                    EXPECT_TRUE(in_vertex_set(map_s(chain, n, l, p), n + 1, l, p));
                }
            }
}

TEST(MapS, EquivariantEverywhere) {
    for (int n = 1; n <= 3; ++n)
        for (int l = 1; l <= n; ++l)
            for (int p : {2, 3})
                EXPECT_TRUE(verify_equivariant(lemma_map(n, l, p).map, p).ok) << n << "," << l << "," << p;
}

TEST(MapS, NotSimplicialOnK312) {
    auto lm = lemma_map(3, 1, 2);
    EXPECT_FALSE(verify_simplicial(lm.map).ok);
    // The edge {f} < {f, g} with f = (1,2 -> 0) and g = (1,2,3 -> 0).
    const auto a = lm.sd.complex.find_vertex("{1,2:0,0}");
    const auto b = lm.sd.complex.find_vertex("{1,2:0,0|1,2,3:0,0,0}");
    ASSERT_TRUE(a && b);
    Simplex edge = {std::min(*a, *b), std::max(*a, *b)};
    ASSERT_TRUE(lm.sd.complex.contains(edge));
    EXPECT_EQ(lm.codomain.vertices[static_cast<std::size_t>(lm.map(*a))].label(), "1,2,4:0,0,0");
    EXPECT_EQ(lm.codomain.vertices[static_cast<std::size_t>(lm.map(*b))].label(), "1,2,3:0,0,0");
    EXPECT_FALSE(lm.codomain.complex->contains(lm.map.image(edge)));
}

TEST(MapS, SimplicialOnlyWithoutEdges) {
    for (int p : {2, 3}) {
        EXPECT_TRUE(verify_simplicial(lemma_map(1, 1, p).map).ok);
        for (int n = 2; n <= 3; ++n)
            for (int l = 1; l <= n; ++l)
                EXPECT_FALSE(verify_simplicial(lemma_map(n, l, p).map).ok) << n << "," << l << "," << p;
    }
}

TEST(Tower, EmptyTowerIsInclusion) {
    auto t = compose_tower(0, 2, 0);
    auto i = inclusion_map(0, 2);
    EXPECT_EQ(t.assignment, i.assignment);
}

TEST(Tower, VertexFreeLevelsVerify) {
    for (auto [l, p, ln] : {std::tuple{0, 2, 1}, {0, 2, 2}, {0, 3, 1}}) {
        auto t = compose_tower(l, p, ln);
        EXPECT_TRUE(verify_simplicial(t).ok);
        EXPECT_TRUE(verify_equivariant(t, p).ok);
        EXPECT_EQ(t.target->vertex_count(), build_K(l + 1 + ln, l + 1, p).complex->vertex_count());
    }
    EXPECT_EQ(compose_tower(0, 2, 1).source->vertex_count(), 2u);
}

TEST(Tower, InclusionBreaksAtPositiveL) {
    EXPECT_FALSE(verify_simplicial(inclusion_map(1, 2)).ok);
    EXPECT_THROW(compose_tower(1, 2, 1), NotSimplicial);
}

TEST(Text, RoundTripKeepsAction) {
    for (const auto& k : {*build_K(2, 2, 3).complex, barycentric(*build_S(2, 2).complex).complex,
                          join(*build_S(1, 2).complex, *build_S(1, 2).complex)}) {
        const int p = k.action()->order;
        auto back = complex_from_text(complex_to_text(k), p);
        EXPECT_EQ(back.labels(), k.labels());
        EXPECT_EQ(back.facets(), k.facets());
        ASSERT_TRUE(back.action());
        EXPECT_EQ(back.action()->generator, k.action()->generator);
    }
    auto e = complex_from_text(complex_to_text(Complex::empty_simplex()));
    EXPECT_EQ(e.facets().size(), 1u);
    EXPECT_TRUE(e.facets()[0].empty());
}

TEST(Primes, MatchSieve) {
    const auto primes = oracle::primes_below(500);
    std::set<long long> ps(primes.begin(), primes.end());
    for (long long n = -3; n < 500; ++n)
        EXPECT_EQ(is_prime(n), ps.count(n) == 1) << n;
}
