#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "subchi/errors.hpp"
#include "subchi/homology.hpp"
#include "subchi/partial_complexes.hpp"

using namespace subchi;

namespace {

std::vector<std::vector<Rational>> dense(const SparseMatrix& m) {
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(m.rows),
                                           std::vector<Rational>(static_cast<std::size_t>(m.cols)));
    for (int c = 0; c < m.cols; ++c)
        for (auto [r, v] : m.columns[static_cast<std::size_t>(c)])
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
    return out;
}

// Reduced Betti numbers from dense ranks of the augmented chain complex.
std::vector<long long> oracle_betti(const ChainComplexData& data, int up_to) {
    std::vector<long long> ranks;
    for (const auto& m : data.boundary)
        ranks.push_back(static_cast<long long>(oracle::dense_rank(dense(m))));
    std::vector<long long> out;
    for (int d = 0; d <= up_to; ++d) {
        const auto ud = static_cast<std::size_t>(d);
        const long long cells = ud < data.simplices.size() ? static_cast<long long>(data.simplices[ud].size()) : 0;
        const long long r_d = ud < ranks.size() ? ranks[ud] : 0;
        const long long r_up = ud + 1 < ranks.size() ? ranks[ud + 1] : 0;
        out.push_back(cells - r_d - r_up);
    }
    return out;
}

Complex points(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.push_back(std::to_string(i));
    return Complex::points(labels);
}

std::vector<Complex> zoo() {
    return {points(1),
            points(4),
            Complex({"a", "b"}, {{0, 1}}),
            Complex({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}}),
            Complex({"a", "b", "c", "d"}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}),
            *build_S(2, 2).complex,
            *build_S(2, 3).complex,
            *build_S(3, 2).complex,
            *build_K(2, 2, 2).complex,
            *build_K(3, 1, 2).complex,
            *build_K(3, 2, 3).complex,
            barycentric(*build_S(2, 2).complex).complex};
}

}  // namespace

TEST(Boundary, SingleEdge) {
    auto data = boundary_matrices(Complex({"a", "b"}, {{0, 1}}));
    ASSERT_EQ(data.boundary.size(), 2u);
    const auto& d1 = data.boundary[1];
    EXPECT_EQ(d1.rows, 2);
    EXPECT_EQ(d1.cols, 1);
    EXPECT_EQ(d1.at(0, 0), -1);
    EXPECT_EQ(d1.at(1, 0), 1);
    EXPECT_EQ(matrix_coordinates(d1), "# 2 x 1\n0 0 -1\n1 0 1\n");
}

TEST(Boundary, Ranks) {
    auto tri = boundary_matrices(Complex({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(matrix_rank(tri.boundary[1]), 2u);
    auto sq = boundary_matrices(*build_S(2, 2).complex);
    EXPECT_EQ(sq.simplices[0].size(), 4u);
    EXPECT_EQ(sq.simplices[1].size(), 4u);
    EXPECT_EQ(matrix_rank(sq.boundary[1]), 3u);
}

TEST(Boundary, SquaresToZeroAndMatchesOracle) {
    for (const auto& k : zoo()) {
        auto data = boundary_matrices(k);
        EXPECT_TRUE(boundary_squares_to_zero(data));
        for (const auto& m : data.boundary) {
            const auto expect = oracle::dense_rank(dense(m));
            EXPECT_EQ(matrix_rank(m), expect);
            EXPECT_EQ(matrix_rank(m, 7), expect);
        }
        EXPECT_EQ(reduced_betti(data, 3), oracle_betti(data, 3));
        EXPECT_TRUE(euler_consistency(k).ok());
    }
}

TEST(Rank, RandomMatricesAgreeWithDenseElimination) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        SparseMatrix m;
        m.rows = 1 + static_cast<int>(rng() % 8);
        m.cols = 1 + static_cast<int>(rng() % 8);
        m.columns.resize(static_cast<std::size_t>(m.cols));
        for (int c = 0; c < m.cols; ++c)
            for (int r = 0; r < m.rows; ++r)
                if (rng() % 3 == 0)
                    m.columns[static_cast<std::size_t>(c)].emplace_back(r, static_cast<int>(rng() % 5) - 2);
        for (auto& col : m.columns)
            std::erase_if(col, [](auto e) { return e.second == 0; });
        EXPECT_EQ(matrix_rank(m), oracle::dense_rank(dense(m)));
    }
}

TEST(Betti, Examples) {
    EXPECT_EQ(reduced_betti(points(5), 2), (std::vector<long long>{4, 0, 0}));
    EXPECT_EQ(reduced_betti(*build_S(2, 2).complex, 1), (std::vector<long long>{0, 1}));
    EXPECT_EQ(reduced_betti(*build_S(2, 3).complex, 1), (std::vector<long long>{0, 4}));
    EXPECT_EQ(betti_csv({0, 4}), "dimension,reduced_betti\n0,0\n1,4\n");
}

TEST(Betti, JoinsOfPointsAreWedgesOfSpheres) {
    for (auto [l1, p] : {std::pair{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        auto b = reduced_betti(*build_S(l1, p).complex, l1);
        long long top = 1;
        for (int i = 0; i < l1; ++i)
            top *= p - 1;
        for (int d = 0; d < l1 - 1; ++d)
            EXPECT_EQ(b[static_cast<std::size_t>(d)], 0);
        EXPECT_EQ(b[static_cast<std::size_t>(l1 - 1)], top);
    }
}

TEST(Betti, SubdivisionInvariant) {
    for (const auto& k : zoo()) {
        if (k.face_count_upper_bound() > 2000)
            continue;
        EXPECT_EQ(reduced_betti(k, 3), reduced_betti(barycentric(k).complex, 3));
    }
}

TEST(Connectivity, Examples) {
    EXPECT_TRUE(check_connectivity_necessary(*build_S(2, 2).complex, 0).ok);
    auto oct = check_connectivity_necessary(*build_S(3, 2).complex, 1);
    EXPECT_TRUE(oct.ok);
    EXPECT_EQ(reduced_betti(*build_S(3, 2).complex, 2), (std::vector<long long>{0, 0, 1}));
    auto two = check_connectivity_necessary(points(2), 0);
    EXPECT_FALSE(two.ok);
    EXPECT_EQ(two.failing_dimension, 0);
}

TEST(Homology, ResourceCap) {
    EXPECT_THROW(boundary_matrices(*build_K(3, 3, 2).complex, 10), ResourceLimit);
}
