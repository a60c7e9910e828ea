#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subchi/complex.hpp"

namespace subchi {

// Integer matrix stored by columns; each column is a list of (row, value)
// with increasing rows.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> columns;

    int at(int row, int col) const;
};

// simplices[d] lists the d-simplices in lexicographic order; boundary[d] is
// the matrix of the boundary C_d -> C_{d-1}. boundary[0] is the augmentation
// onto the one-dimensional C_{-1}. The i-th face (dropping the i-th vertex in
// canonical order) carries the sign (-1)^i.
struct ChainComplexData {
    std::vector<std::vector<Simplex>> simplices;
    std::vector<SparseMatrix> boundary;
};

ChainComplexData boundary_matrices(const Complex& k, std::size_t cap = 5 * default_resource_cap());

// Rank over the rationals, or over Z/q when `prime` is given.
std::size_t matrix_rank(const SparseMatrix& m, std::optional<int> prime = std::nullopt);

// Does every composite boundary vanish?
bool boundary_squares_to_zero(const ChainComplexData& data);

// Reduced Betti numbers b~_0 .. b~_up_to (zeros beyond the dimension).
std::vector<long long> reduced_betti(const Complex& k, int up_to, std::optional<int> prime = std::nullopt);
std::vector<long long> reduced_betti(const ChainComplexData& data, int up_to, std::optional<int> prime = std::nullopt);

struct EulerReport {
    long long from_faces = 0;  // sum (-1)^d f_d over d >= -1
    long long from_betti = 0;  // sum (-1)^d b~_d over d >= -1
    bool ok() const { return from_faces == from_betti; }
};
EulerReport euler_consistency(const Complex& k, std::optional<int> prime = std::nullopt);

// Vanishing of b~_0 .. b~_l: a necessary condition for l-connectivity.
struct ConnectivityReport {
    bool ok = true;
    std::optional<int> failing_dimension;
    std::vector<long long> betti;
};
ConnectivityReport check_connectivity_necessary(const Complex& k, int l, std::optional<int> prime = std::nullopt);

// "dimension,reduced_betti" rows.
std::string betti_csv(const std::vector<long long>& betti);
// "row col value" lines, 0-based.
std::string matrix_coordinates(const SparseMatrix& m);

}  // namespace subchi
