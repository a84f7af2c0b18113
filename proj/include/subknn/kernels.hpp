#pragma once

#include <cstddef>
#include <vector>

#include "subknn/matrix.hpp"

namespace subknn {

/// Dense product a*b. OpenMP-parallel over output rows; each entry is a
/// serial dot product, so results do not depend on the thread count.
Matrix matmul(const Matrix& a, const Matrix& b);

/// a * b^T without materializing the transpose.
Matrix matmul_nt(const Matrix& a, const Matrix& b);

/// Returns x with every row scaled to unit L2 norm.
/// Rows with norm below 1e-30 are degenerate embeddings and rejected.
Matrix l2_normalize_rows(const Matrix& x);

/// Indices of the s largest entries of v, ties broken by lowest index,
/// returned sorted ascending.
std::vector<std::size_t> top_s_indices(const std::vector<double>& v, std::size_t s);
std::vector<std::size_t> top_s_indices(const double* v, std::size_t n, std::size_t s);

/// Indices of the s smallest entries (same tie rule), sorted ascending.
std::vector<std::size_t> bottom_s_indices(const double* v, std::size_t n, std::size_t s);

/// Numerically stable softmax (max-subtraction).
std::vector<double> softmax(const std::vector<double>& logits);
void softmax_rows_inplace(Matrix& logits);

/// Squared Euclidean distance between two length-n vectors.
double squared_distance(const double* a, const double* b, std::size_t n);

namespace ref {

/// Serial triple-loop product, kept as the reference for the parallel kernel.
Matrix matmul(const Matrix& a, const Matrix& b);

/// Full-sort top-s selection used as the oracle for top_s_indices.
std::vector<std::size_t> top_s_indices_fullsort(const std::vector<double>& v, std::size_t s);

}  // namespace ref

}  // namespace subknn
