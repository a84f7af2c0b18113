#include "subknn/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace subknn {

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ContractError("matmul: a.cols != b.rows");
    Matrix out(a.rows(), b.cols());
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const double* arow = a.row_ptr(static_cast<std::size_t>(i));
        double* orow = out.row_ptr(static_cast<std::size_t>(i));
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = arow[k];
            if (aik == 0.0) continue;
            const double* brow = b.row_ptr(k);
            for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += aik * brow[j];
        }
    }
    out.check_finite("matmul");
    return out;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw ContractError("matmul_nt: inner dims differ");
    Matrix out(a.rows(), b.rows());
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const double* arow = a.row_ptr(static_cast<std::size_t>(i));
        double* orow = out.row_ptr(static_cast<std::size_t>(i));
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const double* brow = b.row_ptr(j);
            double acc = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += arow[k] * brow[k];
            orow[j] = acc;
        }
    }
    out.check_finite("matmul_nt");
    return out;
}

Matrix l2_normalize_rows(const Matrix& x) {
    Matrix out(x.rows(), x.cols());
    const std::int64_t n = static_cast<std::int64_t>(x.rows());
    bool degenerate = false;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const double* src = x.row_ptr(static_cast<std::size_t>(i));
        double* dst = out.row_ptr(static_cast<std::size_t>(i));
        double sq = 0.0;
        for (std::size_t j = 0; j < x.cols(); ++j) sq += src[j] * src[j];
        const double norm = std::sqrt(sq);
        if (norm < 1e-30) {
            degenerate = true;
            continue;
        }
        const double inv = 1.0 / norm;
        for (std::size_t j = 0; j < x.cols(); ++j) dst[j] = src[j] * inv;
    }
    if (degenerate)
        throw NumericError("l2_normalize_rows: degenerate embedding (row norm < 1e-30)");
    out.check_finite("l2_normalize_rows");
    return out;
}

std::vector<std::size_t> top_s_indices(const double* v, std::size_t n, std::size_t s) {
    if (s < 1 || s > n) throw ContractError("top_s_indices: s out of range");
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    // Total order: larger value first, lower index wins ties.
    auto cmp = [v](std::size_t a, std::size_t b) {
        if (v[a] != v[b]) return v[a] > v[b];
        return a < b;
    };
    std::nth_element(idx.begin(), idx.begin() + (s - 1), idx.end(), cmp);
    idx.resize(s);
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::vector<std::size_t> top_s_indices(const std::vector<double>& v, std::size_t s) {
    return top_s_indices(v.data(), v.size(), s);
}

std::vector<std::size_t> bottom_s_indices(const double* v, std::size_t n, std::size_t s) {
    if (s < 1 || s > n) throw ContractError("bottom_s_indices: s out of range");
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto cmp = [v](std::size_t a, std::size_t b) {
        if (v[a] != v[b]) return v[a] < v[b];
        return a < b;
    };
    std::nth_element(idx.begin(), idx.begin() + (s - 1), idx.end(), cmp);
    idx.resize(s);
    std::sort(idx.begin(), idx.end());
    return idx;
}

std::vector<double> softmax(const std::vector<double>& logits) {
    std::vector<double> p(logits.size());
    double mx = logits[0];
    for (double v : logits) mx = std::max(mx, v);
    double sum = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        p[i] = std::exp(logits[i] - mx);
        sum += p[i];
    }
    for (double& v : p) v /= sum;
    return p;
}

void softmax_rows_inplace(Matrix& logits) {
    const std::int64_t n = static_cast<std::int64_t>(logits.rows());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        double* row = logits.row_ptr(static_cast<std::size_t>(i));
        double mx = row[0];
        for (std::size_t j = 0; j < logits.cols(); ++j) mx = std::max(mx, row[j]);
        double sum = 0.0;
        for (std::size_t j = 0; j < logits.cols(); ++j) {
            row[j] = std::exp(row[j] - mx);
            sum += row[j];
        }
        for (std::size_t j = 0; j < logits.cols(); ++j) row[j] /= sum;
    }
    logits.check_finite("softmax_rows");
}

double squared_distance(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

namespace ref {

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ContractError("ref::matmul: a.cols != b.rows");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

std::vector<std::size_t> top_s_indices_fullsort(const std::vector<double>& v, std::size_t s) {
    if (s < 1 || s > v.size()) throw ContractError("top_s_indices_fullsort: s out of range");
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&v](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    idx.resize(s);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace ref

}  // namespace subknn
