#pragma once

#include "cwb/gf.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cwb {

struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    Elem& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    std::vector<Elem> row(std::size_t i) const;
    void append_row(const std::vector<Elem>& r);
    bool operator==(const Mat& o) const = default;
};

Mat identity(std::size_t n);
Mat transpose(const Mat& m);
Mat matmul(const Field& F, const Mat& A, const Mat& B);
std::vector<Elem> vecmat(const Field& F, const std::vector<Elem>& v, const Mat& A);
std::vector<Elem> matvec(const Field& F, const Mat& A, const std::vector<Elem>& v);
Mat vstack(const Mat& A, const Mat& B);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(const Field& F, Mat& m);
std::size_t rank(const Field& F, Mat m);
// Basis of {x : M x = 0}, one vector per row.
Mat kernel(const Field& F, const Mat& M);

struct SolveResult {
    std::vector<Elem> x;
    Mat kernel;
};
// One solution of A x = b plus a kernel basis; empty when inconsistent.
std::optional<SolveResult> solve(const Field& F, const Mat& A, const std::vector<Elem>& b);

// Row space equality of two matrices with the same column count.
bool same_row_space(const Field& F, const Mat& A, const Mat& B);

// expand_matrix: column j holds the F_q coordinates of v_j (an m x n matrix).
Mat expand(const Field& F, const std::vector<Elem>& v);
// F_q-rank of a vector over F_{q^m}.
std::size_t rank_q(const Field& F, const std::vector<Elem>& v);

} // namespace cwb
