#include "cwb/linalg.hpp"

#include "cwb/error.hpp"

namespace cwb {

std::vector<Elem> Mat::row(std::size_t i) const
{
    return std::vector<Elem>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

void Mat::append_row(const std::vector<Elem>& r)
{
    if (rows == 0 && cols == 0)
        cols = r.size();
    require(r.size() == cols, "row length mismatch");
    a.insert(a.end(), r.begin(), r.end());
    ++rows;
}

Mat identity(std::size_t n)
{
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Mat transpose(const Mat& m)
{
    Mat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            t(j, i) = m(i, j);
    return t;
}

Mat matmul(const Field& F, const Mat& A, const Mat& B)
{
    require(A.cols == B.rows, "matmul: dimension mismatch");
    Mat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const Elem x = A(i, k);
            if (!x)
                continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                if (B(k, j))
                    C(i, j) = F.add(C(i, j), F.mul(x, B(k, j)));
        }
    return C;
}

std::vector<Elem> vecmat(const Field& F, const std::vector<Elem>& v, const Mat& A)
{
    require(v.size() == A.rows, "vecmat: dimension mismatch");
    std::vector<Elem> r(A.cols, 0);
    for (std::size_t k = 0; k < A.rows; ++k) {
        if (!v[k])
            continue;
        for (std::size_t j = 0; j < A.cols; ++j)
            if (A(k, j))
                r[j] = F.add(r[j], F.mul(v[k], A(k, j)));
    }
    return r;
}

std::vector<Elem> matvec(const Field& F, const Mat& A, const std::vector<Elem>& v)
{
    require(v.size() == A.cols, "matvec: dimension mismatch");
    std::vector<Elem> r(A.rows, 0);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            if (A(i, j) && v[j])
                r[i] = F.add(r[i], F.mul(A(i, j), v[j]));
    return r;
}

Mat vstack(const Mat& A, const Mat& B)
{
    if (A.rows == 0)
        return B;
    if (B.rows == 0)
        return A;
    require(A.cols == B.cols, "vstack: column mismatch");
    Mat C = A;
    C.a.insert(C.a.end(), B.a.begin(), B.a.end());
    C.rows += B.rows;
    return C;
}

std::vector<std::size_t> row_reduce(const Field& F, Mat& m)
{
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m(p, c) == 0)
            ++p;
        if (p == m.rows)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m(p, j), m(r, j));
        const Elem iv = F.inv(m(r, c));
        for (std::size_t j = c; j < m.cols; ++j)
            m(r, j) = F.mul(m(r, j), iv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const Elem f = m(i, c);
            for (std::size_t j = c; j < m.cols; ++j)
                if (m(r, j))
                    m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

std::size_t rank(const Field& F, Mat m) { return row_reduce(F, m).size(); }

Mat kernel(const Field& F, const Mat& M)
{
    Mat m = M;
    auto piv = row_reduce(F, m);
    std::vector<bool> is_piv(m.cols, false);
    for (auto c : piv)
        is_piv[c] = true;
    Mat K(0, m.cols);
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_piv[f])
            continue;
        std::vector<Elem> x(m.cols, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            x[piv[i]] = F.neg(m(i, f));
        K.append_row(x);
    }
    return K;
}

std::optional<SolveResult> solve(const Field& F, const Mat& A, const std::vector<Elem>& b)
{
    require(b.size() == A.rows, "solve: right-hand side length mismatch");
    Mat aug(A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j)
            aug(i, j) = A(i, j);
        aug(i, A.cols) = b[i];
    }
    auto piv = row_reduce(F, aug);
    if (!piv.empty() && piv.back() == A.cols)
        return std::nullopt;
    SolveResult res;
    res.x.assign(A.cols, 0);
    for (std::size_t i = 0; i < piv.size(); ++i)
        res.x[piv[i]] = aug(i, A.cols);
    res.kernel = kernel(F, A);
    return res;
}

bool same_row_space(const Field& F, const Mat& A, const Mat& B)
{
    const std::size_t ra = rank(F, A), rb = rank(F, B);
    return ra == rb && rank(F, vstack(A, B)) == ra;
}

Mat expand(const Field& F, const std::vector<Elem>& v)
{
    Mat X(F.m(), v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        auto c = F.coords(v[j]);
        for (unsigned i = 0; i < F.m(); ++i)
            X(i, j) = c[i];
    }
    return X;
}

std::size_t rank_q(const Field& F, const std::vector<Elem>& v)
{
    if (v.empty())
        return 0;
    return rank(F, expand(F, v));
}

} // namespace cwb
