#include "cwb/grscode.hpp"

#include "cwb/error.hpp"

#include <set>

namespace cwb {

void GrsSpec::check() const
{
    require(F != nullptr, "GRS spec without field");
    require(!alpha.empty(), "GRS code of length zero");
    require(v.size() == alpha.size(), "multiplier count differs from locator count");
    require(d >= 1 && d <= n(), "need 1 <= d <= n");
    std::set<Elem> seen;
    for (std::size_t j = 0; j < n(); ++j) {
        require(alpha[j] != 0 && alpha[j] < F->order(), "locators must be nonzero field elements");
        require(v[j] != 0 && v[j] < F->order(), "multipliers must be nonzero field elements");
        require(seen.insert(alpha[j]).second, "locators must be distinct");
    }
}

GrsSpec default_grs(FieldPtr F, std::size_t n, std::size_t d)
{
    require(F != nullptr, "null field");
    require(n >= 1 && n <= F->order() - 1, "GRS length must be in [1, q^m - 1]");
    GrsSpec s;
    s.F = std::move(F);
    s.d = d;
    for (std::size_t j = 0; j < n; ++j)
        s.alpha.push_back(s.F->gpow(static_cast<long long>(j)));
    s.v.assign(n, 1);
    s.check();
    return s;
}

Mat parity_check(const GrsSpec& spec)
{
    spec.check();
    const Field& F = *spec.F;
    Mat H(spec.d - 1, spec.n());
    for (std::size_t j = 0; j < spec.n(); ++j) {
        Elem x = spec.v[j];
        for (std::size_t i = 0; i + 1 < spec.d; ++i) {
            H(i, j) = x;
            x = F.mul(x, spec.alpha[j]);
        }
    }
    return H;
}

Mat grs_generator(const GrsSpec& spec)
{
    const Mat H = parity_check(spec);
    if (H.rows == 0)
        return identity(spec.n());
    return kernel(*spec.F, H);
}

AlternantCode subfield_subcode(const GrsSpec& spec)
{
    const Field& F = *spec.F;
    const Mat H = parity_check(spec);
    AlternantCode A;
    A.parent = spec;
    A.parity_q = Mat(H.rows * F.m(), H.cols);
    for (std::size_t i = 0; i < H.rows; ++i)
        for (std::size_t j = 0; j < H.cols; ++j) {
            auto c = F.coords(H(i, j));
            for (unsigned r = 0; r < F.m(); ++r)
                A.parity_q(i * F.m() + r, j) = c[r];
        }
    // Entries lie in F_q, so elimination stays in F_q.
    A.basis = A.parity_q.rows == 0 ? identity(spec.n()) : kernel(F, A.parity_q);
    return A;
}

BigInt mds_weight_enum(std::size_t n, std::size_t k, const BigInt& Q, std::size_t w)
{
    require(k >= 1 && k <= n, "need 1 <= k <= n");
    require(w <= n, "weight exceeds length");
    if (w == 0)
        return 1;
    const std::size_t d = n - k + 1;
    if (w < d)
        return 0;
    BigInt s = 0;
    for (std::size_t j = 0; j <= w - d; ++j) {
        BigInt term = binom(w, j) * (ipow(Q, w - d + 1 - j) - 1);
        if (j % 2)
            s -= term;
        else
            s += term;
    }
    return binom(n, w) * s;
}

BigInt b_mds(std::size_t n, std::size_t d, std::size_t w, std::uint64_t q, unsigned m)
{
    require(d >= 1 && d <= n, "need 1 <= d <= n");
    const BigInt Q = ipow(BigInt(q), m);
    return mds_weight_enum(n, n - d + 1, Q, w) * ipow(Q - 1, n - w) * ipow(BigInt(q - 1), w);
}

BigInt b_mds_total(std::size_t n, std::size_t d, std::uint64_t q, unsigned m)
{
    BigInt s = ipow(ipow(BigInt(q), m) - 1, n);
    for (std::size_t w = d; w <= n; ++w)
        s += b_mds(n, d, w, q, m);
    return s;
}

} // namespace cwb
