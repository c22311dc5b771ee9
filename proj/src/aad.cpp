#include "cwb/aad.hpp"

#include "cwb/error.hpp"

#include <cmath>

namespace cwb {

BigInt aad_guarantee(std::size_t n, std::size_t k)
{
    require(n > 2 * k, "AAD needs n > 2k");
    if (k == 1)
        return BigInt(n - 1);
    if (k == 2)
        return 1 + 2 * BigInt(n - 2) * BigInt(2 * n - 6);
    fail(Errc::invalid_argument, "L(n, k) is known only for k <= 2");
}

Mat aad_rs_parity(const Field& F, std::size_t n, std::size_t k)
{
    const std::size_t len = n - k - 1;
    Mat H(k - 1, len);
    for (std::size_t r = 0; r + 1 < k; ++r)
        for (std::size_t c = 0; c < len; ++c)
            H(r, c) = F.gpow(static_cast<long long>(r * c));
    return H;
}

Mat aad_subspace(const Field& F, std::size_t n, std::size_t k, const std::vector<Elem>& c)
{
    const std::size_t len = n - k - 1;
    require(c.size() == len, "codeword length must be n-k-1");
    Mat G(k, n);
    for (std::size_t t = 1; t <= k; ++t) {
        G(t - 1, t - 1) = 1;
        Elem h = 0;
        for (std::size_t p = 1; p <= len; ++p) {
            G(t - 1, k + p - 1) = F.mul(F.gpow(static_cast<long long>(p * (t - 1))), c[p - 1]);
            h = F.add(h, F.pow(c[p - 1], static_cast<std::uint64_t>((t - 1) * len + p + 1)));
        }
        G(t - 1, n - 1) = h;
    }
    return G;
}

AadFamily aad_construct(std::size_t n, std::size_t k, std::uint64_t q)
{
    require(k >= 1, "k must be positive");
    require(n > 2 * k, "AAD construction needs n > 2k");
    require(prime_power(q).first != 0, "q must be a prime power");
    if (q < n * k)
        fail(Errc::guard, "AAD construction needs q >= n k");
    const double size_log2 = double(n - 2 * k) * std::log2(double(q));
    if (size_log2 > 20)
        fail(Errc::guard, "AAD family larger than 2^20 members");
    AadFamily fam;
    fam.n = n;
    fam.k = k;
    fam.F = Field::make(q, 1);
    const Field& F = *fam.F;
    const std::size_t len = n - k - 1;
    const Mat B = k == 1 ? identity(len) : kernel(F, aad_rs_parity(F, n, k));
    require(B.rows == n - 2 * k, "RS code has the wrong dimension");
    std::vector<Elem> u(B.rows, 0);
    for (;;) {
        fam.gens.push_back(aad_subspace(F, n, k, vecmat(F, u, B)));
        std::size_t pos = 0;
        while (pos < u.size() && u[pos] == q - 1)
            u[pos++] = 0;
        if (pos == u.size())
            break;
        ++u[pos];
    }
    if (k <= 2)
        fam.L = aad_guarantee(n, k);
    return fam;
}

bool verify_spread(const AadFamily& fam)
{
    const Field& F = *fam.F;
    for (std::size_t i = 0; i < fam.gens.size(); ++i)
        for (std::size_t j = i + 1; j < fam.gens.size(); ++j)
            if (rank(F, vstack(fam.gens[i], fam.gens[j])) != 2 * fam.k)
                return false;
    return true;
}

namespace {

// Number of members j != i meeting u + S_i: u lies in S_i + S_j, i.e. K_ij u = 0.
struct PairDuals {
    std::vector<std::vector<Mat>> K;
    explicit PairDuals(const AadFamily& fam)
    {
        const Field& F = *fam.F;
        const std::size_t m = fam.gens.size();
        K.assign(m, std::vector<Mat>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                K[i][j] = kernel(F, vstack(fam.gens[i], fam.gens[j]));
                K[j][i] = K[i][j];
            }
    }
    std::uint64_t count(const AadFamily& fam, std::size_t i, const std::vector<Elem>& u) const
    {
        const Field& F = *fam.F;
        std::uint64_t c = 0;
        for (std::size_t j = 0; j < fam.gens.size(); ++j) {
            if (j == i)
                continue;
            const auto s = matvec(F, K[i][j], u);
            bool zero = true;
            for (auto x : s)
                zero &= x == 0;
            c += zero;
        }
        return c;
    }
};

void note(AadCheck& out, std::uint64_t c, const BigInt& L)
{
    ++out.tested;
    if (BigInt(c) > out.worst)
        out.worst = c;
    if (BigInt(c) > L)
        out.ok = false;
}

} // namespace

AadCheck verify_aad_exhaustive(const AadFamily& fam, const BigInt& L)
{
    const std::uint64_t q = fam.F->order();
    if (double(fam.n) * std::log2(double(q)) > 22)
        fail(Errc::guard, "exhaustive AAD check needs q^n <= 2^22");
    const PairDuals duals(fam);
    AadCheck out;
    // Members have unit rows on the first k coordinates, so u = (0, w), w != 0, covers every coset once.
    const std::size_t k = fam.k, n = fam.n;
    for (std::size_t i = 0; i < fam.gens.size(); ++i) {
        std::vector<Elem> u(n, 0);
        for (;;) {
            std::size_t pos = k;
            while (pos < n && u[pos] == q - 1)
                u[pos++] = 0;
            if (pos == n)
                break;
            ++u[pos];
            note(out, duals.count(fam, i, u), L);
        }
    }
    return out;
}

AadCheck verify_aad_sampled(const AadFamily& fam, const BigInt& L, std::uint64_t samples, std::uint64_t seed)
{
    const Field& F = *fam.F;
    const std::uint64_t q = F.order();
    const PairDuals duals(fam);
    AadCheck out;
    for (std::uint64_t s = 0; s < samples; ++s) {
        Rng rng = stream(seed, s);
        const std::size_t i = uniform(rng, fam.gens.size());
        std::vector<Elem> u(fam.n);
        do {
            for (auto& x : u)
                x = uniform(rng, q);
        } while (rank(F, vstack(fam.gens[i], [&] {
                     Mat r(1, fam.n);
                     r.a = u;
                     return r;
                 }())) == fam.k);
        note(out, duals.count(fam, i, u), L);
    }
    return out;
}

AadBounds aad_bounds(std::size_t n, std::size_t k, const BigInt& L, std::uint64_t q)
{
    require(n > 2 * k, "AAD bounds need n > 2k");
    require(L >= 0, "L must be nonnegative");
    AadBounds b;
    const BigInt Q = q;
    b.upper = 1 + BigRat(L * (ipow(Q, n - k) - 1), ipow(Q, k) - 1);
    b.lower_exponent = double(n) - 2.0 * double(k) - double(n - k) * double(k + 1) / (to_double(BigRat(L)) + 1.0);
    b.lower = std::pow(double(q), b.lower_exponent);
    return b;
}

} // namespace cwb
