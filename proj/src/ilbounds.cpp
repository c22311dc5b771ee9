#include "cwb/ilbounds.hpp"

#include "cwb/error.hpp"
#include "cwb/gf.hpp"
#include "cwb/grscode.hpp"
#include "cwb/metric.hpp"

#include <algorithm>

namespace cwb {

namespace bm = boost::multiprecision;

std::size_t kopt_singleton(std::size_t n, std::size_t d) { return n - d + 1; }

std::size_t kopt_hamming(std::uint64_t q, std::size_t n, std::size_t d)
{
    const BigInt ball = ball_hamming(n, (d - 1) / 2, BigInt(q));
    const BigInt space = ipow(BigInt(q), n);
    std::size_t k = 0;
    BigInt qk = 1;
    while (k < n && qk * q * ball <= space) {
        qk *= q;
        ++k;
    }
    return k;
}

std::size_t kopt_griesmer(std::uint64_t q, std::size_t n, std::size_t d)
{
    std::size_t k = 0;
    BigInt sum = 0, qi = 1;
    for (;;) {
        const BigInt term = (BigInt(d) + qi - 1) / qi;
        if (sum + term > n)
            return k;
        sum += term;
        qi *= q;
        ++k;
    }
}

std::size_t kopt_plotkin(std::uint64_t q, std::size_t n, std::size_t d)
{
    // A_q(n, d) <= floor(q d / (q d - (q-1) n)) when q d > (q-1) n; otherwise shorten to the
    // largest n' with q d > (q-1) n' and use A_q(n, d) <= q^{n-n'} A_q(n', d).
    const BigInt qd = BigInt(q) * d;
    std::size_t np = n;
    if (qd <= BigInt(q - 1) * n)
        np = static_cast<std::size_t>((qd - 1) / (q - 1));
    const BigInt A = ipow(BigInt(q), n - np) * (qd / (qd - BigInt(q - 1) * np));
    std::size_t k = 0;
    BigInt qk = q;
    while (qk <= A) {
        qk *= q;
        ++k;
    }
    return k;
}

std::size_t kopt(std::uint64_t q, std::size_t n, std::size_t d, KoptPolicy policy)
{
    require(d >= 1 && d <= n, "kopt needs 1 <= d <= n");
    std::size_t k = kopt_singleton(n, d);
    if (policy == KoptPolicy::singleton)
        return k;
    k = std::min({k, kopt_hamming(q, n, d), kopt_griesmer(q, n, d), kopt_plotkin(q, n, d)});
    return k;
}

BigRat maximize_convex_sum(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& B, unsigned s)
{
    require(a >= 1 && c >= 1 && b >= a, "maximization needs a, c >= 1 and b >= a");
    require(c * a <= B && B <= c * b, "maximization needs c a <= B <= c b");
    const BigInt as = ipow(a, s);
    if (a == b)
        return BigRat(c * as);
    return (BigRat(B - c * a, b - a) + 1) * BigRat(ipow(b, s) - as) + BigRat(c * as);
}

MatrixCounts count_matrices(std::size_t rows, std::size_t cols, std::size_t r, std::uint64_t q)
{
    require(r <= std::min(rows, cols), "rank exceeds the matrix size");
    MatrixCounts out;
    out.M = rank_count(rows, cols, r, q);
    BigInt N = 0;
    for (std::size_t j = 0; j + r <= cols; ++j) {
        const BigInt term = binom(cols, j) * rank_count(rows, cols - j, r, q);
        if (j % 2)
            N -= term;
        else
            N += term;
    }
    out.N = N;
    return out;
}

BigInt z_xi(std::uint64_t q, std::size_t s, std::size_t t, std::size_t xi)
{
    require(xi >= 1 && xi <= t, "need 1 <= xi <= t");
    const BigInt Qs = ipow(BigInt(q), s);
    const BigInt classes = (Qs - 1) / (q - 1);
    BigInt Z = 0;
    for (std::size_t j = 1; j <= t / xi; ++j) {
        if (BigInt(j) > classes)
            break;
        BigInt pos = 1;
        for (std::size_t z = 0; z < j; ++z)
            pos *= binom(t - z * xi, xi);
        // remaining columns: nonzero and not a multiple of any of the j chosen vectors
        const BigInt rest = Qs - 1 - BigInt(j) * (q - 1);
        const BigInt D = pos * ipow(BigInt(q - 1), j * xi) * ipow(rest, t - j * xi);
        // binomial(classes, j) with a big top argument
        BigInt cb = 1;
        for (std::size_t i = 0; i < j; ++i)
            cb = cb * (classes - i) / (i + 1);
        if (j % 2)
            Z += cb * D;
        else
            Z -= cb * D;
    }
    return Z;
}

void BoundInputs::check() const
{
    require(prime_power(q).first != 0, "q must be a prime power");
    require(m >= 1 && s >= 1 && t >= 1, "m, s and t must be positive");
    require(d >= 1 && d <= n, "need 1 <= d <= n");
}

const char* bound_name(BoundName b)
{
    switch (b) {
    case BoundName::LRS:
        return "LRS";
    case BoundName::LA:
        return "LA";
    case BoundName::LA1:
        return "LA1";
    case BoundName::LA2:
        return "LA2";
    case BoundName::LT:
        return "LT";
    case BoundName::U:
        return "U";
    }
    return "?";
}

std::optional<BoundName> parse_bound_name(const std::string& s)
{
    for (auto b : {BoundName::LRS, BoundName::LA, BoundName::LA1, BoundName::LA2, BoundName::LT, BoundName::U}) {
        const std::string n = bound_name(b);
        std::string dotted = n.substr(0, 1) + "." + n.substr(1);
        if (s == n || s == dotted)
            return b;
    }
    return std::nullopt;
}

namespace {

BigRat clamp01(const BigRat& v)
{
    if (v < 0)
        return 0;
    if (v > 1)
        return 1;
    return v;
}

void set_value(ProbBound& pb, const BigRat& raw)
{
    const BigRat v = clamp01(raw);
    pb.value = to_double(v);
    const auto bits = [](const BigInt& x) { return x == 0 ? std::size_t{0} : bm::msb(bm::abs(x)) + 1; };
    if (bits(bm::numerator(v)) <= 4096 && bits(bm::denominator(v)) <= 4096)
        pb.exact = v;
}

// 1 - sum_w C(t,w)/((Q-1)(q^s-1)^w) * bracket_w
BigRat alternant_lower(const BoundInputs& in, KoptPolicy policy, bool simplified)
{
    const std::uint64_t q = in.q;
    const std::size_t d = in.d, t = in.t, s = in.s, m = in.m;
    const BigInt Q = ipow(BigInt(q), m);
    const BigInt qs1 = ipow(BigInt(q), s) - 1;
    const std::size_t dt = d - t;
    BigRat sum = 0;
    for (std::size_t w = dt; w <= t; ++w) {
        const std::int64_t ea = static_cast<std::int64_t>(w) - static_cast<std::int64_t>((dt - 1) * m);
        const BigInt a = ea > 0 ? ipow(BigInt(q), ea) : BigInt(1);
        const BigInt b = ipow(BigInt(q), kopt(q, w, dt, policy));
        const BigInt c = ipow(Q - 1, w);
        const BigInt Bt = b_mds_total(w, dt, q, in.m);
        const BigRat mx = maximize_convex_sum(a, b, c, Bt, static_cast<unsigned>(s));
        BigRat bracket;
        if (simplified) {
            bracket = mx - BigRat(c);
        } else {
            const BigInt Bw = b_mds(w, dt, w, q, in.m);
            bracket = BigRat(qs1, BigInt(q - 1)) * BigRat(c + Bw - Bt) - BigRat(c) + mx;
        }
        sum += BigRat(binom(t, w)) * bracket / BigRat((Q - 1) * ipow(qs1, w));
    }
    return 1 - sum;
}

} // namespace

ProbBound bound(BoundName name, const BoundInputs& in)
{
    in.check();
    ProbBound pb;
    pb.name = name;
    const std::uint64_t q = in.q;
    const std::size_t d = in.d, t = in.t, s = in.s;
    const BigInt qs1 = ipow(BigInt(q), s) - 1;
    switch (name) {
    case BoundName::LRS: {
        pb.validity = "1<=t<=n";
        pb.applicable = t <= in.n;
        if (!pb.applicable)
            break;
        const BigInt Q = ipow(BigInt(q), in.m);
        const BigInt Qs = ipow(Q, s);
        // m (s+1)(t_max - t) = m (s(d-1) - (s+1) t)
        const std::int64_t e = static_cast<std::int64_t>(in.m) *
                               (static_cast<std::int64_t>(s * (d - 1)) - static_cast<std::int64_t>((s + 1) * t));
        const BigRat base = BigRat(Qs * Q - 1, Q * (Qs - 1)); // (Q^s - 1/Q)/(Q^s - 1)
        BigRat pw = 1;
        for (std::size_t i = 0; i < t; ++i)
            pw *= base;
        const BigRat scale = e >= 0 ? BigRat(BigInt(1), ipow(BigInt(q), e)) : BigRat(ipow(BigInt(q), -e));
        set_value(pb, 1 - pw * scale / BigRat(Q - 1));
        break;
    }
    case BoundName::LA:
    case BoundName::LA1:
    case BoundName::LA2: {
        pb.validity = "1<=t<=d-1";
        pb.applicable = t + 1 <= d;
        if (!pb.applicable)
            break;
        const KoptPolicy pol = name == BoundName::LA1 ? KoptPolicy::singleton : KoptPolicy::best;
        set_value(pb, alternant_lower(in, pol, name == BoundName::LA2));
        break;
    }
    case BoundName::LT: {
        pb.validity = "s>=t";
        pb.applicable = s >= t;
        if (!pb.applicable)
            break;
        BigInt num = 0;
        const std::int64_t lo = std::max<std::int64_t>(1, 2 * static_cast<std::int64_t>(t) - static_cast<std::int64_t>(d) + 2);
        for (std::int64_t r = lo; r <= static_cast<std::int64_t>(t); ++r)
            num += count_matrices(s, t, static_cast<std::size_t>(r), q).N;
        set_value(pb, BigRat(num, ipow(qs1, t)));
        break;
    }
    case BoundName::U: {
        pb.validity = "t>=d/2";
        pb.applicable = 2 * t >= d;
        if (!pb.applicable)
            break;
        BigInt best = 0;
        const std::size_t lo = d > t ? d - t : 1;
        for (std::size_t xi = lo; xi <= t; ++xi)
            best = std::max(best, z_xi(q, s, t, xi));
        set_value(pb, 1 - BigRat(best, ipow(qs1, t)));
        break;
    }
    }
    return pb;
}

} // namespace cwb
