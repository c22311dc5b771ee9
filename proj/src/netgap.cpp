#include "cwb/netgap.hpp"

#include "cwb/error.hpp"
#include "cwb/gf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cwb {

namespace bm = boost::multiprecision;

namespace {

constexpr double max_exact_bits = 200000.0;

const BigFloat& ln2()
{
    static const BigFloat v = bm::log(BigFloat(2));
    return v;
}

BigFloat lg(const BigFloat& x) { return bm::log(x) / ln2(); }

// log2(q^n - 1) for n >= 1, q >= 2.
BigFloat lg_qpow_m1(std::uint64_t q, std::int64_t n)
{
    const BigFloat lq = lg(BigFloat(q));
    const BigFloat x = lq * n;
    return x + bm::log1p(-bm::exp(-x * ln2())) / ln2();
}

BigFloat lg_qbinom(std::int64_t n, std::int64_t k, std::uint64_t q)
{
    k = std::min(k, n - k);
    BigFloat s = 0;
    for (std::int64_t i = 0; i < k; ++i)
        s += lg_qpow_m1(q, n - i) - lg_qpow_m1(q, i + 1);
    return s;
}

// log2(2^a + 2^b)
BigFloat lg_add(const BigFloat& a, const BigFloat& b)
{
    const BigFloat hi = std::max(a, b), lo = std::min(a, b);
    return hi + bm::log1p(bm::exp((lo - hi) * ln2())) / ln2();
}

// log2(2^a - 2^b), a > b
BigFloat lg_sub(const BigFloat& a, const BigFloat& b)
{
    return a + bm::log1p(-bm::exp((b - a) * ln2())) / ln2();
}

BigFloat lg_gamma() { return lg(to_float(gamma_exact())); }

BigInt qpow(std::uint64_t q, std::int64_t e) { return ipow(BigInt(q), static_cast<std::uint64_t>(e)); }

bool exact_fits(const BigFloat& lg_value) { return lg_value < max_exact_bits; }

NetBound make(const std::string& name, const std::string& kind, const std::string& validity, bool ok)
{
    NetBound b;
    b.name = name;
    b.kind = kind;
    b.validity = validity;
    b.applicable = ok;
    b.log2 = std::numeric_limits<double>::quiet_NaN();
    return b;
}

void finish(NetBound& b, const BigFloat& lgv)
{
    b.log2 = static_cast<double>(lgv);
    if (b.exact)
        b.direct = to_float(*b.exact);
}

bool nontrivial(const CombNetParams& p) { return p.ell + p.eps < p.h && p.h <= p.alpha * p.ell + p.eps; }

std::int64_t fl(const CombNetParams& p) { return (p.h - p.eps) / p.ell; }

} // namespace

void CombNetParams::check() const
{
    require(h >= 1 && ell >= 1 && t >= 1 && r >= 1, "h, ell, t and r must be positive");
    require(eps >= 0 && alpha >= 0, "eps and alpha must be non-negative");
    require(prime_power(q).first != 0, "q must be a prime power");
}

BigRat gamma_exact() { return BigRat(87, 25); }

std::int64_t theta(const CombNetParams& p)
{
    require(p.ell >= 1, "ell must be positive");
    return p.alpha - fl(p) + 1;
}

BigFloat beta(std::int64_t alpha)
{
    require(alpha >= 2, "beta needs alpha >= 2");
    BigFloat fact = 1;
    for (std::int64_t i = 2; i < alpha; ++i)
        fact *= i;
    const BigFloat base = fact / (2 * bm::exp(BigFloat(1)) * to_float(gamma_exact()) * alpha);
    return bm::pow(base, BigFloat(1) / (alpha - 1));
}

std::int64_t f_poly(const CombNetParams& p, std::int64_t t)
{
    return (p.alpha * p.ell + p.eps - p.h) * p.eps * t * t + (p.alpha * p.ell + 2 * p.eps - p.h) * t + 1;
}

std::int64_t g_poly(const CombNetParams& p, std::int64_t t)
{
    const std::int64_t a = p.ell * t, b = (p.h - p.ell) * t;
    return std::max(a, b) * (std::min(a, b) - (p.h - p.ell - p.eps) * t + 1);
}

bool representations_agree(const NetBound& b, double tol)
{
    if (!b.applicable || !b.direct)
        return true;
    if (*b.direct <= 0)
        return false;
    const double d = static_cast<double>(lg(*b.direct));
    return std::abs(d - b.log2) <= tol * std::max(1.0, std::abs(b.log2));
}

std::vector<NetBound> rmax_upper(const CombNetParams& p)
{
    p.check();
    std::vector<NetBound> out;
    const std::uint64_t q = p.q;
    const std::int64_t t = p.t, h = p.h, l = p.ell, e = p.eps, a = p.alpha;
    const BigFloat lq = lg(BigFloat(q));
    const BigFloat lgam = lg_gamma();

    // alpha >= 2, h - eps >= 2 ell
    {
        const bool ok = a >= 2 && h - e >= 2 * l && nontrivial(p);
        NetBound ex = make("thm_upbound_v2", "upper", "alpha>=2, h-eps>=2*ell, ell+eps<h<=alpha*ell+eps", ok);
        NetBound gf = make("cor_imupperbound_N", "upper", "alpha>=2, h-eps>=2*ell, ell+eps<h<=alpha*ell+eps", ok);
        if (ok) {
            const std::int64_t th = theta(p), c = fl(p) - 1;
            BigFloat inner = lg(BigFloat(th)) + lg_qpow_m1(q, l * t + 1) - lg(BigFloat(q - 1));
            inner = lg_sub(inner, 0);
            BigFloat lv = lg_qbinom((e + l) * t, e * t, q) + inner;
            if (c > 0)
                lv = lg_add(lv, lg(BigFloat(c)));
            if (exact_fits(lv)) {
                BigRat v = BigRat(qbinom((e + l) * t, e * t, q)) *
                               (BigRat(th) * BigRat(qpow(q, l * t + 1) - 1, BigInt(q - 1)) - 1) +
                           c;
                ex.exact = v;
            }
            finish(ex, lv);

            BigFloat lg2 = lgam + lg(BigFloat(th)) + lq * (l * t * (e * t + 1));
            if (a - th > 0)
                lg2 = lg_add(lg2, lg(BigFloat(a - th)));
            if (exact_fits(lg2))
                gf.exact = gamma_exact() * th * BigRat(qpow(q, l * t * (e * t + 1))) + (a - th);
            finish(gf, lg2);
        }
        out.push_back(ex);
        out.push_back(gf);
    }

    // alpha = 2
    {
        const bool ok = a == 2 && nontrivial(p);
        NetBound ex = make("thm_imupbound_2", "upper", "alpha=2, ell+eps<h<=2*ell+eps", ok);
        NetBound gf = make("cor_imupperbound_2", "upper", "alpha=2, ell+eps<h<=2*ell+eps", ok);
        if (ok) {
            const std::int64_t j = 2 * l * t - (h - e) * t + 1;
            const BigFloat lv = lg_qbinom(h * t, j, q) - lg_qbinom(l * t, j, q);
            if (exact_fits(lv))
                ex.exact = BigRat(qbinom(h * t, j, q), qbinom(l * t, j, q));
            finish(ex, lv);
            const std::int64_t ex2 = (h - l) * (2 * l + e - h) * t * t + (h - l) * t;
            const BigFloat lg2 = lgam + lq * ex2;
            if (exact_fits(lg2))
                gf.exact = gamma_exact() * BigRat(qpow(q, ex2));
            finish(gf, lg2);
        }
        out.push_back(ex);
        out.push_back(gf);
    }

    // covering Grassmannian bound
    {
        bool ok = a >= 2 && 1 < l * t && l * t < h * t && e * t <= (h - l) * t - 1;
        if (ok) {
            // alpha <= [ht - eps t - 1 choose ell t]_q + 1, checked without building huge numbers
            const BigFloat lcap = lg_qbinom(h * t - e * t - 1, l * t, q);
            if (lcap < 64)
                ok = BigInt(a - 1) <= qbinom(h * t - e * t - 1, l * t, q);
        }
        const std::string w = "1<ell*t<h*t, 0<=eps<=h-ell-1/t, 2<=alpha<=[ht-eps*t-1 choose ell*t]_q+1";
        NetBound ex = make("ez19_exact", "upper", w, ok);
        NetBound gf = make("cor_EZ19_vector", "upper", w, ok);
        if (ok) {
            const std::int64_t n1 = h * t, k1 = h * t - e * t - 1, n2 = h * t - l * t, k2 = h * t - l * t - e * t - 1;
            // r_max is an integer, so the unfloored ratio is reported
            const BigFloat lv = lg(BigFloat(a - 1)) + lg_qbinom(n1, k1, q) - lg_qbinom(n2, k2, q);
            if (exact_fits(lv))
                ex.exact = BigRat(BigInt(a - 1) * qbinom(n1, k1, q), qbinom(n2, k2, q));
            finish(ex, lv);
            const BigFloat lg2 = lgam + lg(BigFloat(a - 1)) + lq * (l * t * (e * t + 1));
            if (exact_fits(lg2))
                gf.exact = gamma_exact() * (a - 1) * BigRat(qpow(q, l * t * (e * t + 1)));
            finish(gf, lg2);
        }
        out.push_back(ex);
        out.push_back(gf);
    }
    return out;
}

NetBound ek1_ext(std::int64_t n, std::int64_t k, std::int64_t delta, std::int64_t alpha, std::uint64_t q)
{
    const bool ok = 1 <= delta && delta <= k && delta + k <= n && alpha >= 2;
    NetBound b = make("thm_EK_1_ext", "lower", "1<=delta<=k, delta+k<=n, alpha>=2", ok);
    if (!ok)
        return b;
    const std::int64_t ex = std::max(k, n - k) * (std::min(k, n - k) - delta + 1);
    const BigFloat lv = lg(BigFloat(alpha - 1)) + lg(BigFloat(q)) * ex;
    if (exact_fits(lv))
        b.exact = BigRat(BigInt(alpha - 1) * qpow(q, ex));
    finish(b, lv);
    return b;
}

std::vector<NetBound> rmax_lower(const CombNetParams& p)
{
    p.check();
    std::vector<NetBound> out;
    const std::uint64_t q = p.q;
    const std::int64_t t = p.t, h = p.h, l = p.ell, e = p.eps, a = p.alpha;
    const BigFloat lq = lg(BigFloat(q));

    {
        const bool ok = a >= 2 && 1 <= h && h <= a * l + e;
        NetBound b = make("thm_LLL", "lower", "alpha>=2, 1<=h<=alpha*ell+eps", ok);
        if (ok) {
            const std::int64_t f = f_poly(p, t);
            const BigFloat bt = beta(a);
            b.log2 = static_cast<double>(lg(bt) + lq * BigFloat(f) / (a - 1));
            b.direct = bt * bm::pow(BigFloat(q), BigFloat(f) / (a - 1));
        }
        out.push_back(b);
    }
    {
        const bool ok = a >= 2 && h <= 2 * l + e && h > l + e;
        NetBound b = make("cor_EK19", "lower", "alpha>=2, ell+eps<h<=2*ell+eps", ok);
        if (ok) {
            const std::int64_t g = h <= 2 * l ? l * e * t * t + l * t : (h - l) * (2 * l + e - h) * t * t + (h - l) * t;
            const BigFloat lv = lg(BigFloat(a - 1)) + lq * g;
            if (exact_fits(lv))
                b.exact = BigRat(BigInt(a - 1) * qpow(q, g));
            finish(b, lv);
        }
        out.push_back(b);
    }
    out.push_back(ek1_ext(h * t, l * t, (h - l - e) * t, a, q));
    return out;
}

namespace {

// log2((r + theta - alpha) / (gamma theta)) or log2(r / (gamma (alpha - 1)))
std::optional<double> nec_numerator(const CombNetParams& p, bool lll)
{
    BigFloat num, den;
    if (lll) {
        const std::int64_t th = theta(p);
        if (th <= 0 || p.r + th - p.alpha <= 0)
            return std::nullopt;
        num = BigFloat(p.r + th - p.alpha);
        den = to_float(gamma_exact()) * th;
    } else {
        num = BigFloat(p.r);
        den = to_float(gamma_exact()) * (p.alpha - 1);
    }
    return static_cast<double>(lg(num / den));
}

// log2(r / beta) or log2(r / (alpha - 1))
double suf_numerator(const CombNetParams& p, bool lll)
{
    if (lll)
        return static_cast<double>(lg(BigFloat(p.r) / beta(p.alpha)));
    return static_cast<double>(lg(BigFloat(p.r) / (p.alpha - 1)));
}

bool lll_branch(const CombNetParams& p) { return p.h >= 2 * p.ell + p.eps; }

// Smallest prime power >= x, or nullopt past the search range.
std::optional<std::uint64_t> prime_power_ceil(long double x)
{
    if (x <= 2)
        return 2;
    if (x > 4294967296.0L)
        return std::nullopt;
    std::uint64_t c = static_cast<std::uint64_t>(std::ceil(x - 1e-12L * x));
    while (prime_power(c).first == 0)
        ++c;
    return c;
}

} // namespace

std::vector<QtRow> qt_conditions(const CombNetParams& p, std::int64_t T)
{
    require(p.alpha >= 2, "qt_conditions needs alpha >= 2");
    require(p.h >= 1 && p.ell >= 1 && p.r >= 1 && p.eps >= 0, "invalid network parameters");
    require(T >= 1, "T must be positive");
    const bool lll = lll_branch(p);
    const auto nn = nec_numerator(p, lll);
    const double sn = suf_numerator(p, lll);
    std::vector<QtRow> rows;
    for (std::int64_t t = 1; t <= T; ++t) {
        QtRow row;
        row.t = t;
        if (nn)
            row.necessary_log2 = *nn / static_cast<double>(p.ell * (p.eps * t + 1));
        const std::int64_t den = lll ? f_poly(p, t) : g_poly(p, t);
        if (den > 0)
            row.sufficient_log2 = lll ? sn * (p.alpha - 1) * t / static_cast<double>(den) : sn * t / static_cast<double>(den);
        rows.push_back(row);
    }
    return rows;
}

GapResult gap_bounds(const CombNetParams& p)
{
    require(p.alpha >= 2, "gap bounds need alpha >= 2");
    require(p.h >= 1 && p.ell >= 1 && p.r >= 1 && p.eps >= 0, "invalid network parameters");
    GapResult g;
    const bool lll = lll_branch(p);
    g.lll_branch = lll;
    const auto nn = nec_numerator(p, lll);
    const double sn = suf_numerator(p, lll);
    const std::int64_t l = p.ell, e = p.eps;
    const std::int64_t search_cap = 1000000;

    // threshold on log2(q^t) at a given t
    auto need = [&](std::int64_t t) { return nn ? std::max(0.0, *nn / static_cast<double>(l * (e * t + 1))) : 0.0; };

    std::int64_t tA = 1;
    while (tA < search_cap && static_cast<double>(tA) < need(tA))
        ++tA;
    g.t_A = tA;

    double best = static_cast<double>(tA);
    for (std::int64_t t = 1; t < tA; ++t) {
        const long double per = static_cast<long double>(need(t)) / t;
        const auto q = prime_power_ceil(std::exp2(per));
        double v;
        if (q) {
            v = static_cast<double>(t * std::log2(static_cast<long double>(*q)));
        } else {
            v = static_cast<double>(per * t);
            g.A_approx = true;
        }
        best = std::min(best, v);
    }
    g.A = best;

    const std::int64_t d1 = lll ? f_poly(p, 1) : g_poly(p, 1);
    if (d1 > 0)
        g.gap_ub = (lll ? (p.alpha - 1) * sn / d1 : sn / d1) - best;

    // smallest t with 2^{f(t)/(alpha-1)} >= r/beta, or 2^{g(t)} >= r/(alpha-1)
    for (std::int64_t t = 1; t <= search_cap; ++t) {
        const double lhs = lll ? static_cast<double>(f_poly(p, t)) / (p.alpha - 1) : static_cast<double>(g_poly(p, t));
        if (lhs >= sn) {
            g.t_lb = t;
            break;
        }
    }
    if (g.t_lb && nn)
        g.gap_lb = *nn / static_cast<double>(l * (e + 1)) - static_cast<double>(*g.t_lb);

    if (e >= 1) {
        if (nn) {
            const double tp = std::sqrt(*nn / static_cast<double>(l * e) + 1.0 / (4.0 * e * e)) - (2.0 * e + 1) / (2.0 * e);
            if (d1 > 0)
                g.cor_ub = (lll ? (p.alpha - 1) * sn / d1 : sn / d1) - std::max(tp, 1.0);
        }
        if (lll) {
            const std::int64_t c = (p.alpha * l + e - p.h) * e;
            if (c > 0 && nn && sn >= 0)
                g.cor_lb = *nn / static_cast<double>(l * (e + 1)) - std::sqrt((p.alpha - 1) * sn / static_cast<double>(c));
        } else if (sn >= 0) {
            g.cor_lb = (sn - 2.0) / static_cast<double>(l * (e + 1)) - std::sqrt(sn / static_cast<double>(l * e));
        }
    }
    return g;
}

BestBound best_bound(const CombNetParams& p)
{
    p.check();
    require(p.alpha >= 2, "best bound needs alpha >= 2");
    BestBound b;
    const bool low = p.h < 2 * p.ell + p.eps;
    const auto ub = rmax_upper(p);
    const auto lb = rmax_lower(p);
    auto pick = [](const std::vector<NetBound>& v, const std::string& name) {
        for (const auto& x : v)
            if (x.name == name)
                return x;
        fail(Errc::internal, "missing bound " + name);
    };
    if (p.alpha > 2) {
        b.upper_name = low ? "cor_EZ19_vector" : "cor_imupperbound_N";
        b.upper = pick(ub, b.upper_name);
    } else {
        // gamma q^{min{ell t (eps t + 1), (h - ell)(2 ell + eps - h) t^2 + (h - ell) t}}
        b.upper_name = "alpha2_min";
        const std::int64_t t = p.t, l = p.ell, e = p.eps, h = p.h;
        const std::int64_t ex = std::min(l * t * (e * t + 1), (h - l) * (2 * l + e - h) * t * t + (h - l) * t);
        NetBound n = make(b.upper_name, "upper", "alpha=2", nontrivial(p));
        if (n.applicable) {
            const BigFloat lv = lg_gamma() + lg(BigFloat(p.q)) * ex;
            if (exact_fits(lv))
                n.exact = gamma_exact() * BigRat(qpow(p.q, ex));
            finish(n, lv);
        }
        b.upper = n;
    }
    b.lower_name = low ? "cor_EK19" : "thm_LLL";
    b.lower = pick(lb, b.lower_name);
    return b;
}

} // namespace cwb
