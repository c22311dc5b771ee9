#include "cwb/skew.hpp"

#include "cwb/error.hpp"

#include <numeric>

namespace cwb {

SkewRing::SkewRing(FieldPtr f, int theta_power, Elem derivation_beta)
    : F(std::move(f)), j(theta_power), beta(derivation_beta)
{
    require(F != nullptr, "skew ring without field");
    const int m = static_cast<int>(F->m());
    j = ((j % m) + m) % m;
    require(beta < F->order(), "derivation element out of range");
}

Elem SkewRing::delta(Elem a) const
{
    if (beta == 0)
        return 0;
    return F->sub(F->mul(beta, a), F->mul(theta(a), beta));
}

int deg(const SPoly& f) { return f.empty() ? deg_zero : static_cast<int>(f.size()) - 1; }

void trim(SPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

SPoly monomial(Elem c, std::size_t i)
{
    if (c == 0)
        return {};
    SPoly f(i + 1, 0);
    f[i] = c;
    return f;
}

SPoly add(const SkewRing& R, const SPoly& f, const SPoly& g)
{
    SPoly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = R.F->add(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
    trim(r);
    return r;
}

SPoly sub(const SkewRing& R, const SPoly& f, const SPoly& g)
{
    SPoly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = R.F->sub(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
    trim(r);
    return r;
}

namespace {

// X * h
SPoly mul_x(const SkewRing& R, const SPoly& h)
{
    if (h.empty())
        return {};
    SPoly r(h.size() + 1, 0);
    for (std::size_t i = 0; i < h.size(); ++i) {
        r[i + 1] = R.F->add(r[i + 1], R.theta(h[i]));
        if (R.beta)
            r[i] = R.F->add(r[i], R.delta(h[i]));
    }
    trim(r);
    return r;
}

} // namespace

SPoly scale(const SkewRing& R, Elem c, const SPoly& f)
{
    if (c == 0)
        return {};
    SPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[i] = R.F->mul(c, f[i]);
    trim(r);
    return r;
}

SPoly mul(const SkewRing& R, const SPoly& f, const SPoly& g)
{
    if (f.empty() || g.empty())
        return {};
    SPoly acc;
    SPoly xg = g; // X^i * g
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0)
            xg = mul_x(R, xg);
        if (f[i])
            acc = add(R, acc, scale(R, f[i], xg));
    }
    return acc;
}

SPoly monic(const SkewRing& R, const SPoly& f)
{
    if (f.empty())
        return f;
    return scale(R, R.F->inv(f.back()), f);
}

std::pair<SPoly, SPoly> right_divide(const SkewRing& R, const SPoly& f, const SPoly& g)
{
    if (g.empty())
        fail(Errc::division_by_zero, "right division by the zero polynomial");
    const Field& F = *R.F;
    const int m = deg(g);
    const Elem ginv = F.inv(g.back());
    SPoly q, r = f;
    trim(r);
    while (deg(r) >= m) {
        const int d = deg(r) - m;
        // (c X^d) g has leading coefficient c * theta^d(g_m).
        const Elem c = F.mul(r.back(), R.theta(ginv, d));
        SPoly t = monomial(c, d);
        q = add(R, q, t);
        r = sub(R, r, mul(R, t, g));
    }
    return {q, r};
}

std::pair<SPoly, SPoly> left_divide(const SkewRing& R, const SPoly& f, const SPoly& g)
{
    if (g.empty())
        fail(Errc::division_by_zero, "left division by the zero polynomial");
    const Field& F = *R.F;
    const int m = deg(g);
    const Elem ginv = F.inv(g.back());
    SPoly q, r = f;
    trim(r);
    while (deg(r) >= m) {
        const int d = deg(r) - m;
        // g (c X^d) has leading coefficient g_m * theta^m(c).
        const Elem c = R.theta(F.mul(ginv, r.back()), -m);
        SPoly t = monomial(c, d);
        q = add(R, q, t);
        r = sub(R, r, mul(R, g, t));
    }
    return {q, r};
}

EeaResult gcrd_lclm(const SkewRing& R, const SPoly& f, const SPoly& g)
{
    if (deg(f) == deg_zero && deg(g) == deg_zero)
        fail(Errc::invalid_argument, "gcrd of two zero polynomials");
    SPoly r0 = f, r1 = g, u0{1}, u1, v0, v1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [qq, rr] = right_divide(R, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rr);
        SPoly u2 = sub(R, u0, mul(R, qq, u1));
        SPoly v2 = sub(R, v0, mul(R, qq, v1));
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    EeaResult res;
    const Elem c = R.F->inv(r0.back());
    res.gcrd = scale(R, c, r0);
    res.u = scale(R, c, u0);
    res.v = scale(R, c, v0);
    // u1 f + v1 g = 0 is the least common left multiple, up to a left unit.
    res.lclm = monic(R, mul(R, u1, f));
    return res;
}

Elem norm(const SkewRing& R, std::size_t i, Elem a)
{
    Elem n = 1;
    for (std::size_t k = 0; k < i; ++k)
        n = R.F->add(R.F->mul(R.theta(n), a), R.delta(n));
    return n;
}

Elem eval(const SkewRing& R, const SPoly& f, Elem a)
{
    const Field& F = *R.F;
    Elem acc = 0, n = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0)
            n = F.add(F.mul(R.theta(n), a), R.delta(n));
        if (f[i])
            acc = F.add(acc, F.mul(f[i], n));
    }
    return acc;
}

Elem conjugate(const SkewRing& R, Elem a, Elem c)
{
    if (c == 0)
        fail(Errc::division_by_zero, "conjugation by zero");
    const Field& F = *R.F;
    const Elem ci = F.inv(c);
    return F.add(F.mul(F.mul(R.theta(c), a), ci), F.mul(R.delta(c), ci));
}

Elem class_rep(const SkewRing& R, Elem a)
{
    // With Y = X - beta the ring becomes F[Y; theta], where a^c - beta = (a - beta) c^(q^j - 1).
    const Field& F = *R.F;
    const Elem b = F.sub(a, R.beta);
    if (b == 0)
        return R.beta;
    const std::uint64_t n = F.order() - 1;
    std::uint64_t qj = 1;
    for (int k = 0; k < R.j; ++k)
        qj *= F.q();
    const std::uint64_t g = std::gcd(qj - 1, n);
    const std::uint64_t l = F.log(b) % (g == 0 ? n : g);
    return F.add(F.gpow(static_cast<long long>(l)), R.beta);
}

SPoly minimal_polynomial(const SkewRing& R, const std::vector<Elem>& omega)
{
    require(!omega.empty(), "minimal polynomial of an empty set");
    SPoly g{1};
    for (Elem a : omega) {
        const Elem v = eval(R, g, a);
        if (v == 0)
            continue;
        // (X - a^v) g vanishes at a by the product rule.
        SPoly lin{R.F->neg(conjugate(R, a, v)), 1};
        g = mul(R, lin, g);
    }
    return g;
}

SPoly minimal_polynomial_lclm(const SkewRing& R, const std::vector<Elem>& omega)
{
    require(!omega.empty(), "minimal polynomial of an empty set");
    SPoly g{R.F->neg(omega[0]), 1};
    for (std::size_t i = 1; i < omega.size(); ++i)
        g = gcrd_lclm(R, g, SPoly{R.F->neg(omega[i]), 1}).lclm;
    return g;
}

Mat vandermonde(const SkewRing& R, const std::vector<Elem>& omega, std::size_t k)
{
    Mat V(k, omega.size());
    for (std::size_t c = 0; c < omega.size(); ++c) {
        Elem n = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (i > 0)
                n = R.F->add(R.F->mul(R.theta(n), omega[c]), R.delta(n));
            V(i, c) = n;
        }
    }
    return V;
}

bool is_p_independent(const SkewRing& R, const std::vector<Elem>& omega)
{
    if (omega.empty())
        return true;
    return rank(*R.F, vandermonde(R, omega, omega.size())) == omega.size();
}

SPoly right_to_left(const SkewRing& R, const SPoly& r)
{
    SPoly f, xi{1};
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i > 0)
            xi = mul(R, SPoly{0, 1}, xi);
        if (r[i])
            f = add(R, f, mul(R, xi, SPoly{r[i]}));
    }
    return f;
}

SPoly left_to_right(const SkewRing& R, const SPoly& f)
{
    SPoly rest = f, out;
    trim(rest);
    while (!rest.empty()) {
        const int d = deg(rest);
        // X^d c has leading coefficient theta^d(c).
        const Elem c = R.theta(rest.back(), -d);
        if (out.size() < static_cast<std::size_t>(d) + 1)
            out.resize(d + 1, 0);
        out[d] = c;
        rest = sub(R, rest, right_to_left(R, monomial(c, d)));
    }
    return out;
}

std::string to_string(const SkewRing& R, const SPoly& f)
{
    if (f.empty())
        return "0";
    std::string s;
    for (int i = deg(f); i >= 0; --i) {
        if (f[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        const std::string c = R.F->str(f[i]);
        if (i == 0)
            s += c;
        else {
            if (f[i] != 1)
                s += c + "*";
            s += i == 1 ? "X" : "X^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace cwb
