#include "cwb/qlrs.hpp"

#include "cwb/error.hpp"

#include <cmath>

namespace cwb {

void QlrsParams::check() const
{
    require(ell >= 1 && ell <= 31, "QLRS needs 1 <= ell <= 31");
    require(r >= 1 && r <= q() - 1, "QLRS needs 1 <= r <= q-1");
}

namespace {

// Anything that walks all q^2 monomials or positions.
void check_enumerable(const QlrsParams& p)
{
    p.check();
    if (p.ell > 12)
        fail(Errc::guard, "enumeration limited to ell <= 12");
}

} // namespace

std::uint64_t mod_star(std::uint64_t v, std::uint64_t q)
{
    if (v <= q - 1)
        return v;
    const std::uint64_t m = v % (q - 1);
    return m == 0 ? q - 1 : m;
}

namespace {

// Calls fn(i, j) for all i <=_2 b, j <=_2 b - i until fn returns true.
template <class Fn>
bool any_shadow_pair(std::uint64_t b, Fn fn)
{
    for (std::uint64_t i = b;; i = (i - 1) & b) {
        const std::uint64_t rest = b & ~i;
        for (std::uint64_t j = rest;; j = (j - 1) & rest) {
            if (fn(i, j))
                return true;
            if (j == 0)
                break;
        }
        if (i == 0)
            break;
    }
    return false;
}

} // namespace

bool is_good_monomial(std::uint64_t a, std::uint64_t b, const QlrsParams& p)
{
    const std::uint64_t q = p.q();
    require(a < q && b < q, "monomial exponents must lie in [0, q-1]");
    return !any_shadow_pair(b, [&](std::uint64_t i, std::uint64_t j) { return mod_star(2 * i + j + a, q) >= q - p.r; });
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> good_monomials(const QlrsParams& p)
{
    check_enumerable(p);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t a = 0; a < p.q(); ++a)
        for (std::uint64_t b = 0; b < p.q(); ++b)
            if (is_good_monomial(a, b, p))
                out.emplace_back(a, b);
    return out;
}

std::uint64_t dimension(const QlrsParams& p) { return good_monomials(p).size(); }

bool is_good_monomial_lines(std::uint64_t a, std::uint64_t b, const QlrsParams& p)
{
    const std::uint64_t q = p.q();
    require(a < q && b < q, "monomial exponents must lie in [0, q-1]");
    for (std::uint64_t i = a;; i = (i - 1) & a) {
        for (std::uint64_t j = b;; j = (j - 1) & b) {
            if (mod_star(i + j, q) >= q - p.r)
                return false;
            if (j == 0)
                break;
        }
        if (i == 0)
            break;
    }
    return true;
}

std::uint64_t lrs_dimension(const QlrsParams& p)
{
    check_enumerable(p);
    std::uint64_t k = 0;
    for (std::uint64_t a = 0; a < p.q(); ++a)
        for (std::uint64_t b = 0; b < p.q(); ++b)
            k += is_good_monomial_lines(a, b, p);
    return k;
}

std::optional<std::uint64_t> lrs_r_for_dimension(unsigned ell, std::uint64_t k)
{
    for (std::uint64_t r = 1; r < (std::uint64_t{1} << ell); ++r)
        if (lrs_dimension({ell, r}) == k)
            return r;
    return std::nullopt;
}

std::optional<std::uint64_t> qlrs_r_for_dimension(unsigned ell, std::uint64_t k)
{
    for (std::uint64_t r = 1; r < (std::uint64_t{1} << ell); ++r)
        if (dimension({ell, r}) == k)
            return r;
    return std::nullopt;
}

IjReduction ij_reduce(unsigned ell, std::uint64_t i, std::uint64_t j)
{
    require(ell >= 1 && ell <= 62, "ij_reduce needs 1 <= ell <= 62");
    auto bit = [](std::uint64_t x, unsigned h) -> std::int64_t { return (x >> (h - 1)) & 1; };
    auto clear = [](std::uint64_t& x, unsigned h) { x &= ~(std::uint64_t{1} << (h - 1)); };
    IjReduction out{i, j, false};
    unsigned h = ell;
    std::int64_t Delta = 1;
    while (h != 1) {
        --h;
        Delta *= 2;
        const std::int64_t bi = bit(out.i, h), bj = bit(out.j, h + 1);
        const std::int64_t delta = Delta - bi - bj;
        if (delta > 0) {
            clear(out.i, h);
            clear(out.j, h + 1);
            Delta = delta; // what is still owed, in units of 2^h
            continue;
        }
        if (Delta - bi == 0)
            clear(out.i, h);
        else if (Delta - bj == 0)
            clear(out.j, h + 1);
        else {
            clear(out.i, h);
            clear(out.j, h + 1);
        }
        out.reduced = true;
        return out;
    }
    return out;
}

bool in_S_t(std::uint64_t a, std::uint64_t b, unsigned t, const QlrsParams& p)
{
    const std::uint64_t q = p.q();
    return any_shadow_pair(b, [&](std::uint64_t i, std::uint64_t j) {
        const std::uint64_t v = 2 * i + j + a, hi = q + t * q;
        return v < hi && v >= hi - p.r;
    });
}

std::array<BigInt, 3> s_vector_exhaustive(const QlrsParams& p)
{
    check_enumerable(p);
    std::array<BigInt, 3> s{0, 0, 0};
    for (std::uint64_t a = 0; a < p.q(); ++a)
        for (std::uint64_t b = 0; b < p.q(); ++b)
            for (unsigned t = 0; t < 3; ++t)
                if (in_S_t(a, b, t, p))
                    s[t] += 1;
    return s;
}

std::uint64_t s_star_exhaustive(const QlrsParams& p) { return p.q() * p.q() - dimension(p); }

unsigned recursion_start(std::uint64_t r)
{
    require(r >= 1, "r must be positive");
    unsigned ell = 1;
    while ((std::uint64_t{1} << ell) <= r)
        ++ell;
    return ell;
}

std::array<BigInt, 3> s_vector_recursive(const QlrsParams& p)
{
    p.check();
    const unsigned l0 = recursion_start(p.r);
    std::array<BigInt, 3> s = s_vector_exhaustive({l0, p.r});
    for (unsigned l = l0; l < p.ell; ++l)
        s = {3 * s[0] + s[1], s[0] + s[1] + s[2], s[2]};
    return s;
}

const double lambda1 = 2.0 + std::sqrt(2.0);
const double lambda2 = 2.0 - std::sqrt(2.0);
const double mu = std::log2(2.0 + std::sqrt(2.0));

double s0_r1(double ell)
{
    const double r2 = std::sqrt(2.0);
    return (5 * r2 + 7) / (2 * (3 * r2 + 4)) * std::pow(lambda1, ell) +
           (5 * r2 - 7) / (2 * (3 * r2 - 4)) * std::pow(lambda2, ell);
}

double s0_r3(double ell)
{
    const double r2 = std::sqrt(2.0);
    return (65 * r2 + 92) / (4 * (12 * r2 + 17)) * std::pow(lambda1, ell) +
           (65 * r2 - 92) / (4 * (12 * r2 - 17)) * std::pow(lambda2, ell) - 1.0;
}

BadBounds bad_count_bounds(const QlrsParams& p)
{
    p.check();
    if (p.ell < 2 || 4 * p.r > p.q())
        fail(Errc::guard, "bad-monomial bounds need ell >= 2 and 1 <= r <= q/4");
    BadBounds out;
    out.power_of_two = (p.r & (p.r - 1)) == 0;
    const double s = std::log2(double(p.r));
    if (out.power_of_two) {
        const double e = double(p.ell) - std::round(s);
        out.lower = s0_r1(e);
        out.upper = s0_r3(e);
    } else {
        out.strict = true;
        out.lower = s0_r1(double(p.ell) - std::floor(s)) / 4;
        out.upper = 4 * s0_r3(double(p.ell) - std::ceil(s));
    }
    return out;
}

DistanceBounds distance_bounds(const QlrsParams& p)
{
    p.check();
    return {p.q() * p.r + 1, p.q() * p.r + p.q()};
}

namespace {

Elem mono(const Field& F, Elem x, std::uint64_t a)
{
    return a == 0 ? Elem{1} : F.pow(x, a);
}

} // namespace

std::vector<Elem> encode(const QlrsParams& p, const std::vector<Monomial>& f)
{
    check_enumerable(p);
    const std::uint64_t q = p.q();
    for (const auto& m : f)
        if (m.coef != 0 && !is_good_monomial(m.a, m.b, p))
            fail(Errc::invalid_argument, "coefficient on a bad monomial");
    const Field& F = *Field::make(2, p.ell);
    std::vector<Elem> w(q * q, 0);
    for (Elem x = 0; x < q; ++x)
        for (Elem y = 0; y < q; ++y) {
            Elem acc = 0;
            for (const auto& m : f)
                acc = F.add(acc, F.mul(m.coef, F.mul(mono(F, x, m.a), mono(F, y, m.b))));
            w[x * q + y] = acc;
        }
    return w;
}

Mat evaluation_matrix(const QlrsParams& p)
{
    const auto good = good_monomials(p);
    const std::uint64_t q = p.q();
    Mat G(good.size(), q * q);
    for (std::size_t k = 0; k < good.size(); ++k) {
        const auto w = encode(p, {{good[k].first, good[k].second, 1}});
        for (std::size_t c = 0; c < w.size(); ++c)
            G(k, c) = w[c];
    }
    return G;
}

std::uint64_t constraint_dimension(const QlrsParams& p)
{
    check_enumerable(p);
    const std::uint64_t q = p.q();
    const Field& F = *Field::make(2, p.ell);
    // Over F_q, the coefficient of x^s (s >= 1) of the interpolant of g is sum_x g(x) x^(q-1-s).
    Mat C(0, q * q);
    for (Elem al = 0; al < q; ++al)
        for (Elem be = 0; be < q; ++be)
            for (Elem ga = 0; ga < q; ++ga)
                for (std::uint64_t s = q - p.r; s < q; ++s) {
                    std::vector<Elem> row(q * q, 0);
                    for (Elem x = 0; x < q; ++x) {
                        const Elem y = F.add(F.add(F.mul(al, F.mul(x, x)), F.mul(be, x)), ga);
                        row[x * q + y] = F.add(row[x * q + y], mono(F, x, q - 1 - s));
                    }
                    C.append_row(row);
                }
    return q * q - rank(F, C);
}

std::uint64_t min_distance_bruteforce(const QlrsParams& p)
{
    const Mat G = evaluation_matrix(p);
    const std::uint64_t q = p.q();
    const std::size_t k = G.rows, n = G.cols;
    if (double(k) * double(p.ell) > 24)
        fail(Errc::guard, "brute-force distance limited to q^k <= 2^24");
    const Field& F = *Field::make(2, p.ell);
    std::vector<Elem> digit(k, 0), word(n, 0);
    std::uint64_t best = n;
    for (;;) {
        std::size_t pos = 0;
        while (pos < k && digit[pos] == q - 1) {
            for (std::size_t c = 0; c < n; ++c)
                word[c] = F.sub(word[c], F.mul(q - 1, G(pos, c)));
            digit[pos++] = 0;
        }
        if (pos == k)
            break;
        const Elem diff = F.sub(digit[pos] + 1, digit[pos]);
        for (std::size_t c = 0; c < n; ++c)
            word[c] = F.add(word[c], F.mul(diff, G(pos, c)));
        ++digit[pos];
        std::uint64_t wt = 0;
        for (auto v : word)
            wt += v != 0;
        if (wt > 0 && wt < best)
            best = wt;
    }
    return best;
}

Recovery local_recover(const QlrsParams& p, const std::vector<Elem>& word, const std::vector<bool>& erased,
                       std::uint64_t pos)
{
    check_enumerable(p);
    const std::uint64_t q = p.q();
    require(word.size() == q * q && erased.size() == q * q, "word length must be q^2");
    require(pos < q * q, "position out of range");
    const Field& F = *Field::make(2, p.ell);
    const Elem x0 = pos / q, y0 = pos % q;
    Recovery out;
    for (Elem al = 0; al < q; ++al)
        for (Elem be = 0; be < q; ++be) {
            ++out.curves_tried;
            const Elem ga = F.sub(y0, F.add(F.mul(al, F.mul(x0, x0)), F.mul(be, x0)));
            std::vector<std::pair<Elem, Elem>> known;
            std::uint64_t lost = 0;
            for (Elem x = 0; x < q; ++x) {
                if (x == x0)
                    continue;
                const Elem y = F.add(F.add(F.mul(al, F.mul(x, x)), F.mul(be, x)), ga);
                if (erased[x * q + y])
                    ++lost;
                else
                    known.emplace_back(x, word[x * q + y]);
            }
            if (lost + 1 > p.r)
                continue;
            // The restriction has degree < q - r: Lagrange through q - r known points.
            known.resize(q - p.r);
            Elem v = 0;
            for (std::size_t u = 0; u < known.size(); ++u) {
                Elem num = 1, den = 1;
                for (std::size_t w = 0; w < known.size(); ++w)
                    if (w != u) {
                        num = F.mul(num, F.sub(x0, known[w].first));
                        den = F.mul(den, F.sub(known[u].first, known[w].first));
                    }
                v = F.add(v, F.mul(known[u].second, F.div(num, den)));
            }
            out.recovered = true;
            out.value = v;
            return out;
        }
    return out;
}

double lrs_fail_prob(std::uint64_t q, std::uint64_t r, double tau)
{
    require(tau >= 0 && tau <= 1, "tau must lie in [0, 1]");
    require(r >= 1 && r <= q - 1, "need 1 <= r <= q-1");
    double sum = 0;
    for (std::uint64_t i = r; i <= q - 1; ++i)
        sum += std::exp(std::lgamma(double(q)) - std::lgamma(double(i + 1)) - std::lgamma(double(q - i))) *
               std::pow(tau, double(i)) * std::pow(1 - tau, double(q - 1 - i));
    return std::pow(sum, double(q + 1));
}

double LocalSim::sigma() const
{
    if (trials == 0)
        return 0;
    const double p = rate();
    return std::sqrt(p * (1 - p) / double(trials));
}

namespace {

template <class CurveScan>
LocalSim simulate(const QlrsParams& p, double tau, std::uint64_t trials, std::uint64_t seed, CurveScan scan)
{
    check_enumerable(p);
    require(tau >= 0 && tau <= 1, "tau must lie in [0, 1]");
    const std::uint64_t q = p.q();
    const Field& F = *Field::make(2, p.ell);
    LocalSim out;
    out.trials = trials;
    std::vector<bool> erased(q * q);
    for (std::uint64_t k = 0; k < trials; ++k) {
        Rng rng = stream(seed, k);
        const std::uint64_t pos = uniform(rng, q * q);
        for (std::uint64_t c = 0; c < q * q; ++c)
            erased[c] = c == pos || uniform01(rng) < tau;
        out.failures += !scan(F, erased, pos);
    }
    return out;
}

} // namespace

LocalSim simulate_local(const QlrsParams& p, double tau, std::uint64_t trials, std::uint64_t seed)
{
    const std::uint64_t q = p.q();
    return simulate(p, tau, trials, seed, [&](const Field& F, const std::vector<bool>& erased, std::uint64_t pos) {
        const Elem x0 = pos / q, y0 = pos % q;
        for (Elem al = 0; al < q; ++al)
            for (Elem be = 0; be < q; ++be) {
                const Elem ga = F.sub(y0, F.add(F.mul(al, F.mul(x0, x0)), F.mul(be, x0)));
                std::uint64_t lost = 0;
                for (Elem x = 0; x < q && lost < p.r; ++x)
                    if (x != x0)
                        lost += erased[x * q + F.add(F.add(F.mul(al, F.mul(x, x)), F.mul(be, x)), ga)];
                if (lost < p.r)
                    return true;
            }
        return false;
    });
}

LocalSim simulate_local_lines(const QlrsParams& p, double tau, std::uint64_t trials, std::uint64_t seed)
{
    const std::uint64_t q = p.q();
    return simulate(p, tau, trials, seed, [&](const Field& F, const std::vector<bool>& erased, std::uint64_t pos) {
        const Elem x0 = pos / q, y0 = pos % q;
        std::uint64_t lost = 0;
        for (Elem y = 0; y < q; ++y)
            if (y != y0)
                lost += erased[x0 * q + y];
        if (lost < p.r)
            return true;
        for (Elem be = 0; be < q; ++be) {
            const Elem ga = F.sub(y0, F.mul(be, x0));
            lost = 0;
            for (Elem x = 0; x < q; ++x)
                if (x != x0)
                    lost += erased[x * q + F.add(F.mul(be, x), ga)];
            if (lost < p.r)
                return true;
        }
        return false;
    });
}

} // namespace cwb
