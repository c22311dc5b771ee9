#include "cwb/metric.hpp"

#include "cwb/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace cwb {

std::size_t OrderedPartition::n() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

void OrderedPartition::check(std::size_t len) const
{
    require(!parts.empty(), "empty partition");
    for (auto p : parts)
        require(p > 0, "partition parts must be positive");
    require(n() == len, "partition sums to " + std::to_string(n()) + " but the vector has length " + std::to_string(len));
}

const char* metric_name(Metric metric)
{
    switch (metric) {
    case Metric::hamming:
        return "hamming";
    case Metric::rank:
        return "rank";
    case Metric::sumrank:
        return "sumrank";
    }
    return "?";
}

std::size_t weight(const Field& F, const std::vector<Elem>& v, Metric metric, const OrderedPartition& part)
{
    switch (metric) {
    case Metric::hamming:
        return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
    case Metric::rank:
        return rank_q(F, v);
    case Metric::sumrank: {
        part.check(v.size());
        std::size_t w = 0, off = 0;
        for (auto p : part.parts) {
            std::vector<Elem> blk(v.begin() + off, v.begin() + off + p);
            if (std::any_of(blk.begin(), blk.end(), [](Elem x) { return x != 0; }))
                w += rank_q(F, blk);
            off += p;
        }
        return w;
    }
    }
    return 0;
}

std::size_t min_distance_bruteforce(const Field& F, const Mat& G, Metric metric, const OrderedPartition& part,
                                    const std::vector<Elem>& scalars)
{
    std::vector<Elem> alpha = scalars;
    if (alpha.empty()) {
        require(F.order() <= (1u << 24), "field too large to enumerate");
        alpha.resize(F.order());
        std::iota(alpha.begin(), alpha.end(), Elem{0});
    }
    require(!alpha.empty() && alpha[0] == 0, "scalar alphabet must start with zero");
    const std::size_t k = G.rows, n = G.cols;
    long double count = std::pow(static_cast<long double>(alpha.size()), static_cast<long double>(k));
    if (count > static_cast<long double>(1u << 24))
        fail(Errc::guard, "brute-force distance guard exceeded: " + std::to_string(static_cast<double>(count)) +
                              " codewords");
    if (metric == Metric::sumrank)
        part.check(n);
    std::vector<std::size_t> digit(k, 0);
    std::vector<Elem> c(n, 0);
    std::size_t best = n + 1;
    for (;;) {
        std::size_t i = 0;
        while (i < k && digit[i] + 1 == alpha.size()) {
            // roll over: alpha.back() -> 0
            for (std::size_t j = 0; j < n; ++j)
                c[j] = F.sub(c[j], F.mul(alpha.back(), G(i, j)));
            digit[i] = 0;
            ++i;
        }
        if (i == k)
            break;
        const Elem diff = F.sub(alpha[digit[i] + 1], alpha[digit[i]]);
        for (std::size_t j = 0; j < n; ++j)
            c[j] = F.add(c[j], F.mul(diff, G(i, j)));
        ++digit[i];
        if (std::all_of(c.begin(), c.end(), [](Elem x) { return x == 0; })) {
            // Dependent rows: a nonzero message mapping to zero gives distance 0.
            best = 0;
            continue;
        }
        best = std::min(best, weight(F, c, metric, part));
    }
    return best;
}

BigInt rank_count(std::size_t m, std::size_t n, std::size_t r, std::uint64_t q)
{
    if (r > std::min(m, n))
        return 0;
    BigInt num = 1, den = 1;
    const BigInt Q = q;
    for (std::size_t i = 0; i < r; ++i) {
        num *= (ipow(Q, m) - ipow(Q, i)) * (ipow(Q, n) - ipow(Q, i));
        den *= ipow(Q, r) - ipow(Q, i);
    }
    return num / den;
}

BigInt ball_hamming(std::size_t n, std::size_t radius, const BigInt& alphabet)
{
    BigInt s = 0;
    for (std::size_t i = 0; i <= std::min(radius, n); ++i)
        s += binom(n, i) * ipow(alphabet - 1, i);
    return s;
}

BigInt ball_rank(std::size_t m, std::size_t n, std::size_t radius, std::uint64_t q)
{
    BigInt s = 0;
    for (std::size_t r = 0; r <= std::min({radius, m, n}); ++r)
        s += rank_count(m, n, r, q);
    return s;
}

BigInt ball_sumrank(std::size_t m, const OrderedPartition& part, std::size_t radius, std::uint64_t q)
{
    const std::size_t l = part.parts.size();
    if (l * radius > 40)
        fail(Errc::guard, "sum-rank ball guard exceeded (l*radius > 40)");
    BigInt total = 0;
    std::vector<BigInt> cache;
    std::function<void(std::size_t, std::size_t, BigInt)> rec = [&](std::size_t blk, std::size_t left, BigInt acc) {
        if (blk == l) {
            total += acc;
            return;
        }
        const std::size_t cap = std::min({left, m, part.parts[blk]});
        for (std::size_t s = 0; s <= cap; ++s)
            rec(blk + 1, left - s, acc * rank_count(m, part.parts[blk], s, q));
    };
    rec(0, radius, BigInt(1));
    return total;
}

namespace {

BoundReport report(const std::string& metric, const std::string& name, const BigRat& v)
{
    return {metric, name, v, log10_of(v)};
}

} // namespace

std::vector<BoundReport> classical_bounds(Metric metric, std::size_t n, std::size_t d, std::uint64_t q, unsigned m,
                                          const OrderedPartition& part)
{
    require(d >= 1 && d <= n, "need 1 <= d <= n");
    const BigInt Q = ipow(BigInt(q), m);
    const std::string tag = metric_name(metric);
    std::vector<BoundReport> out;
    const std::size_t e = (d - 1) / 2;
    switch (metric) {
    case Metric::hamming: {
        const BigInt space = ipow(Q, n);
        out.push_back(report(tag, "singleton", BigRat(ipow(Q, n - d + 1))));
        out.push_back(report(tag, "sphere_packing", BigRat(space, ball_hamming(n, e, Q))));
        out.push_back(report(tag, "gilbert_varshamov", BigRat(space, ball_hamming(n, d - 1, Q))));
        break;
    }
    case Metric::rank: {
        const std::size_t big = std::max<std::size_t>(m, n), small = std::min<std::size_t>(m, n);
        require(d <= small, "rank distance exceeds min(m, n)");
        const BigInt space = ipow(BigInt(q), static_cast<std::uint64_t>(m) * n);
        out.push_back(report(tag, "singleton", BigRat(ipow(BigInt(q), big * (small - d + 1)))));
        out.push_back(report(tag, "sphere_packing", BigRat(space, ball_rank(m, n, e, q))));
        out.push_back(report(tag, "gilbert_varshamov", BigRat(space, ball_rank(m, n, d - 1, q))));
        break;
    }
    case Metric::sumrank: {
        part.check(n);
        const BigInt space = ipow(BigInt(q), static_cast<std::uint64_t>(m) * n);
        out.push_back(report(tag, "singleton", BigRat(ipow(Q, n - d + 1))));
        out.push_back(report(tag, "sphere_packing", BigRat(space, ball_sumrank(m, part, e, q))));
        out.push_back(report(tag, "gilbert_varshamov", BigRat(space, ball_sumrank(m, part, d - 1, q))));
        break;
    }
    }
    return out;
}

} // namespace cwb
