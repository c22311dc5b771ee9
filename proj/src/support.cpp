#include "cwb/support.hpp"

#include "cwb/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace cwb {

void ZeroPattern::check() const
{
    require(k >= 1, "pattern needs k >= 1");
    require(Z.size() == k, "pattern must list one zero set per row");
    for (std::size_t i = 0; i < k; ++i) {
        std::set<std::size_t> s(Z[i].begin(), Z[i].end());
        require(s.size() == Z[i].size(), "row " + std::to_string(i + 1) + ": repeated column");
        for (auto j : Z[i])
            require(j < n, "row " + std::to_string(i + 1) + ": column out of range");
    }
}

namespace {

using IndexSet = std::vector<std::size_t>;

IndexSet sorted(IndexSet s)
{
    std::sort(s.begin(), s.end());
    return s;
}

IndexSet intersect(const IndexSet& a, const IndexSet& b)
{
    IndexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

struct ClosedSet {
    IndexSet cols;
    IndexSet rows;  // every row whose zero set contains cols
};

// All intersections of nonempty row subsets, each with its maximal row set.
std::vector<ClosedSet> closed_sets(const ZeroPattern& p)
{
    constexpr std::size_t limit = 200000;
    std::vector<IndexSet> Z;
    for (const auto& z : p.Z)
        Z.push_back(sorted(z));
    std::set<IndexSet> seen;
    std::deque<IndexSet> todo;
    for (const auto& z : Z)
        if (seen.insert(z).second)
            todo.push_back(z);
    while (!todo.empty()) {
        IndexSet cur = std::move(todo.front());
        todo.pop_front();
        for (const auto& z : Z) {
            IndexSet nxt = intersect(cur, z);
            if (seen.insert(nxt).second) {
                if (seen.size() > limit)
                    fail(Errc::guard, "zero pattern has too many distinct intersections");
                todo.push_back(std::move(nxt));
            }
        }
    }
    std::vector<ClosedSet> out;
    for (const auto& s : seen) {
        ClosedSet c{s, {}};
        for (std::size_t i = 0; i < Z.size(); ++i)
            if (std::includes(Z[i].begin(), Z[i].end(), s.begin(), s.end()))
                c.rows.push_back(i);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

std::optional<std::vector<std::size_t>> gm_check(const ZeroPattern& pattern)
{
    pattern.check();
    for (const auto& c : closed_sets(pattern))
        if (c.cols.size() + c.rows.size() > pattern.k)
            return c.rows;
    return std::nullopt;
}

std::size_t ktilde(const ZeroPattern& pattern)
{
    pattern.check();
    std::size_t best = 0;
    for (const auto& c : closed_sets(pattern))
        best = std::max(best, c.cols.size() + c.rows.size());
    return best;
}

ZeroPattern pad_pattern(const ZeroPattern& pattern)
{
    if (auto bad = gm_check(pattern))
        fail(Errc::guard, "pattern violates the GM-MSRD condition");
    ZeroPattern p = pattern;
    for (std::size_t i = 0; i < p.k; ++i) {
        for (std::size_t j = 0; j < p.n && p.Z[i].size() + 1 < p.k; ++j) {
            if (std::find(p.Z[i].begin(), p.Z[i].end(), j) != p.Z[i].end())
                continue;
            p.Z[i].push_back(j);
            if (gm_check(p))
                p.Z[i].pop_back();
        }
        if (p.Z[i].size() + 1 != p.k)
            fail(Errc::internal, "padding stalled at row " + std::to_string(i + 1));
        std::sort(p.Z[i].begin(), p.Z[i].end());
    }
    return p;
}

unsigned field_size_bound(std::size_t k, std::uint64_t q, const std::vector<std::size_t>& lengths, FieldRule rule)
{
    require(k >= 1, "need k >= 1");
    require(!lengths.empty(), "need at least one block");
    require(q > lengths.size(), "need q >= l + 1");
    std::size_t m = *std::max_element(lengths.begin(), lengths.end());
    if (rule == FieldRule::compact)
        return static_cast<unsigned>(std::max(m, k));
    // smallest m with m >= k - 1 and q^(m - k + 1) >= k
    std::size_t e = 0;
    BigInt qe = 1;
    while (qe < k) {
        qe *= q;
        ++e;
    }
    return static_cast<unsigned>(std::max(m, k - 1 + e));
}

namespace {

std::vector<Elem> random_basis_block(const Field& F, std::size_t len, Rng& rng)
{
    for (;;) {
        std::vector<Elem> b(len);
        for (auto& x : b)
            x = 1 + uniform(rng, F.order() - 1);
        if (rank_q(F, b) == len)
            return b;
    }
}

} // namespace

Construction build_constrained_generator(const LrsSpec& spec_in, const ZeroPattern& pattern, Rng& rng,
                                         std::size_t budget)
{
    spec_in.check();
    pattern.check();
    require(pattern.k == spec_in.k, "pattern row count must equal k");
    require(pattern.n == spec_in.n(), "pattern length must equal n");
    if (auto bad = gm_check(pattern)) {
        std::string rows;
        for (auto i : *bad)
            rows += (rows.empty() ? "" : ",") + std::to_string(i + 1);
        fail(Errc::guard, "GM-MSRD condition violated by rows {" + rows + "}");
    }
    const std::size_t k = spec_in.k, n = spec_in.n();
    const SkewRing R(spec_in.F, 1, 0);
    const Field& F = *spec_in.F;
    std::vector<IndexSet> Z;
    for (const auto& z : pattern.Z)
        Z.push_back(sorted(z));

    Construction c;
    c.spec = spec_in;
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        c.attempts = attempt + 1;
        if (attempt > 0)
            for (auto& blk : c.spec.b)
                blk = random_basis_block(F, blk.size(), rng);
        const auto L = code_locators(c.spec);
        c.G_lrs = generator_matrix(c.spec);
        c.T = Mat(k, k);
        for (std::size_t i = 0; i < k; ++i) {
            SPoly f{1};
            if (!Z[i].empty()) {
                std::vector<Elem> roots;
                for (auto j : Z[i])
                    roots.push_back(L[j]);
                f = minimal_polynomial(R, roots);
                if (deg(f) != static_cast<int>(roots.size()))
                    fail(Errc::internal, "root set of row " + std::to_string(i + 1) + " is not P-independent");
            }
            const std::size_t extra = k - 1 - Z[i].size();
            if (extra > 0) {
                SPoly g(extra + 1, 0);
                for (std::size_t u = 0; u < extra; ++u)
                    g[u] = uniform(rng, F.order());
                g[extra] = 1;
                f = mul(R, g, f);
            }
            for (std::size_t u = 0; u < f.size(); ++u)
                c.T(i, u) = f[u];
        }
        if (rank(F, c.T) != k)
            continue;
        c.G = matmul(F, c.T, c.G_lrs);
        bool exact = true;
        for (std::size_t i = 0; i < k && exact; ++i) {
            IndexSet zeros;
            for (std::size_t j = 0; j < n; ++j)
                if (c.G(i, j) == 0)
                    zeros.push_back(j);
            exact = zeros == Z[i];
        }
        if (exact)
            return c;
    }
    fail(Errc::guard, "no full-rank T with exact zero placement after " + std::to_string(budget) + " attempts");
}

Construction build_subcode_generator(const LrsSpec& spec, const ZeroPattern& pattern, Rng& rng, std::size_t budget)
{
    const std::size_t kt = ktilde(pattern);
    ZeroPattern ext = pattern;
    ext.k = kt;
    ext.Z.resize(kt);
    LrsSpec s = spec;
    s.k = kt;
    Construction c = build_constrained_generator(s, ext, rng, budget);
    const std::size_t k = pattern.k;
    Mat T(k, kt), G(k, c.G.cols);
    std::copy(c.T.a.begin(), c.T.a.begin() + k * kt, T.a.begin());
    std::copy(c.G.a.begin(), c.G.a.begin() + k * c.G.cols, G.a.begin());
    c.T = std::move(T);
    c.G = std::move(G);
    return c;
}

void NetworkInstance::check() const
{
    require(h >= 1 && h <= 12, "need 1 <= h <= 12");
    require(r.size() == h, "need one length per message");
    require(!access.empty(), "need at least one access set");
    require(ell >= 1, "need l >= 1");
    for (const auto& J : access) {
        require(!J.empty(), "access sets must be nonempty");
        for (auto i : J)
            require(i < h, "access set refers to an unknown message");
    }
}

namespace {

struct Ilp {
    std::size_t s = 0;
    std::vector<std::uint32_t> var_mask;  // messages accessible to J
    std::vector<std::uint32_t> subset;    // constraint J' as bitmask
    std::vector<std::size_t> need;
    std::vector<std::vector<std::size_t>> covers;  // variables meeting J'
    std::vector<std::size_t> ub;
};

Ilp make_ilp(const NetworkInstance& inst)
{
    inst.check();
    Ilp P;
    P.s = inst.access.size();
    for (const auto& J : inst.access) {
        std::uint32_t mask = 0;
        for (auto i : J)
            mask |= 1u << i;
        P.var_mask.push_back(mask);
    }
    const std::size_t c = 2 * inst.ell * inst.t + inst.rho;  // dominates 2t + rho
    P.ub.assign(P.s, 0);
    for (std::uint32_t sub = 1; sub < (1u << inst.h); ++sub) {
        std::size_t need = c;
        for (std::size_t i = 0; i < inst.h; ++i)
            if (sub >> i & 1u)
                need += inst.r[i];
        std::vector<std::size_t> cov;
        for (std::size_t v = 0; v < P.s; ++v)
            if (P.var_mask[v] & sub)
                cov.push_back(v);
        if (cov.empty()) {
            std::string ms;
            for (std::size_t i = 0; i < inst.h; ++i)
                if (sub >> i & 1u)
                    ms += (ms.empty() ? "" : ",") + std::to_string(i + 1);
            fail(Errc::guard, "infeasible: no source can access messages {" + ms + "}");
        }
        for (auto v : cov)
            P.ub[v] = std::max(P.ub[v], need);
        P.subset.push_back(sub);
        P.need.push_back(need);
        P.covers.push_back(std::move(cov));
    }
    return P;
}

std::string subset_str(std::uint32_t sub, std::size_t h)
{
    std::string s;
    for (std::size_t i = 0; i < h; ++i)
        if (sub >> i & 1u)
            s += (s.empty() ? "" : ",") + std::to_string(i + 1);
    return "{" + s + "}";
}

} // namespace

bool design_feasible(const NetworkInstance& inst, const std::vector<std::size_t>& nJ, std::string* violated)
{
    inst.check();
    require(nJ.size() == inst.access.size(), "need one length per access set");
    const std::size_t c_cap = 2 * inst.t + inst.rho, c_zero = 2 * inst.ell * inst.t + inst.rho;
    std::vector<std::uint32_t> masks;
    for (const auto& J : inst.access) {
        std::uint32_t mask = 0;
        for (auto i : J)
            mask |= 1u << i;
        masks.push_back(mask);
    }
    for (std::uint32_t sub = 1; sub < (1u << inst.h); ++sub) {
        std::size_t rsum = 0, cover = 0;
        for (std::size_t i = 0; i < inst.h; ++i)
            if (sub >> i & 1u)
                rsum += inst.r[i];
        for (std::size_t v = 0; v < masks.size(); ++v)
            if (masks[v] & sub)
                cover += nJ[v];
        for (auto [c, name] : {std::pair{c_cap, "capacity"}, std::pair{c_zero, "zero"}})
            if (cover < rsum + c) {
                if (violated)
                    *violated = std::string(name) + " constraint for " + subset_str(sub, inst.h) + ": " +
                                std::to_string(cover) + " < " + std::to_string(rsum + c);
                return false;
            }
    }
    return true;
}

std::vector<std::size_t> solve_design_ilp(const NetworkInstance& inst)
{
    const Ilp P = make_ilp(inst);
    const std::size_t nc = P.subset.size();
    // Variables covering the fewest constraints go last, so bounds bite early.
    std::vector<std::size_t> order(P.s);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::size_t> pos(P.s);
    for (std::size_t i = 0; i < P.s; ++i)
        pos[order[i]] = i;
    // last_pos[c]: highest position among variables covering constraint c
    std::vector<std::size_t> last_pos(nc, 0);
    for (std::size_t c = 0; c < nc; ++c)
        for (auto v : P.covers[c])
            last_pos[c] = std::max(last_pos[c], pos[v]);

    std::vector<std::size_t> best = P.ub, cur(P.s, 0), cov(nc, 0);
    std::size_t best_sum = std::accumulate(best.begin(), best.end(), std::size_t{0});

    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t idx, std::size_t sum) {
        // lower bound from remaining deficits; dead ends when a deficit cannot be covered
        std::size_t lb = 0;
        for (std::size_t c = 0; c < nc; ++c) {
            if (cov[c] >= P.need[c])
                continue;
            if (idx > last_pos[c])
                return;
            lb = std::max(lb, P.need[c] - cov[c]);
        }
        if (lb == 0) {
            if (sum < best_sum) {
                best_sum = sum;
                best = cur;
            }
            return;
        }
        if (sum + lb >= best_sum)
            return;
        const std::size_t v = order[idx];
        std::vector<std::size_t> mine;
        for (std::size_t c = 0; c < nc; ++c)
            if (P.var_mask[v] & P.subset[c])
                mine.push_back(c);
        for (std::size_t val = 0; val <= P.ub[v] && sum + val < best_sum; ++val) {
            cur[v] = val;
            if (val > 0)
                for (auto c : mine)
                    ++cov[c];
            dfs(idx + 1, sum + val);
        }
        for (auto c : mine)
            cov[c] -= cur[v];
        cur[v] = 0;
    };
    dfs(0, 0);
    return best;
}

std::vector<std::size_t> solve_design_exhaustive(const NetworkInstance& inst)
{
    const Ilp P = make_ilp(inst);
    long double space = 1;
    for (auto u : P.ub)
        space *= static_cast<long double>(u + 1);
    if (space > 5e7L)
        fail(Errc::guard, "exhaustive design search too large");
    std::vector<std::size_t> cur(P.s, 0), best;
    std::size_t best_sum = std::numeric_limits<std::size_t>::max();
    for (;;) {
        const std::size_t sum = std::accumulate(cur.begin(), cur.end(), std::size_t{0});
        if (sum < best_sum) {
            bool ok = true;
            for (std::size_t c = 0; c < P.subset.size() && ok; ++c) {
                std::size_t cover = 0;
                for (auto v : P.covers[c])
                    cover += cur[v];
                ok = cover >= P.need[c];
            }
            if (ok) {
                best_sum = sum;
                best = cur;
            }
        }
        std::size_t i = 0;
        while (i < P.s && cur[i] == P.ub[i])
            cur[i++] = 0;
        if (i == P.s)
            break;
        ++cur[i];
    }
    return best;
}

ZeroPattern design_pattern(const NetworkInstance& inst, const std::vector<std::size_t>& nJ)
{
    inst.check();
    ZeroPattern p;
    p.n = std::accumulate(nJ.begin(), nJ.end(), std::size_t{0});
    p.k = std::accumulate(inst.r.begin(), inst.r.end(), std::size_t{0});
    std::size_t row = 0;
    for (std::size_t u = 0; u < inst.h; ++u)
        for (std::size_t x = 0; x < inst.r[u]; ++x, ++row) {
            std::vector<std::size_t> z;
            std::size_t col = 0;
            for (std::size_t v = 0; v < inst.access.size(); ++v) {
                const auto& J = inst.access[v];
                const bool has = std::find(J.begin(), J.end(), u) != J.end();
                for (std::size_t y = 0; y < nJ[v]; ++y, ++col)
                    if (!has)
                        z.push_back(col);
            }
            p.Z.push_back(std::move(z));
        }
    return p;
}

std::vector<std::size_t> split_blocks(std::size_t n, std::size_t ell)
{
    require(ell >= 1 && ell <= n, "need 1 <= l <= n");
    std::vector<std::size_t> out;
    std::size_t prev = 0;
    for (std::size_t i = 1; i <= ell; ++i) {
        const auto cut = static_cast<std::size_t>(std::llround(static_cast<double>(i * n) / static_cast<double>(ell)));
        out.push_back(cut - prev);
        prev = cut;
    }
    return out;
}

std::uint64_t smallest_prime_power_at_least(std::uint64_t x)
{
    for (std::uint64_t q = std::max<std::uint64_t>(x, 2);; ++q)
        if (prime_power(q).first != 0)
            return q;
}

DesignResult distributed_design(const NetworkInstance& inst, std::uint64_t seed, bool construct,
                                std::size_t max_construct_k)
{
    DesignResult res;
    res.nJ = solve_design_ilp(inst);
    std::string why;
    if (!design_feasible(inst, res.nJ, &why))
        fail(Errc::internal, "solver returned an infeasible point: " + why);
    res.n = std::accumulate(res.nJ.begin(), res.nJ.end(), std::size_t{0});
    res.k = std::accumulate(inst.r.begin(), inst.r.end(), std::size_t{0});
    res.d = 2 * inst.ell * inst.t + inst.rho + 1;
    res.pattern = design_pattern(inst, res.nJ);
    res.ktilde = ktilde(res.pattern);
    res.blocks = split_blocks(res.n, inst.ell);
    res.q = smallest_prime_power_at_least(inst.ell + 1);
    res.m = field_size_bound(res.ktilde, res.q, res.blocks, FieldRule::compact);
    if (!construct) {
        res.construction_note = "construction not requested";
        return res;
    }
    if (res.ktilde > max_construct_k) {
        res.construction_note = "construction skipped: ktilde = " + std::to_string(res.ktilde) + " exceeds " +
                                std::to_string(max_construct_k);
        return res;
    }
    if (static_cast<double>(res.m) * std::log2(static_cast<double>(res.q)) > 62.0) {
        res.construction_note = "construction skipped: field exceeds 62 bits";
        return res;
    }
    auto F = Field::make(res.q, res.m);
    Rng rng = stream(seed, 0);
    res.construction = build_subcode_generator(default_lrs(F, res.blocks, res.ktilde), res.pattern, rng);
    res.constructed = true;
    res.construction_note = "constructed after " + std::to_string(res.construction.attempts) + " attempt(s)";
    return res;
}

Mat lift(const Field& F, const std::vector<std::vector<Elem>>& codeword_blocks)
{
    std::size_t n = 0;
    for (const auto& b : codeword_blocks)
        n += b.size();
    Mat X(n, n + F.m());
    std::size_t row = 0;
    for (const auto& b : codeword_blocks)
        for (Elem c : b) {
            X(row, row) = 1;
            const auto co = F.coords(c);
            for (unsigned i = 0; i < F.m(); ++i)
                X(row, n + i) = co[i];
            ++row;
        }
    return X;
}

} // namespace cwb
