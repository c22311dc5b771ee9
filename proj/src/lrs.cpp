#include "cwb/lrs.hpp"

#include "cwb/error.hpp"

#include <set>

namespace cwb {

std::size_t LrsSpec::n() const
{
    std::size_t s = 0;
    for (const auto& blk : b)
        s += blk.size();
    return s;
}

OrderedPartition LrsSpec::partition() const
{
    OrderedPartition p;
    for (const auto& blk : b)
        p.parts.push_back(blk.size());
    return p;
}

void LrsSpec::check() const
{
    require(F != nullptr, "LRS spec without field");
    require(!a.empty(), "LRS spec without blocks");
    require(a.size() == b.size(), "representative count differs from block count");
    require(a.size() <= F->q() - 1, "at most q-1 blocks are possible");
    require(k >= 1 && k <= n(), "need 1 <= k <= n");
    const SkewRing R(F, 1, 0);
    std::set<Elem> classes;
    for (std::size_t l = 0; l < a.size(); ++l) {
        const std::string tag = "block " + std::to_string(l + 1);
        require(a[l] != 0 && a[l] < F->order(), tag + ": representative must be a nonzero field element");
        require(classes.insert(class_rep(R, a[l])).second, tag + ": representative shares a conjugacy class");
        require(!b[l].empty() && b[l].size() <= F->m(), tag + ": length must be in [1, m]");
        for (Elem x : b[l])
            require(x < F->order(), tag + ": multiplier out of range");
        require(rank_q(*F, b[l]) == b[l].size(), tag + ": multipliers are not F_q-linearly independent");
    }
}

LrsSpec default_lrs(FieldPtr F, const std::vector<std::size_t>& parts, std::size_t k)
{
    LrsSpec s;
    s.F = std::move(F);
    s.k = k;
    for (std::size_t l = 0; l < parts.size(); ++l) {
        s.a.push_back(s.F->gpow(static_cast<long long>(l)));
        std::vector<Elem> blk;
        for (std::size_t t = 0; t < parts[l]; ++t)
            blk.push_back(s.F->gpow(static_cast<long long>(l + t)));
        s.b.push_back(std::move(blk));
    }
    s.check();
    return s;
}

std::vector<Elem> code_locators(const LrsSpec& spec)
{
    spec.check();
    const Field& F = *spec.F;
    std::vector<Elem> L;
    for (std::size_t l = 0; l < spec.blocks(); ++l)
        for (Elem beta : spec.b[l])
            L.push_back(F.mul(spec.a[l], F.pow(beta, F.q() - 1)));
    return L;
}

Mat generator_matrix(const LrsSpec& spec) { return generator_matrix(spec, spec.k); }

Mat generator_matrix(const LrsSpec& spec, std::size_t k)
{
    spec.check();
    const Field& F = *spec.F;
    const SkewRing R(spec.F, 1, 0);
    Mat G(k, spec.n());
    std::size_t col = 0;
    for (std::size_t l = 0; l < spec.blocks(); ++l)
        for (Elem beta : spec.b[l]) {
            Elem nrm = 1, fb = beta;
            for (std::size_t i = 0; i < k; ++i) {
                if (i > 0) {
                    nrm = F.mul(R.theta(nrm), spec.a[l]);
                    fb = F.frob(fb, 1);
                }
                G(i, col) = F.mul(nrm, fb);
            }
            ++col;
        }
    return G;
}

std::vector<Elem> encode(const LrsSpec& spec, const std::vector<Elem>& message)
{
    require(message.size() == spec.k, "message length must equal k");
    return vecmat(*spec.F, message, generator_matrix(spec));
}

std::vector<Elem> encode_eval(const LrsSpec& spec, const std::vector<Elem>& message)
{
    require(message.size() == spec.k, "message length must equal k");
    const auto L = code_locators(spec);
    const SkewRing R(spec.F, 1, 0);
    SPoly f = message;
    trim(f);
    std::vector<Elem> c;
    std::size_t j = 0;
    for (std::size_t l = 0; l < spec.blocks(); ++l)
        for (Elem beta : spec.b[l])
            c.push_back(spec.F->mul(beta, eval(R, f, L[j++])));
    return c;
}

bool is_msrd(const LrsSpec& spec)
{
    const Mat G = generator_matrix(spec);
    const std::size_t d = min_distance_bruteforce(*spec.F, G, Metric::sumrank, spec.partition());
    return d == spec.n() - spec.k + 1;
}

} // namespace cwb
