#include "cwb/ildec.hpp"

#include "cwb/error.hpp"

#include <algorithm>
#include <numeric>

namespace cwb {

Mat BurstError::full(std::size_t n) const
{
    Mat X(E.rows, n);
    for (std::size_t c = 0; c < support.size(); ++c) {
        require(support[c] < n, "burst support out of range");
        for (std::size_t i = 0; i < E.rows; ++i)
            X(i, support[c]) = E(i, c);
    }
    return X;
}

namespace {

Elem draw(const Field& F, Rng& rng, bool subfield)
{
    if (subfield)
        return F.subfield()[uniform(rng, F.q())];
    return static_cast<Elem>(uniform(rng, F.order()));
}

} // namespace

BurstError sample_burst_on(const Field& F, std::size_t s, const std::vector<std::size_t>& support, Rng& rng,
                           bool subfield)
{
    require(s >= 1, "interleaving order must be positive");
    BurstError b;
    b.support = support;
    std::sort(b.support.begin(), b.support.end());
    require(std::adjacent_find(b.support.begin(), b.support.end()) == b.support.end(), "repeated support position");
    b.E = Mat(s, support.size());
    for (std::size_t c = 0; c < support.size(); ++c) {
        bool nonzero = false;
        while (!nonzero) {
            for (std::size_t i = 0; i < s; ++i) {
                b.E(i, c) = draw(F, rng, subfield);
                nonzero |= b.E(i, c) != 0;
            }
        }
    }
    return b;
}

BurstError sample_burst(const Field& F, std::size_t s, std::size_t n, std::size_t t, Rng& rng, bool subfield)
{
    require(t >= 1 && t <= n, "need 1 <= t <= n");
    // partial Fisher-Yates
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < t; ++i)
        std::swap(idx[i], idx[i + uniform(rng, n - i)]);
    idx.resize(t);
    return sample_burst_on(F, s, idx, rng, subfield);
}

Mat random_interleaved_codeword(const Field& F, const Mat& basis, std::size_t s, Rng& rng,
                                const std::vector<Elem>& scalars)
{
    Mat C(s, basis.cols);
    for (std::size_t i = 0; i < s; ++i) {
        std::vector<Elem> u(basis.rows);
        for (auto& x : u)
            x = scalars.empty() ? static_cast<Elem>(uniform(rng, F.order())) : scalars[uniform(rng, scalars.size())];
        const auto row = vecmat(F, u, basis);
        for (std::size_t j = 0; j < basis.cols; ++j)
            C(i, j) = row[j];
    }
    return C;
}

Mat syndromes(const Mat& R, const GrsSpec& spec)
{
    spec.check();
    require(R.cols == spec.n(), "received word length does not match the code");
    return transpose(matmul(*spec.F, parity_check(spec), transpose(R)));
}

Mat key_equation_matrix(const Mat& S, std::size_t t)
{
    const std::size_t dm1 = S.cols;
    Mat K(0, t);
    if (t == 0 || t >= dm1)
        return K;
    for (std::size_t i = 0; i < S.rows; ++i)
        for (std::size_t j = 0; j + t < dm1; ++j) {
            std::vector<Elem> row(t);
            for (std::size_t u = 0; u < t; ++u)
                row[u] = S(i, j + u);
            K.append_row(row);
        }
    return K;
}

const char* outcome_name(Outcome o)
{
    switch (o) {
    case Outcome::success:
        return "success";
    case Outcome::miscorrection:
        return "miscorrection";
    case Outcome::failure:
        return "failure";
    }
    return "?";
}

std::size_t max_radius(std::size_t s, std::size_t d) { return d == 0 ? 0 : s * (d - 1) / (s + 1); }

DecodeOutcome joint_decode(const Mat& R, const GrsSpec& spec)
{
    const Field& F = *spec.F;
    const std::size_t s = R.rows, n = spec.n(), dm1 = spec.d - 1;
    for (auto a : spec.alpha)
        require(a != 0, "joint decoding needs nonzero code locators");
    DecodeOutcome out;
    const Mat S = syndromes(R, spec);
    if (std::all_of(S.a.begin(), S.a.end(), [](Elem x) { return x == 0; })) {
        out.decoded = true;
        out.word = R;
        return out;
    }

    // Minimal t with a solvable key equation.
    const std::size_t tmax = max_radius(s, spec.d);
    std::vector<Elem> lam; // Lambda_1 .. Lambda_t
    std::size_t tstar = 0;
    for (std::size_t t = 1; t <= tmax; ++t) {
        const Mat K = key_equation_matrix(S, t);
        std::vector<Elem> rhs;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j + t < dm1; ++j)
                rhs.push_back(F.neg(S(i, j + t)));
        auto sol = solve(F, K, rhs);
        if (!sol)
            continue;
        tstar = t;
        if (sol->kernel.rows > 0) {
            out.t_star = t;
            out.reason = "key equation has no unique solution";
            return out;
        }
        lam.resize(t);
        for (std::size_t u = 0; u < t; ++u)
            lam[t - 1 - u] = sol->x[u]; // unknowns are ordered Lambda_t .. Lambda_1
        break;
    }
    out.t_star = tstar;
    if (tstar == 0) {
        out.reason = "no solvable key equation within the decoding radius";
        return out;
    }

    // Lambda(x) = 1 + sum_u Lambda_u x^u vanishes at the inverse error locators.
    auto lambda_at = [&](Elem x) {
        Elem acc = 0;
        for (std::size_t u = tstar; u-- > 0;)
            acc = F.mul(F.add(acc, lam[u]), x);
        return F.add(acc, 1);
    };
    std::vector<std::size_t> pos;
    for (std::size_t j = 0; j < n; ++j)
        if (lambda_at(F.inv(spec.alpha[j])) == 0)
            pos.push_back(j);
    if (pos.size() != tstar) {
        out.reason = "error locator roots do not match code locators";
        return out;
    }

    // Forney, row by row.
    Mat Ehat(s, n);
    for (std::size_t i = 0; i < s; ++i) {
        // Omega = S_i(x) Lambda(x) mod x^{d-1}
        std::vector<Elem> om(dm1, 0);
        for (std::size_t k = 0; k < dm1; ++k) {
            Elem c = S(i, k);
            for (std::size_t u = 1; u <= tstar && u <= k; ++u)
                c = F.add(c, F.mul(lam[u - 1], S(i, k - u)));
            om[k] = c;
        }
        for (auto j : pos) {
            const Elem xi = F.inv(spec.alpha[j]);
            Elem num = 0;
            for (std::size_t k = dm1; k-- > 0;)
                num = F.add(F.mul(num, xi), om[k]);
            Elem den = 1;
            for (auto l : pos)
                if (l != j)
                    den = F.mul(den, F.sub(1, F.mul(spec.alpha[l], xi)));
            Ehat(i, j) = F.div(F.div(num, den), spec.v[j]);
        }
    }
    for (auto j : pos) {
        bool nz = false;
        for (std::size_t i = 0; i < s; ++i)
            nz |= Ehat(i, j) != 0;
        if (!nz) {
            out.reason = "zero error value at a located position";
            return out;
        }
    }
    Mat W(s, n);
    for (std::size_t x = 0; x < W.a.size(); ++x)
        W.a[x] = F.sub(R.a[x], Ehat.a[x]);
    const Mat chk = syndromes(W, spec);
    if (std::any_of(chk.a.begin(), chk.a.end(), [](Elem x) { return x != 0; })) {
        out.reason = "corrected word is not a codeword";
        return out;
    }
    out.decoded = true;
    out.word = std::move(W);
    return out;
}

Outcome classify(const DecodeOutcome& out, const Mat& C_true)
{
    if (!out.decoded)
        return Outcome::failure;
    require(out.word.rows == C_true.rows && out.word.cols == C_true.cols, "reference word has the wrong shape");
    return out.word.a == C_true.a ? Outcome::success : Outcome::miscorrection;
}

bool rank_oracle(const Mat& E_full, const GrsSpec& spec)
{
    std::size_t t = 0;
    for (std::size_t j = 0; j < E_full.cols; ++j) {
        bool nz = false;
        for (std::size_t i = 0; i < E_full.rows; ++i)
            nz |= E_full(i, j) != 0;
        t += nz;
    }
    require(t > 0, "rank oracle needs a nonzero error");
    if (t >= spec.d - 1)
        return false;
    return rank(*spec.F, key_equation_matrix(syndromes(E_full, spec), t)) == t;
}

bool crux_oracle(const Mat& E, const std::vector<std::size_t>& support, const GrsSpec& spec)
{
    const Field& F = *spec.F;
    const std::size_t t = support.size();
    require(t > 0 && E.cols == t, "crux oracle: error matrix and support disagree");
    if (t + 1 >= spec.d)
        return false;
    const std::size_t rows = spec.d - t - 1;
    Mat stacked(0, t);
    for (std::size_t i = 0; i < E.rows; ++i)
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<Elem> row(t);
            for (std::size_t c = 0; c < t; ++c)
                row[c] = F.mul(F.pow(spec.alpha[support[c]], static_cast<std::uint64_t>(r)), E(i, c));
            stacked.append_row(row);
        }
    return kernel(F, stacked).rows == 0;
}

} // namespace cwb
