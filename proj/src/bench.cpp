#include "cwb/bench.hpp"

#include "cwb/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace cwb {

const char* code_kind_name(CodeKind k) { return k == CodeKind::grs ? "grs" : "alternant"; }

std::optional<CodeKind> parse_code_kind(const std::string& s)
{
    if (s == "grs")
        return CodeKind::grs;
    if (s == "alternant")
        return CodeKind::alternant;
    return std::nullopt;
}

std::size_t ExperimentConfig::length() const
{
    if (n != 0)
        return n;
    return static_cast<std::size_t>(ipow(BigInt(q), m) - 1);
}

void ExperimentConfig::check() const
{
    require(prime_power(q).first != 0, "q must be a prime power");
    require(m >= 1, "m must be positive");
    const std::size_t len = length();
    require(BigInt(len) <= ipow(BigInt(q), m) - 1, "n exceeds q^m - 1");
    require(d >= 2 && d <= len, "need 2 <= d <= n");
    require(s >= 1, "s must be positive");
    require(trials >= 1, "trial count must be positive");
    require(t <= len, "t exceeds n");
    if (!seed)
        fail(Errc::invalid_argument, "a seed is required for simulation");
}

Workload::Workload(const ExperimentConfig& cfg)
{
    spec = default_grs(Field::make(cfg.q, cfg.m), cfg.length(), cfg.d);
    if (cfg.code == CodeKind::grs) {
        basis = grs_generator(spec);
    } else {
        basis = subfield_subcode(spec).basis;
        subfield = true;
    }
}

Trial run_trial(const Workload& w, std::size_t s, std::size_t t, std::uint64_t seed, std::uint64_t index, bool oracles)
{
    const Field& F = *w.spec.F;
    const std::size_t n = w.spec.n();
    Rng rng = stream(seed, index);
    const Mat C = random_interleaved_codeword(F, w.basis, s, rng, w.subfield ? F.subfield() : std::vector<Elem>{});
    Trial tr;
    if (t == 0) {
        tr.outcome = classify(joint_decode(C, w.spec), C);
        tr.rank_success = tr.crux_success = true;
        return tr;
    }
    const BurstError E = sample_burst(F, s, n, t, rng, w.subfield);
    const Mat Ef = E.full(n);
    Mat R = C;
    for (std::size_t x = 0; x < R.a.size(); ++x)
        R.a[x] = F.add(R.a[x], Ef.a[x]);
    tr.outcome = classify(joint_decode(R, w.spec), C);
    if (oracles) {
        tr.rank_success = rank_oracle(Ef, w.spec);
        tr.crux_success = crux_oracle(E.E, E.support, w.spec);
    }
    return tr;
}

double Estimate::sigma() const { return trials ? std::sqrt(p * (1 - p) / double(trials)) : 0.0; }

Estimate wilson(std::uint64_t successes, std::uint64_t trials)
{
    Estimate e;
    e.trials = trials;
    e.successes = successes;
    if (trials == 0)
        return e;
    const double z = 1.959963984540054, nn = double(trials);
    e.p = double(successes) / nn;
    const double den = 1 + z * z / nn;
    const double centre = (e.p + z * z / (2 * nn)) / den;
    const double half = z * std::sqrt(e.p * (1 - e.p) / nn + z * z / (4 * nn * nn)) / den;
    e.lo = successes == 0 ? 0.0 : std::max(0.0, centre - half);
    e.hi = successes == trials ? 1.0 : std::min(1.0, centre + half);
    return e;
}

namespace {

Estimate estimate(const Workload& w, const ExperimentConfig& cfg, std::size_t t, std::uint64_t trials)
{
    std::uint64_t succ = 0, mis = 0;
    for (std::uint64_t k = 0; k < trials; ++k) {
        const Outcome o = run_trial(w, cfg.s, t, *cfg.seed, k, false).outcome;
        succ += o == Outcome::success;
        mis += o == Outcome::miscorrection;
    }
    Estimate e = wilson(succ, trials);
    e.miscorrections = mis;
    e.failures = trials - succ - mis;
    return e;
}

} // namespace

Estimate mc_psuc(const ExperimentConfig& cfg)
{
    cfg.check();
    const Workload w(cfg);
    return estimate(w, cfg, cfg.t, cfg.trials);
}

ThresholdScan threshold_scan(const ExperimentConfig& cfg, double target, std::uint64_t trials)
{
    cfg.check();
    const Workload w(cfg);
    ThresholdScan out;
    const std::size_t hi = std::min(cfg.length(), max_radius(cfg.s, cfg.d) + 1);
    for (std::size_t t = 1; t <= hi; ++t) {
        const Estimate e = estimate(w, cfg, t, trials);
        out.points.emplace_back(t, e);
        if (e.p > target)
            out.t_thr = t;
    }
    return out;
}

std::vector<CsvRow> emit_curves(const ExperimentConfig& cfg, std::size_t t_lo, std::size_t t_hi, bool simulate)
{
    ExperimentConfig c = cfg;
    c.t = 0;
    if (simulate)
        c.check();
    require(t_lo <= t_hi && t_hi <= c.length(), "scan range must satisfy t_lo <= t_hi <= n");
    std::optional<Workload> w;
    if (simulate)
        w.emplace(c);
    std::vector<CsvRow> rows;
    const BoundName names[6] = {BoundName::LRS, BoundName::LA, BoundName::LA1, BoundName::LA2, BoundName::LT, BoundName::U};
    for (std::size_t t = t_lo; t <= t_hi; ++t) {
        CsvRow row;
        row.t = t;
        if (t >= 1) {
            const BoundInputs in{c.q, c.m, c.length(), c.d, c.s, t};
            for (int b = 0; b < 6; ++b) {
                const ProbBound pb = bound(names[b], in);
                if (pb.applicable)
                    row.bounds[b] = pb.value;
            }
        }
        if (simulate) {
            row.estimate = estimate(*w, c, t, c.trials);
            row.sim = row.estimate->p;
        }
        rows.push_back(row);
    }
    return rows;
}

const char* const kCsvHeader = "t,RS,LA,LA1,LA2,LT,U,Sim";

std::string format_prob(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string curves_csv(const std::vector<CsvRow>& rows)
{
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += std::to_string(r.t);
        for (const auto& b : r.bounds) {
            out += ',';
            if (b)
                out += format_prob(*b);
        }
        out += ',';
        if (r.sim)
            out += format_prob(*r.sim);
        out += '\n';
    }
    return out;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        fail(Errc::invalid_argument, "cannot open " + path + " for writing");
    f << text;
    if (!f)
        fail(Errc::internal, "write failed for " + path);
}

} // namespace cwb
