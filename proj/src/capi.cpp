#include "codewb.h"

#include "cwb/aad.hpp"
#include "cwb/bench.hpp"
#include "cwb/error.hpp"
#include "cwb/lrs.hpp"
#include "cwb/netgap.hpp"
#include "cwb/qlrs.hpp"
#include "cwb/skew.hpp"
#include "cwb/support.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace cwb;

struct cwb_field {
    FieldPtr F;
};

struct cwb_result {
    std::string json, csv;
};

namespace {

thread_local std::string g_error;

cwb_status to_status(Errc c)
{
    switch (c) {
    case Errc::invalid_argument:
        return CWB_E_INVALID;
    case Errc::guard:
        return CWB_E_GUARD;
    case Errc::no_solution:
        return CWB_E_NO_SOLUTION;
    case Errc::division_by_zero:
        return CWB_E_DIV_ZERO;
    case Errc::field_mismatch:
        return CWB_E_FIELD;
    case Errc::internal:
        return CWB_E_INTERNAL;
    }
    return CWB_E_INTERNAL;
}

template <class Fn>
cwb_status guarded(Fn fn)
{
    try {
        fn();
        g_error.clear();
        return CWB_OK;
    } catch (const Error& e) {
        g_error = e.what();
        return to_status(e.code());
    } catch (const json::exception& e) {
        g_error = std::string("parameter error: ") + e.what();
        return CWB_E_INVALID;
    } catch (const std::bad_alloc&) {
        g_error = "out of memory";
        return CWB_E_GUARD;
    } catch (const std::exception& e) {
        g_error = e.what();
        return CWB_E_INTERNAL;
    }
}

// ---- parameter access ----

struct Params {
    const json& j;

    bool has(const char* k) const { return j.contains(k) && !j[k].is_null(); }
    template <class T>
    T get(const char* k) const
    {
        if (!has(k))
            fail(Errc::invalid_argument, std::string("missing parameter '") + k + "'");
        try {
            return j[k].get<T>();
        } catch (const json::exception&) {
            fail(Errc::invalid_argument, std::string("parameter '") + k + "' has the wrong type");
        }
    }
    template <class T>
    T get(const char* k, T dflt) const
    {
        return has(k) ? get<T>(k) : dflt;
    }
    std::uint64_t seed() const
    {
        if (!has("seed"))
            fail(Errc::invalid_argument, "this operation is stochastic: --seed is required");
        return get<std::uint64_t>("seed");
    }
};

// Elements: integers in the field encoding, or "g^k" / "a^k" powers of the primitive element.
Elem parse_elem(const Field& F, const json& v)
{
    if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) {
        const auto x = v.get<std::uint64_t>();
        require(x < F.order(), "element out of range");
        return x;
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "0")
            return 0;
        if (s.size() > 2 && (s[0] == 'g' || s[0] == 'a') && s[1] == '^')
            return F.gpow(std::stoll(s.substr(2)));
        if (s == "1")
            return 1;
    }
    fail(Errc::invalid_argument, "cannot parse field element " + v.dump());
}

std::vector<Elem> parse_vec(const Field& F, const json& v)
{
    require(v.is_array(), "expected an array of field elements");
    std::vector<Elem> out;
    for (const auto& x : v)
        out.push_back(parse_elem(F, x));
    return out;
}

json elem_out(const Field& F, Elem a, bool exp_form)
{
    if (!exp_form)
        return a;
    return a == 0 ? std::string("0") : "g^" + std::to_string(F.log(a));
}

json mat_out(const Field& F, const Mat& M, bool exp_form)
{
    json rows = json::array();
    for (std::size_t i = 0; i < M.rows; ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < M.cols; ++c)
            row.push_back(elem_out(F, M(i, c), exp_form));
        rows.push_back(row);
    }
    return rows;
}

json poly_out(const Field& F, const SPoly& f, bool exp_form)
{
    json out = json::array();
    for (auto c : f)
        out.push_back(elem_out(F, c, exp_form));
    return out;
}

std::string big(const BigInt& v) { return to_string(v); }
std::string big(const BigRat& v) { return to_string(v); }

std::vector<std::vector<std::size_t>> parse_sets(const json& v)
{
    require(v.is_array(), "expected a list of index lists");
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : v)
        out.push_back(s.get<std::vector<std::size_t>>());
    return out;
}

// ---- CSV ----

std::string csv_cell(const json& v)
{
    if (v.is_null())
        return "";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_float())
        return format_prob(v.get<double>());
    if (v.is_boolean())
        return v.get<bool>() ? "1" : "0";
    if (v.is_number())
        return v.dump();
    std::string s = v.dump();
    if (s.find(',') != std::string::npos || s.find('"') != std::string::npos) {
        std::string q = "\"";
        for (char c : s)
            q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    }
    return s;
}

// "rows" (array of flat objects) becomes a table; otherwise key,value pairs of the top level.
std::string default_csv(const json& j)
{
    std::ostringstream os;
    if (j.contains("rows") && j["rows"].is_array() && !j["rows"].empty() && j["rows"][0].is_object()) {
        std::vector<std::string> cols;
        for (auto it = j["rows"][0].begin(); it != j["rows"][0].end(); ++it)
            cols.push_back(it.key());
        for (std::size_t c = 0; c < cols.size(); ++c)
            os << (c ? "," : "") << cols[c];
        os << '\n';
        for (const auto& r : j["rows"]) {
            for (std::size_t c = 0; c < cols.size(); ++c)
                os << (c ? "," : "") << csv_cell(r.contains(cols[c]) ? r[cols[c]] : json());
            os << '\n';
        }
        return os.str();
    }
    os << "key,value\n";
    for (auto it = j.begin(); it != j.end(); ++it)
        os << it.key() << ',' << csv_cell(it.value()) << '\n';
    return os.str();
}

// ---- operations ----

using OpFn = std::function<void(const Params&, cwb_result&)>;

FieldPtr field_of(const Params& p)
{
    const auto q = p.get<std::uint64_t>("q");
    const auto m = p.get<unsigned>("m", 1);
    require(prime_power(q).first != 0, "q must be a prime power");
    return Field::make(q, m);
}

void op_skew_eval(const Params& p, cwb_result& r)
{
    const FieldPtr F = field_of(p);
    const bool ex = p.get<std::string>("elements", "int") == "exp";
    const Elem beta = p.has("beta") ? parse_elem(*F, p.j["beta"]) : 0;
    const SkewRing R(F, p.get<int>("j", 1), beta);
    SPoly f = parse_vec(*F, p.j.at("f"));
    trim(f);
    json out;
    out["ring"] = {{"q", F->q()}, {"m", F->m()}, {"j", R.j}, {"beta", elem_out(*F, beta, ex)}};
    if (p.has("a")) {
        const Elem a = parse_elem(*F, p.j["a"]);
        out["a"] = elem_out(*F, a, ex);
        out["value"] = elem_out(*F, eval(R, f, a), ex);
        SPoly lin{F->neg(a), 1}; // X - a
        const auto [quo, rem] = right_divide(R, f, lin);
        out["quotient_by_X_minus_a"] = poly_out(*F, quo, ex);
        out["remainder_by_X_minus_a"] = poly_out(*F, rem, ex);
    }
    if (p.has("g")) {
        SPoly g = parse_vec(*F, p.j["g"]);
        trim(g);
        require(!g.empty(), "divisor must be nonzero");
        const auto [q1, r1] = right_divide(R, f, g);
        const auto [q2, r2] = left_divide(R, f, g);
        const auto e = gcrd_lclm(R, f, g);
        out["right_divide"] = {{"quotient", poly_out(*F, q1, ex)}, {"remainder", poly_out(*F, r1, ex)}};
        out["left_divide"] = {{"quotient", poly_out(*F, q2, ex)}, {"remainder", poly_out(*F, r2, ex)}};
        out["product"] = poly_out(*F, mul(R, f, g), ex);
        out["gcrd"] = poly_out(*F, e.gcrd, ex);
        out["lclm"] = poly_out(*F, e.lclm, ex);
    }
    if (p.has("omega")) {
        const auto om = parse_vec(*F, p.j["omega"]);
        out["minimal_polynomial"] = poly_out(*F, minimal_polynomial(R, om), ex);
        out["p_independent"] = is_p_independent(R, om);
    }
    out["f"] = poly_out(*F, f, ex);
    out["f_str"] = to_string(R, f);
    r.json = out.dump(2);
}

LrsSpec lrs_of(const Params& p, const FieldPtr& F)
{
    const auto parts = p.get<std::vector<std::size_t>>("parts");
    const auto k = p.get<std::size_t>("k");
    LrsSpec spec = default_lrs(F, parts, k);
    if (p.has("a"))
        spec.a = parse_vec(*F, p.j["a"]);
    if (p.has("b")) {
        spec.b.clear();
        for (const auto& blk : p.j["b"])
            spec.b.push_back(parse_vec(*F, blk));
    }
    spec.check();
    return spec;
}

void op_lrs_gen(const Params& p, cwb_result& r)
{
    const FieldPtr F = field_of(p);
    const bool ex = p.get<std::string>("elements", "exp") == "exp";
    const LrsSpec spec = lrs_of(p, F);
    json out;
    out["n"] = spec.n();
    out["k"] = spec.k;
    out["blocks"] = spec.partition().parts;
    out["generator"] = mat_out(*F, generator_matrix(spec), ex);
    json loc = json::array();
    for (auto x : code_locators(spec))
        loc.push_back(elem_out(*F, x, ex));
    out["code_locators"] = loc;
    if (p.get<bool>("msrd", false))
        out["msrd"] = is_msrd(spec);
    if (p.has("message"))
        out["codeword"] = poly_out(*F, encode(spec, parse_vec(*F, p.j["message"])), ex);
    r.json = out.dump(2);
}

ZeroPattern pattern_of(const Params& p)
{
    ZeroPattern z;
    z.n = p.get<std::size_t>("n");
    z.k = p.get<std::size_t>("k");
    z.Z = parse_sets(p.j.at("Z"));
    z.check();
    return z;
}

void op_support_check(const Params& p, cwb_result& r)
{
    const ZeroPattern z = pattern_of(p);
    json out;
    const auto bad = gm_check(z);
    out["gm_msrd_condition"] = !bad;
    out["violating_omega"] = bad ? json(*bad) : json();
    out["ktilde"] = ktilde(z);
    if (p.has("parts") && p.has("q")) {
        const auto parts = p.get<std::vector<std::size_t>>("parts");
        const auto q = p.get<std::uint64_t>("q");
        out["m_theorem"] = field_size_bound(z.k, q, parts, FieldRule::theorem);
        out["m_compact"] = field_size_bound(z.k, q, parts, FieldRule::compact);
    }
    r.json = out.dump(2);
}

void op_support_build(const Params& p, cwb_result& r)
{
    const FieldPtr F = field_of(p);
    const bool ex = p.get<std::string>("elements", "exp") == "exp";
    const ZeroPattern z = pattern_of(p);
    Params pk{p.j};
    LrsSpec spec = lrs_of(pk, F);
    Rng rng = stream(p.seed(), 0);
    const auto budget = p.get<std::size_t>("budget", 64);
    const Construction c = p.get<bool>("subcode", false) ? build_subcode_generator(spec, z, rng, budget)
                                                          : build_constrained_generator(spec, z, rng, budget);
    json out;
    out["attempts"] = c.attempts;
    out["T"] = mat_out(*F, c.T, ex);
    out["G"] = mat_out(*F, c.G, ex);
    bool zeros_ok = true;
    for (std::size_t i = 0; i < c.G.rows; ++i)
        for (std::size_t col = 0; col < c.G.cols; ++col) {
            bool want = i < z.Z.size() && std::find(z.Z[i].begin(), z.Z[i].end(), col) != z.Z[i].end();
            zeros_ok &= (c.G(i, col) == 0) == want;
        }
    out["zeros_exact"] = zeros_ok;
    out["rank_T"] = rank(*F, c.T);
    r.json = out.dump(2);
}

void op_dist_design(const Params& p, cwb_result& r)
{
    NetworkInstance inst;
    inst.h = p.get<std::size_t>("h");
    inst.r = p.get<std::vector<std::size_t>>("r");
    inst.access = parse_sets(p.j.at("access"));
    inst.t = p.get<std::size_t>("t", 0);
    inst.rho = p.get<std::size_t>("rho", 0);
    inst.ell = p.get<std::size_t>("ell", 1);
    inst.check();
    const bool construct = p.get<bool>("construct", false);
    const DesignResult d = distributed_design(inst, construct ? p.seed() : p.get<std::uint64_t>("seed", 0), construct,
                                              p.get<std::size_t>("max_construct_k", 16));
    json out;
    out["nJ"] = d.nJ;
    out["n"] = d.n;
    out["k"] = d.k;
    out["ktilde"] = d.ktilde;
    out["d"] = d.d;
    out["q"] = d.q;
    out["m"] = d.m;
    out["blocks"] = d.blocks;
    out["Z"] = d.pattern.Z;
    out["constructed"] = d.constructed;
    out["construction_note"] = d.construction_note;
    r.json = out.dump(2);
}

json netbound_out(const NetBound& b)
{
    json o;
    o["name"] = b.name;
    o["kind"] = b.kind;
    o["validity"] = b.validity;
    o["applicable"] = b.applicable;
    o["log2"] = b.applicable ? json(b.log2) : json();
    o["exact"] = b.exact ? json(big(*b.exact)) : json();
    o["agree"] = representations_agree(b);
    return o;
}

void op_netgap(const Params& p, cwb_result& r)
{
    CombNetParams c;
    c.h = p.get<std::int64_t>("h");
    c.r = p.get<std::int64_t>("r");
    c.alpha = p.get<std::int64_t>("alpha");
    c.ell = p.get<std::int64_t>("ell", 1);
    c.eps = p.get<std::int64_t>("eps", 0);
    c.q = p.get<std::uint64_t>("q", 2);
    c.t = p.get<std::int64_t>("t", 1);
    c.check();
    json out;
    out["theta"] = theta(c);
    json rows = json::array();
    for (const auto& b : rmax_upper(c))
        rows.push_back(netbound_out(b));
    for (const auto& b : rmax_lower(c))
        rows.push_back(netbound_out(b));
    out["bounds"] = rows;
    const GapResult g = gap_bounds(c);
    auto opt = [](const auto& v) { return v ? json(*v) : json(); };
    out["gap"] = {{"lll_branch", g.lll_branch}, {"gap_ub", opt(g.gap_ub)}, {"gap_lb", opt(g.gap_lb)},
                  {"A", opt(g.A)},           {"t_A", opt(g.t_A)},       {"t_lb", opt(g.t_lb)},
                  {"cor_ub", opt(g.cor_ub)}, {"cor_lb", opt(g.cor_lb)}, {"A_approx", g.A_approx}};
    const BestBound best = best_bound(c);
    out["best"] = {{"upper", best.upper_name}, {"upper_log2", best.upper.log2},
                   {"lower", best.lower_name}, {"lower_log2", best.lower.log2}};
    json qt = json::array();
    for (const auto& row : qt_conditions(c, p.get<std::int64_t>("T", 20)))
        qt.push_back({{"t", row.t}, {"necessary_log2", opt(row.necessary_log2)},
                      {"sufficient_log2", opt(row.sufficient_log2)}});
    out["rows"] = qt;
    r.json = out.dump(2);
}

ExperimentConfig experiment_of(const Params& p, bool need_seed)
{
    ExperimentConfig c;
    const auto kind = parse_code_kind(p.get<std::string>("code", "alternant"));
    require(kind.has_value(), "code must be grs or alternant");
    c.code = *kind;
    c.q = p.get<std::uint64_t>("q");
    c.m = p.get<unsigned>("m", 1);
    c.n = p.get<std::size_t>("n", 0);
    c.d = p.get<std::size_t>("d");
    c.s = p.get<std::size_t>("s", 1);
    c.t = p.get<std::size_t>("t", 1);
    c.trials = p.get<std::uint64_t>("trials", 100);
    if (need_seed)
        c.seed = p.seed();
    return c;
}

json estimate_out(const Estimate& e)
{
    return {{"trials", e.trials},         {"successes", e.successes}, {"miscorrections", e.miscorrections},
            {"failures", e.failures},     {"p", e.p},                 {"ci_lo", e.lo},
            {"ci_hi", e.hi}};
}

void op_il_sim(const Params& p, cwb_result& r)
{
    const ExperimentConfig c = experiment_of(p, true);
    json out;
    out["code"] = code_kind_name(c.code);
    out["n"] = c.length();
    out["t_max"] = max_radius(c.s, c.d);
    if (p.get<bool>("scan", false)) {
        const ThresholdScan sc = threshold_scan(c, p.get<double>("target", 0.9), c.trials);
        out["t_thr"] = sc.t_thr;
        json rows = json::array();
        for (const auto& [t, e] : sc.points) {
            json row = estimate_out(e);
            row["t"] = t;
            rows.push_back(row);
        }
        out["rows"] = rows;
    } else if (p.get<bool>("oracles", false)) {
        c.check();
        const Workload w(c);
        std::uint64_t succ = 0, agree_rank = 0, agree_crux = 0;
        for (std::uint64_t k = 0; k < c.trials; ++k) {
            const Trial tr = run_trial(w, c.s, c.t, *c.seed, k, true);
            const bool ok = tr.outcome == Outcome::success;
            succ += ok;
            agree_rank += ok == tr.rank_success;
            agree_crux += ok == tr.crux_success;
        }
        out["estimate"] = estimate_out(wilson(succ, c.trials));
        out["rank_oracle_agreement"] = agree_rank;
        out["crux_oracle_agreement"] = agree_crux;
    } else {
        out["t"] = c.t;
        out["estimate"] = estimate_out(mc_psuc(c));
    }
    r.json = out.dump(2);
}

void op_il_bounds(const Params& p, cwb_result& r)
{
    BoundInputs in;
    in.q = p.get<std::uint64_t>("q");
    in.m = p.get<unsigned>("m", 1);
    in.n = p.get<std::size_t>("n", 0);
    if (in.n == 0)
        in.n = static_cast<std::size_t>(ipow(BigInt(in.q), in.m) - 1);
    in.d = p.get<std::size_t>("d");
    in.s = p.get<std::size_t>("s", 1);
    in.t = p.get<std::size_t>("t");
    json rows = json::array();
    for (auto b : {BoundName::LRS, BoundName::LA, BoundName::LA1, BoundName::LA2, BoundName::LT, BoundName::U}) {
        const ProbBound pb = bound(b, in);
        rows.push_back({{"name", bound_name(b)},
                        {"applicable", pb.applicable},
                        {"validity", pb.validity},
                        {"value", pb.applicable ? json(pb.value) : json()},
                        {"exact", pb.exact && pb.applicable ? json(big(*pb.exact)) : json()}});
    }
    json out;
    out["t"] = in.t;
    out["t_max"] = max_radius(in.s, in.d);
    out["rows"] = rows;
    r.json = out.dump(2);
}

void op_qlrs_dim(const Params& p, cwb_result& r)
{
    const auto ell = p.get<unsigned>("ell");
    std::vector<std::uint64_t> rs;
    if (p.has("r"))
        rs.push_back(p.get<std::uint64_t>("r"));
    else
        for (std::uint64_t x = 1; x < (std::uint64_t{1} << ell); ++x)
            rs.push_back(x);
    json rows = json::array();
    for (auto rr : rs) {
        const QlrsParams qp{ell, rr};
        qp.check();
        const std::uint64_t q = qp.q(), k = dimension(qp);
        const auto db = distance_bounds(qp);
        json row = {{"r", rr},          {"dimension", k},        {"rate", double(k) / double(q * q)},
                    {"lrs_dimension", lrs_dimension(qp)},       {"d_lower", db.lower},
                    {"d_upper", db.upper}, {"rate_lb", json()}, {"rate_ub", json()}};
        if (ell >= 2 && 4 * rr <= q) {
            const BadBounds b = bad_count_bounds(qp);
            const double r2 = double(rr * rr), q2 = double(q * q);
            row["rate_lb"] = std::max(0.0, 1 - b.upper * r2 / q2);
            row["rate_ub"] = std::min(1.0, 1 - b.lower * r2 / q2);
        }
        rows.push_back(row);
    }
    json out;
    out["q"] = std::uint64_t{1} << ell;
    out["rows"] = rows;
    if (p.has("r")) {
        const QlrsParams qp{ell, rs[0]};
        if (rs[0] < (std::uint64_t{1} << ell) && recursion_start(rs[0]) <= ell) {
            const auto s = s_vector_recursive(qp);
            out["s_recursive"] = {big(s[0]), big(s[1]), big(s[2])};
        }
        const auto e = s_vector_exhaustive(qp);
        out["s_exhaustive"] = {big(e[0]), big(e[1]), big(e[2])};
        out["s_star"] = s_star_exhaustive(qp);
    }
    if (p.has("i") && p.has("j")) {
        const auto red = ij_reduce(ell, p.get<std::uint64_t>("i"), p.get<std::uint64_t>("j"));
        out["ij_reduce"] = {{"i", red.i}, {"j", red.j}, {"reduced", red.reduced}};
    }
    r.json = out.dump(2);
}

void op_qlrs_local(const Params& p, cwb_result& r)
{
    const QlrsParams qp{p.get<unsigned>("ell"), p.get<std::uint64_t>("r")};
    qp.check();
    const double tau = p.get<double>("tau");
    const auto trials = p.get<std::uint64_t>("trials", 10000);
    const std::uint64_t seed = p.seed();
    const std::uint64_t k = dimension(qp);
    json out;
    out["q"] = qp.q();
    out["r"] = qp.r;
    out["dimension"] = k;
    const LocalSim sim = simulate_local(qp, tau, trials, seed);
    out["qlrs_rate"] = sim.rate();
    out["qlrs_sigma"] = sim.sigma();
    const auto mr = lrs_r_for_dimension(qp.ell, k);
    out["lrs_matched_r"] = mr ? json(*mr) : json();
    if (mr) {
        out["lrs_closed_form"] = lrs_fail_prob(qp.q(), *mr, tau);
        if (p.get<bool>("lines", false)) {
            const LocalSim ls = simulate_local_lines({qp.ell, *mr}, tau, trials, seed);
            out["lrs_rate"] = ls.rate();
        }
    }
    r.json = out.dump(2);
}

void op_aad_build(const Params& p, cwb_result& r)
{
    const auto n = p.get<std::size_t>("n"), k = p.get<std::size_t>("k");
    const auto q = p.get<std::uint64_t>("q");
    const AadFamily fam = aad_construct(n, k, q);
    json out;
    out["size"] = fam.gens.size();
    out["L"] = fam.L ? json(big(*fam.L)) : json();
    if (fam.L) {
        const AadBounds b = aad_bounds(n, k, *fam.L, q);
        out["upper"] = big(b.upper);
        out["lower_exponent"] = b.lower_exponent;
        out["lower"] = b.lower;
    }
    if (p.get<bool>("spread", true))
        out["spread"] = verify_spread(fam);
    if (p.get<bool>("subspaces", false)) {
        json subs = json::array();
        for (const auto& G : fam.gens)
            subs.push_back(mat_out(*fam.F, G, false));
        out["subspaces"] = subs;
    }
    r.json = out.dump(2);
}

void op_aad_verify(const Params& p, cwb_result& r)
{
    const auto n = p.get<std::size_t>("n"), k = p.get<std::size_t>("k");
    const AadFamily fam = aad_construct(n, k, p.get<std::uint64_t>("q"));
    BigInt L;
    if (p.has("L"))
        L = BigInt(p.get<std::uint64_t>("L"));
    else if (fam.L)
        L = *fam.L;
    else
        fail(Errc::invalid_argument, "L is required for k > 2");
    const std::string mode = p.get<std::string>("mode", "exhaustive");
    AadCheck c;
    if (mode == "exhaustive")
        c = verify_aad_exhaustive(fam, L);
    else if (mode == "sample")
        c = verify_aad_sampled(fam, L, p.get<std::uint64_t>("samples", 10000), p.seed());
    else
        fail(Errc::invalid_argument, "mode must be exhaustive or sample");
    json out;
    out["spread"] = verify_spread(fam);
    out["aad"] = c.ok;
    out["L"] = big(L);
    out["worst"] = big(c.worst);
    out["tested"] = c.tested;
    r.json = out.dump(2);
}

void op_bounds_table(const Params& p, cwb_result& r)
{
    const bool sim = p.get<bool>("sim", true);
    ExperimentConfig c = experiment_of(p, sim);
    const std::size_t tmax = max_radius(c.s, c.d);
    const std::size_t lo = p.get<std::size_t>("t_lo", 1);
    const std::size_t hi = std::min(c.length(), p.get<std::size_t>("t_hi", tmax + 2));
    const auto rows = emit_curves(c, lo, hi, sim);
    json jr = json::array();
    const char* names[6] = {"RS", "LA", "LA1", "LA2", "LT", "U"};
    for (const auto& row : rows) {
        json o;
        o["t"] = row.t;
        for (int b = 0; b < 6; ++b)
            o[names[b]] = row.bounds[b] ? json(*row.bounds[b]) : json();
        o["Sim"] = row.sim ? json(*row.sim) : json();
        jr.push_back(o);
    }
    json out;
    out["code"] = code_kind_name(c.code);
    out["n"] = c.length();
    out["t_max"] = tmax;
    out["rows"] = jr;
    r.json = out.dump(2);
    r.csv = curves_csv(rows);
}

const std::map<std::string, OpFn>& ops()
{
    static const std::map<std::string, OpFn> table = {
        {"skew-eval", op_skew_eval},         {"lrs-gen", op_lrs_gen},       {"support-check", op_support_check},
        {"support-build", op_support_build}, {"dist-design", op_dist_design}, {"netgap", op_netgap},
        {"il-sim", op_il_sim},               {"il-bounds", op_il_bounds},   {"qlrs-dim", op_qlrs_dim},
        {"qlrs-local", op_qlrs_local},       {"aad-build", op_aad_build},   {"aad-verify", op_aad_verify},
        {"bounds-table", op_bounds_table},
    };
    return table;
}

} // namespace

namespace {

template <class Fn>
cwb_status field_op(const cwb_field* f, uint64_t* out, std::initializer_list<uint64_t> args, Fn fn)
{
    if (!f || !out) {
        g_error = "null handle or output pointer";
        return CWB_E_INVALID;
    }
    return guarded([&] {
        for (auto a : args)
            require(a < f->F->order(), "element out of range");
        *out = fn(*f->F);
    });
}

} // namespace

extern "C" {

const char* cwb_version(void) { return "1.0.0"; }

const char* cwb_status_name(cwb_status s)
{
    switch (s) {
    case CWB_OK:
        return "ok";
    case CWB_E_INVALID:
        return "invalid argument";
    case CWB_E_GUARD:
        return "guard";
    case CWB_E_NO_SOLUTION:
        return "no solution";
    case CWB_E_DIV_ZERO:
        return "division by zero";
    case CWB_E_FIELD:
        return "field mismatch";
    case CWB_E_INTERNAL:
        return "internal error";
    }
    return "unknown";
}

const char* cwb_last_error(void) { return g_error.c_str(); }

cwb_status cwb_field_new(uint64_t q, unsigned m, cwb_field** out)
{
    if (!out) {
        g_error = "null output pointer";
        return CWB_E_INVALID;
    }
    *out = nullptr;
    return guarded([&] {
        require(prime_power(q).first != 0, "q must be a prime power");
        require(m >= 1, "m must be positive");
        *out = new cwb_field{Field::make(q, m)};
    });
}

void cwb_field_free(cwb_field* f) { delete f; }
uint64_t cwb_field_order(const cwb_field* f) { return f ? f->F->order() : 0; }
uint64_t cwb_field_gamma(const cwb_field* f) { return f ? f->F->gamma() : 0; }


cwb_status cwb_field_add(const cwb_field* f, uint64_t a, uint64_t b, uint64_t* out)
{
    return field_op(f, out, {a, b}, [&](const Field& F) { return F.add(a, b); });
}

cwb_status cwb_field_mul(const cwb_field* f, uint64_t a, uint64_t b, uint64_t* out)
{
    return field_op(f, out, {a, b}, [&](const Field& F) { return F.mul(a, b); });
}

cwb_status cwb_field_inv(const cwb_field* f, uint64_t a, uint64_t* out)
{
    return field_op(f, out, {a}, [&](const Field& F) {
        if (a == 0)
            fail(Errc::division_by_zero, "zero has no inverse");
        return F.inv(a);
    });
}

cwb_status cwb_field_pow(const cwb_field* f, uint64_t a, uint64_t k, uint64_t* out)
{
    return field_op(f, out, {a}, [&](const Field& F) { return F.pow(a, k); });
}

cwb_status cwb_field_frob(const cwb_field* f, uint64_t a, long long j, uint64_t* out)
{
    return field_op(f, out, {a}, [&](const Field& F) { return F.frob(a, j); });
}

cwb_status cwb_run(const char* op, const char* params_json, cwb_result** out)
{
    if (!op || !out) {
        g_error = "null operation name or output pointer";
        return CWB_E_INVALID;
    }
    *out = nullptr;
    return guarded([&] {
        const auto it = ops().find(op);
        if (it == ops().end())
            fail(Errc::invalid_argument, std::string("unknown operation '") + op + "'");
        const json params = params_json && *params_json ? json::parse(params_json) : json::object();
        require(params.is_object(), "parameters must be a JSON object");
        auto res = std::make_unique<cwb_result>();
        it->second(Params{params}, *res);
        if (res->csv.empty())
            res->csv = default_csv(json::parse(res->json));
        *out = res.release();
    });
}

const char* cwb_result_json(const cwb_result* r) { return r ? r->json.c_str() : ""; }
const char* cwb_result_csv(const cwb_result* r) { return r ? r->csv.c_str() : ""; }
void cwb_result_free(cwb_result* r) { delete r; }

const char* const* cwb_operations(void)
{
    static const char* const names[] = {"skew-eval", "lrs-gen",   "support-check", "support-build", "dist-design",
                                        "netgap",    "il-sim",    "il-bounds",     "qlrs-dim",      "qlrs-local",
                                        "aad-build", "aad-verify", "bounds-table", nullptr};
    return names;
}

} // extern "C"
