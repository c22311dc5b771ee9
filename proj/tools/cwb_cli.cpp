// cwb: command-line front end over the codewb C API.
#include "codewb.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0, kExitUsage = 1, kExitGuard = 2, kExitInternal = 3;

struct OpHelp {
    const char* name;
    const char* desc;
};

const OpHelp kOps[] = {
    {"skew-eval", "skew polynomial remainder evaluation and division: q m [j beta] f=[..] a=.. [g=[..]] [omega=[..]]"},
    {"lrs-gen", "LRS generator matrix: q m parts=[..] k [a=[..] b=[[..]..]] [msrd=true] [message=[..]]"},
    {"support-check", "GM-MSRD condition and ktilde: n k Z=[[..]..] [q parts=[..]]"},
    {"support-build", "generator with prescribed zeros: q m parts=[..] n k Z=[[..]..] [subcode=true] [budget]"},
    {"dist-design", "distributed LRS design: h r=[..] access=[[..]..] t rho ell [construct=true]"},
    {"netgap", "combination network bounds: h r alpha ell eps q t [T]"},
    {"il-sim", "interleaved decoding simulation: code q m [n] d s t trials [scan=true target] [oracles=true]"},
    {"il-bounds", "success probability bounds: q m [n] d s t"},
    {"qlrs-dim", "QLRS dimension and bad-monomial counts: ell [r] [i j]"},
    {"qlrs-local", "QLRS local recovery simulation: ell r tau trials [lines=true]"},
    {"aad-build", "AAD family construction: n k q [subspaces=true]"},
    {"aad-verify", "AAD verification: n k q [L] [mode=exhaustive|sample samples]"},
    {"bounds-table", "bound curves as CSV rows: code q m [n] d s [t_lo t_hi] trials [sim=false]"},
};

json parse_value(const std::string& v)
{
    try {
        return json::parse(v);
    } catch (const json::exception&) {
        return v;
    }
}

void assign(json& params, const std::string& kv, const std::string& where)
{
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
        throw CLI::ValidationError(where, "expected key=value, got '" + kv + "'");
    params[kv.substr(0, eq)] = parse_value(kv.substr(eq + 1));
}

void read_config(json& params, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CLI::ValidationError("--config", "cannot read " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#')
            continue;
        const auto e = line.find_last_not_of(" \t\r");
        std::string kv = line.substr(b, e - b + 1);
        const auto eq = kv.find('=');
        if (eq != std::string::npos) {
            auto key = kv.substr(0, eq), val = kv.substr(eq + 1);
            key.erase(key.find_last_not_of(" \t") + 1);
            val.erase(0, val.find_first_not_of(" \t"));
            kv = key + "=" + val;
        }
        assign(params, kv, path);
    }
}

int exit_code(cwb_status s)
{
    switch (s) {
    case CWB_OK:
        return kExitOk;
    case CWB_E_INVALID:
        return kExitUsage;
    case CWB_E_GUARD:
    case CWB_E_NO_SOLUTION:
        return kExitGuard;
    default:
        return kExitInternal;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Algebraic coding workbench"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::string out_path, config_path, format = "json";
    auto* seed_opt = app.add_option("--seed", seed, "master seed (required for stochastic operations)");
    app.add_option("--out", out_path, "write the result here instead of stdout");
    app.add_option("--config", config_path, "key=value parameter file")->check(CLI::ExistingFile);
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.set_version_flag("--version", std::string(cwb_version()));

    std::map<std::string, std::vector<std::string>> kv;
    for (const auto& op : kOps) {
        auto* sub = app.add_subcommand(op.name, op.desc);
        sub->add_option("params", kv[op.name], "key=value parameters");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    const std::string op = app.get_subcommands().front()->get_name();
    json params = json::object();
    try {
        if (!config_path.empty())
            read_config(params, config_path);
        for (const auto& s : kv[op])
            assign(params, s, op);
    } catch (const CLI::Error& e) {
        std::cerr << "cwb: " << e.what() << '\n';
        return kExitUsage;
    }
    if (*seed_opt)
        params["seed"] = seed;

    cwb_result* res = nullptr;
    const cwb_status st = cwb_run(op.c_str(), params.dump().c_str(), &res);
    if (st != CWB_OK) {
        std::cerr << "cwb " << op << ": " << cwb_status_name(st) << ": " << cwb_last_error() << '\n';
        return exit_code(st);
    }
    std::string text = format == "csv" ? cwb_result_csv(res) : std::string(cwb_result_json(res)) + "\n";
    cwb_result_free(res);

    if (out_path.empty()) {
        std::cout << text;
        return std::cout ? kExitOk : kExitInternal;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "cwb: cannot open " << out_path << " for writing\n";
        return kExitUsage;
    }
    f << text;
    return f ? kExitOk : kExitInternal;
}
