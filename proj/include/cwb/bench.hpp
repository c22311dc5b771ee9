#pragma once

#include "cwb/grscode.hpp"
#include "cwb/ilbounds.hpp"
#include "cwb/ildec.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cwb {

enum class CodeKind { grs, alternant };
const char* code_kind_name(CodeKind k);
std::optional<CodeKind> parse_code_kind(const std::string& s);

struct ExperimentConfig {
    CodeKind code = CodeKind::alternant;
    std::uint64_t q = 2;
    unsigned m = 1;
    std::size_t n = 0; // 0 means q^m - 1
    std::size_t d = 3, s = 1, t = 1;
    std::uint64_t trials = 100;
    std::optional<std::uint64_t> seed;

    std::size_t length() const;
    void check() const;
};

// Code, field and sampling alphabet shared by all trials of one configuration.
struct Workload {
    GrsSpec spec;
    Mat basis;
    bool subfield = false; // errors and codeword coefficients from F_q
    explicit Workload(const ExperimentConfig& cfg);
};

struct Trial {
    Outcome outcome = Outcome::failure;
    bool rank_success = false, crux_success = false;
};
// Trial `index` of the configuration at burst weight t; oracles are evaluated only when asked.
Trial run_trial(const Workload& w, std::size_t s, std::size_t t, std::uint64_t seed, std::uint64_t index,
                bool oracles);

struct Estimate {
    std::uint64_t trials = 0, successes = 0, miscorrections = 0, failures = 0;
    double p = 0, lo = 0, hi = 0; // Wilson 95% interval
    double sigma() const;
};
Estimate wilson(std::uint64_t successes, std::uint64_t trials);

Estimate mc_psuc(const ExperimentConfig& cfg);

struct ThresholdScan {
    std::size_t t_thr = 0;
    std::vector<std::pair<std::size_t, Estimate>> points;
};
// Largest t in [1, min(n, t_max + 1)] with estimated success above `target`.
ThresholdScan threshold_scan(const ExperimentConfig& cfg, double target = 0.9, std::uint64_t trials = 100);

struct CsvRow {
    std::size_t t = 0;
    std::array<std::optional<double>, 6> bounds; // RS, LA, LA1, LA2, LT, U
    std::optional<double> sim;
    std::optional<Estimate> estimate;
};
// Rows for t in [t_lo, t_hi]; Sim filled when `simulate`.
std::vector<CsvRow> emit_curves(const ExperimentConfig& cfg, std::size_t t_lo, std::size_t t_hi, bool simulate);

extern const char* const kCsvHeader;
// 12 significant digits, '.' decimal, locale independent.
std::string format_prob(double v);
std::string curves_csv(const std::vector<CsvRow>& rows);
void write_text(const std::string& path, const std::string& text);

} // namespace cwb
