#include "cwb/bench.hpp"
#include "cwb/error.hpp"

#include <doctest.h>

#include <clocale>
#include <cmath>
#include <sstream>

using namespace cwb;

namespace {

ExperimentConfig small_cfg()
{
    ExperimentConfig c;
    c.code = CodeKind::grs;
    c.q = 2;
    c.m = 4;
    c.d = 7;
    c.s = 2;
    c.trials = 40;
    c.seed = 123;
    return c;
}

} // namespace

TEST_CASE("config validation")
{
    ExperimentConfig c = small_cfg();
    CHECK(c.length() == 15);
    CHECK_NOTHROW(c.check());
    c.seed.reset();
    CHECK_THROWS_AS(c.check(), Error);
    c = small_cfg();
    c.q = 6;
    CHECK_THROWS_AS(c.check(), Error);
    c = small_cfg();
    c.n = 16;
    CHECK_THROWS_AS(c.check(), Error);
    CHECK(parse_code_kind("alternant") == CodeKind::alternant);
    CHECK(!parse_code_kind("goppa").has_value());
    CHECK(std::string(code_kind_name(CodeKind::grs)) == "grs");
}

TEST_CASE("Wilson interval")
{
    const Estimate e = wilson(90, 100);
    CHECK(e.p == doctest::Approx(0.9));
    CHECK(e.lo == doctest::Approx(0.8256).epsilon(1e-3));
    CHECK(e.hi == doctest::Approx(0.9448).epsilon(1e-3));
    const Estimate z = wilson(0, 50);
    CHECK(z.lo == 0.0);
    CHECK(z.hi > 0.0);
    CHECK(wilson(50, 50).hi == 1.0);
}

TEST_CASE("simulation is deterministic per seed")
{
    ExperimentConfig c = small_cfg();
    c.t = 4;
    const Estimate a = mc_psuc(c), b = mc_psuc(c);
    CHECK(a.successes == b.successes);
    CHECK(a.miscorrections == b.miscorrections);
    CHECK(a.successes + a.miscorrections + a.failures == a.trials);
    const auto r1 = curves_csv(emit_curves(c, 1, 6, true));
    const auto r2 = curves_csv(emit_curves(c, 1, 6, true));
    CHECK(r1 == r2);
}

TEST_CASE("CSV layout")
{
    ExperimentConfig c = small_cfg();
    const auto rows = emit_curves(c, 1, 7, false);
    const std::string csv = curves_csv(rows);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,RS,LA,LA1,LA2,LT,U,Sim");
    std::size_t count = 0;
    while (std::getline(in, line)) {
        ++count;
        CHECK(std::count(line.begin(), line.end(), ',') == 7);
        CHECK(line.back() == ','); // no Sim column without simulation
    }
    CHECK(count == 7);
    // LA only defined for t <= d - 1: row t = 7 has an empty LA cell
    CHECK(csv.find("\n7,") != std::string::npos);
    const auto last = csv.substr(csv.find("\n7,") + 1);
    std::istringstream cells(last);
    std::string cell;
    std::vector<std::string> v;
    while (std::getline(cells, cell, ','))
        v.push_back(cell);
    REQUIRE(v.size() >= 3);
    CHECK(v[2].empty());
}

TEST_CASE("probability formatting")
{
    CHECK(format_prob(0.5) == "0.5");
    CHECK(format_prob(1.0) == "1");
    CHECK(format_prob(1.0 / 3) == "0.333333333333");
    CHECK(format_prob(1e-20) == "1e-20");
    std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
    CHECK(format_prob(0.25) == "0.25");
    std::setlocale(LC_NUMERIC, "C");
}

TEST_CASE("simulation stays inside the bounds")
{
    ExperimentConfig c = small_cfg();
    c.trials = 200;
    auto sig = [&](double b) { return std::sqrt(b * (1 - b) / double(c.trials)); };
    for (const auto& row : emit_curves(c, 1, 6, true))
        CHECK(*row.bounds[0] <= *row.sim + 3 * sig(*row.bounds[0]) + 1e-12);
    c.code = CodeKind::alternant;
    for (const auto& row : emit_curves(c, 1, 6, true)) {
        if (row.bounds[1])
            CHECK(*row.bounds[1] <= *row.sim + 3 * sig(*row.bounds[1]) + 1e-12);
        if (row.bounds[5])
            CHECK(*row.sim <= *row.bounds[5] + 3 * sig(*row.bounds[5]) + 1e-12);
    }
}
