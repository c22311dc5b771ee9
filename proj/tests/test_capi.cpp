#include "codewb.h"

#include <doctest.h>
#include <json.hpp>

#include <string>

using json = nlohmann::json;

namespace {

struct Run {
    cwb_status status;
    json out;
    std::string csv;
};

Run run(const char* op, const json& params)
{
    cwb_result* r = nullptr;
    Run out{cwb_run(op, params.dump().c_str(), &r), {}, {}};
    if (out.status == CWB_OK) {
        out.out = json::parse(cwb_result_json(r));
        out.csv = cwb_result_csv(r);
        cwb_result_free(r);
    }
    return out;
}

} // namespace

TEST_CASE("metadata")
{
    CHECK(std::string(cwb_version()).size() > 0);
    CHECK(std::string(cwb_status_name(CWB_E_GUARD)).size() > 0);
    std::size_t n = 0;
    for (auto ops = cwb_operations(); *ops; ++ops)
        ++n;
    CHECK(n == 13);
}

TEST_CASE("field handle")
{
    cwb_field* f = nullptr;
    REQUIRE(cwb_field_new(4, 2, &f) == CWB_OK);
    CHECK(cwb_field_order(f) == 16);
    const std::uint64_t g = cwb_field_gamma(f);
    std::uint64_t x = 0, y = 0;
    CHECK(cwb_field_pow(f, g, 15, &x) == CWB_OK);
    CHECK(x == 1);
    CHECK(cwb_field_inv(f, g, &x) == CWB_OK);
    CHECK(cwb_field_mul(f, g, x, &y) == CWB_OK);
    CHECK(y == 1);
    CHECK(cwb_field_add(f, g, g, &y) == CWB_OK);
    CHECK(y == 0);
    CHECK(cwb_field_frob(f, g, 2, &y) == CWB_OK);
    CHECK(y == g);
    CHECK(cwb_field_inv(f, 0, &x) == CWB_E_DIV_ZERO);
    CHECK(std::string(cwb_last_error()).size() > 0);
    CHECK(cwb_field_mul(f, 16, 1, &x) == CWB_E_INVALID);
    cwb_field_free(f);
    CHECK(cwb_field_new(6, 1, &f) == CWB_E_INVALID);
}

TEST_CASE("skew evaluation")
{
    const Run r = run("skew-eval", {{"q", 2}, {"m", 2}, {"f", {1, 1, 0, 1}}, {"a", "g^1"}, {"beta", 1}, {"elements", "exp"}});
    REQUIRE(r.status == CWB_OK);
    CHECK(r.out["value"] == "g^2");
    CHECK(r.out["quotient_by_X_minus_a"] == json::array({"0", "g^1", "g^0"}));
    CHECK(r.csv.rfind("key,value\n", 0) == 0);
    CHECK(std::string(cwb_last_error()).empty());
}

TEST_CASE("errors map to status codes")
{
    CHECK(run("nope", json::object()).status == CWB_E_INVALID);
    cwb_result* r = nullptr;
    CHECK(cwb_run("skew-eval", "{not json", &r) == CWB_E_INVALID);
    CHECK(cwb_run("skew-eval", "{}", nullptr) == CWB_E_INVALID);
    CHECK(run("qlrs-local", {{"ell", 3}, {"r", 3}, {"tau", 0.5}, {"trials", 10}}).status == CWB_E_INVALID);
    CHECK(run("aad-build", {{"n", 5}, {"k", 2}, {"q", 7}}).status == CWB_E_GUARD);
    CHECK(run("support-build", {{"q", 4}, {"m", 3}, {"parts", {3, 3}}, {"n", 6}, {"k", 2}, {"Z", {{0, 1}, {0, 1}}}, {"seed", 1}})
              .status == CWB_E_GUARD);
}

TEST_CASE("stochastic operations are reproducible")
{
    const json p{{"code", "alternant"}, {"q", 2}, {"m", 4}, {"d", 7}, {"s", 2}, {"t", 4}, {"trials", 50}, {"seed", 9}};
    const Run a = run("il-sim", p), b = run("il-sim", p);
    REQUIRE(a.status == CWB_OK);
    CHECK(a.out == b.out);
    const Run t = run("bounds-table", {{"code", "alternant"}, {"q", 2}, {"m", 4}, {"d", 7}, {"s", 2}, {"t_lo", 1}, {"t_hi", 5},
                                       {"trials", 20}, {"seed", 3}});
    REQUIRE(t.status == CWB_OK);
    CHECK(t.csv.rfind("t,RS,LA,LA1,LA2,LT,U,Sim\n", 0) == 0);
}
