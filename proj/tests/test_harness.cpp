#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <thread>

#include "ffid/harness.hpp"

using namespace ffid;

namespace {

ReportDoc run(const std::vector<CaseSpec>& g, int jobs) {
    ReportDoc d;
    d.config = {{"command", "verify"}, {"seed", "7"}};
    d.cases = run_cases(g, RunOptions{jobs, 60}).results;
    return d;
}

}  // namespace

TEST_CASE("empty grid") {
    ReportDoc d;
    Summary s = d.summary();
    CHECK(s == Summary{0, 0, 0});
    CHECK(exit_code(d) == 0);
    std::string j = to_json(d);
    CHECK(j.find("\"summary\": {\n    \"pass\": 0,\n    \"fail\": 0,\n    \"skipped\": 0") != std::string::npos);
    CHECK(from_json(j) == d);
}

TEST_CASE("single pass case round-trips") {
    GridOptions o;
    o.q = 2, o.d = 1, o.kmax = 1, o.mmax = 1;
    auto g = build_grid("nathan", o);
    REQUIRE(g.size() == 1);
    ReportDoc d = run(g, 1);
    REQUIRE(d.cases.size() == 1);
    CHECK(d.cases[0].status == Status::pass);
    d.cases[0].wall_ms = 0;
    CHECK(from_json(to_json(d)) == d);
    d.timing = true;
    d.cases[0].wall_ms = 17;
    CHECK(from_json(to_json(d)) == d);
    CHECK(to_json(from_json(to_json(d))) == to_json(d));
}

TEST_CASE("identical inputs give byte-identical JSON, whatever the job count") {
    GridOptions o;
    o.seed = 7;
    auto g = build_grid("factorization", o);
    auto s = build_grid("stabilization", o);
    g.insert(g.end(), s.begin(), s.end());
    auto m = build_grid("motivic", o);
    g.push_back(m.front());
    std::string a = to_json(run(g, 1)), b = to_json(run(g, 1));
    std::reverse(g.begin(), g.end());
    std::string c = to_json(run(g, 3));
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("grids and case keys") {
    GridOptions o;
    CHECK(build_grid("factorization", o).size() == 3 * 3 * 5);
    CHECK(build_grid("nathan", o).size() == 2 * 3 * (6 + 5 + 4));
    CHECK(build_grid("thmE", o).size() == 2 * 2 * 3);
    CHECK(build_grid("carlitz-ratio", o).size() == 4);
    o.q = 3, o.d = 2, o.kmax = 4;
    auto g = build_grid("factorization", o);
    REQUIRE(g.size() == 4);
    CHECK(g[3].get("k") == 4);
    CHECK_THROWS_AS(build_grid("nope", o), std::invalid_argument);
    CHECK(families().size() == 11);
    for (auto& f : families()) CHECK(is_family(f.name));
    CaseSpec a{"factorization", {{"q", 2}, {"d", 3}, {"k", 1}}}, b{"factorization", {{"q", 3}, {"d", 1}, {"k", 1}}},
        c{"motivic", {{"q", 2}}};
    CHECK(case_key_less(a, b));
    CHECK(case_key_less(b, c));
    CHECK_FALSE(case_key_less(c, a));
}

TEST_CASE("statuses and exit codes") {
    CaseSpec limit{"thmE", {{"q", 2}, {"d", 1}, {"k", 0}, {"prec", 64}, {"tdeg", 3}}};
    CaseResult r = run_case(limit);
    CHECK(r.status == Status::skipped);
    CHECK(r.witness.rfind("precision", 0) == 0);
    ReportDoc d;
    d.cases = {r};
    CHECK(exit_code(d) == 3);
    CaseResult f;
    f.spec = {"nathan", {{"q", 2}}};
    f.status = Status::fail;
    f.witness = "x";
    d.cases.push_back(f);
    CHECK(exit_code(d) == 2);
    CHECK(d.summary() == Summary{0, 1, 1});
    // parameters outside the domain fail with a message instead of aborting
    CaseResult bad = run_case({"nathan", {{"q", 2}, {"d", 1}, {"k", 1}, {"m", 2}}});
    CHECK(bad.status == Status::fail);
    CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("budget skips and records") {
    // about 50 ms of work against a 2 ms budget
    CaseSpec c{"motivic", {{"q", 2}, {"d", 1}, {"lmax", 4}, {"instances", 20}, {"seed", 1}}};
    RunOutcome o = run_cases({c}, RunOptions{1, 0.002});
    REQUIRE(o.results.size() == 1);
    CHECK(o.results[0].status == Status::skipped);
    CHECK(o.results[0].witness.rfind("budget", 0) == 0);
    CHECK(o.abandoned);
    // let the detached computation finish before the process tears down
    std::this_thread::sleep_for(std::chrono::seconds(2));
    CHECK(run_cases({c}, RunOptions{1, 0}).results[0].status == Status::pass);
}

TEST_CASE("text table and I/O errors") {
    ReportDoc d;
    CaseResult r;
    r.spec = {"thmE", {{"q", 2}, {"d", 1}}};
    r.witness = "certified digits 72";
    d.cases = {r};
    std::string t = to_text(d);
    CHECK(t.find("thmE            q=2 d=1") != std::string::npos);
    CHECK(t.find("summary: 1 pass, 0 fail, 0 skipped") != std::string::npos);
    CHECK_THROWS_WITH_AS(write_file("/nonexistent-dir/r.json", "{}"), doctest::Contains("/nonexistent-dir/r.json"),
                         std::runtime_error);
    CHECK_THROWS(from_json("{\"version\":{\"tool\":\"0\",\"schema\":\"9\"},\"config\":{},\"cases\":[],\"summary\":{}}"));
}
