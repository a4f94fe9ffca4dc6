#include "weylpark/character_io.hpp"
#include "weylpark/cli.hpp"
#include "weylpark/degeneration.hpp"
#include "weylpark/fock.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace weylpark;
using combinatorics::Partition;
using combinatorics::WeightVector;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = cli::kPass) {
    const auto r = run(std::move(args));
    REQUIRE(r.code == expected_code);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("argument parsing helpers") {
    CHECK(cli::parse_int_list("2,0") == std::vector<int>{2, 0});
    CHECK(cli::parse_int_list("-1") == std::vector<int>{-1});
    CHECK_THROWS_AS(cli::parse_int_list("2,x"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_int_list("2;1"), cli::UsageError);

    const auto h = cli::normalize_weight(std::string("3,2"), std::nullopt, 0, 2);
    CHECK(h.xi == WeightVector{3, 2});
    CHECK(h.lambda == Partition{1});
    CHECK(h.shift == 2);
    const auto g = cli::normalize_weight(std::nullopt, std::string("1"), 2, 3);
    CHECK(g.xi == WeightVector{3, 2, 2});
    CHECK(g.lambda == Partition{1});
    CHECK_THROWS_AS(cli::normalize_weight(std::string("1,2"), std::nullopt, 0, 2), cli::UsageError);
    CHECK_THROWS_AS(cli::normalize_weight(std::string("1,1,1"), std::nullopt, 0, 2), cli::UsageError);
    CHECK_THROWS_AS(cli::normalize_weight(std::nullopt, std::nullopt, 0, 2), cli::UsageError);

    CHECK(cli::resolve_jobs(3) == 3);
    setenv("WEYLPARK_JOBS", "4", 1);
    CHECK(cli::resolve_jobs(0) == 4);
    setenv("WEYLPARK_JOBS", "junk", 1);
    CHECK(cli::resolve_jobs(0) == 1);
    unsetenv("WEYLPARK_JOBS");
}

TEST_CASE("dims") {
    auto j = run_json({"dims", "--xi", "2,0", "--r", "2"});
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "dims");
    CHECK(j["admissible_sets"] == 5);
    CHECK(j["closure_dim"] == 5);
    CHECK(j["catalan"] == 5);
    CHECK(run_json({"dims", "--xi", "1", "--r", "3"})["closure_dim"] == 3);
    CHECK(run_json({"dims", "--xi", "0", "--r", "2"})["closure_dim"] == 1);
    auto shifted = run_json({"dims", "--signature", "1", "--s", "1", "--r", "2"});
    CHECK(shifted["xi"] == json({2, 1}));
    CHECK(shifted["closure_dim"] == 2);
    CHECK(shifted["catalan"] == 2);

    auto csv = run({"--format", "csv", "dims", "--xi", "2", "--r", "2"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("xi,r,N,admissible_sets,closure_dim,catalan,pass\n", 0) == 0);
    auto pretty = run({"--format", "pretty", "dims", "--xi", "2", "--r", "2"});
    CHECK(pretty.out.find("5 = 5 = 5") != std::string::npos);
}

TEST_CASE("usage errors and help") {
    CHECK(run({"dims", "--xi", "1,2", "--r", "2"}).code == cli::kUsageError);
    CHECK(run({"dims", "--r", "2"}).code == cli::kUsageError);
    CHECK(run({"dims", "--xi", "2"}).code == cli::kUsageError);
    CHECK(run({"dims", "--xi", "2", "--r", "two"}).code == cli::kUsageError);
    CHECK(run({"--format", "xml", "dims", "--xi", "2", "--r", "2"}).code == cli::kUsageError);
    CHECK(run({"char", "--xi", "2", "--r", "2", "--check", "nope"}).code == cli::kUsageError);
    CHECK(run({"parking", "--n", "2", "--rho", "1,2"}).code == cli::kUsageError);
    CHECK(run({}).code == cli::kUsageError);
    const auto help = run({"--help"});
    CHECK(help.code == cli::kPass);
    CHECK(help.out.find("limit-check") != std::string::npos);
}

TEST_CASE("char") {
    auto j = run_json({"char", "--xi", "2,0", "--r", "2", "--check", "symmetry", "--check", "degree", "--check",
                       "frobenius", "--check", "nindep"});
    CHECK(j["pass"] == true);
    CHECK(j["dim"] == 5);
    CHECK(j["checks"].size() == 4);
    for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
    CHECK(j["checks"][1]["detail"]["max_x_degree"] == 1);
    const auto ch = io::character_from_json(j["character"]);
    CHECK(ch == degeneration::bigraded_character(Partition{2}, 2));

    auto one = run_json({"char", "--xi", "1,1", "--r", "2"});
    REQUIRE(one["character"].size() == 1);
    CHECK(one["character"][0]["weight"] == json({1, 1}));
    CHECK(one["character"][0]["x"] == 0);
    CHECK(one["character"][0]["y"] == 0);

    // A tau-shifted weight reports shifted weights.
    auto sh = run_json({"char", "--xi", "3,1", "--r", "2", "--check", "frobenius"});
    CHECK(sh["pass"] == true);
    for (const auto& e : sh["character"]) CHECK(e["weight"][0].get<int>() + e["weight"][1].get<int>() == 4);
}

TEST_CASE("parking") {
    auto j = run_json({"parking", "--n", "3"});
    CHECK(j["count"] == 16);
    CHECK(j["orbit_sum"] == 16);
    auto h = run_json({"parking", "--n", "2", "--rho", "2,1", "--histogram"});
    CHECK(h["count"] == 3);
    CHECK(h["histogram"] == json({{"0", 2}, {"1", 1}}));
    CHECK(run_json({"parking", "--n", "0"})["count"] == 1);
    auto x = run_json({"parking", "--n", "2", "--xi", "2"});
    CHECK(x["rho"] == json({2, 1}));
}

TEST_CASE("coinvariant bound") {
    CHECK(run_json({"coinvariant-bound", "--r", "1"})["hset_count"] == 1);
    CHECK(run_json({"coinvariant-bound", "--r", "2"})["hset_count"] == 3);
    auto j = run_json({"coinvariant-bound", "--r", "3"});
    CHECK(j["hset_count"] == 16);
    CHECK(j["schur_count"] == 16);
}

TEST_CASE("fock-verify") {
    auto j = run_json({"--seed", "5", "fock-verify", "--r", "2", "--D", "2"});
    CHECK(j["pass"] == true);
    CHECK(j["seed"] == 5);
    for (const auto& c : j["checks"]) {
        CHECK(c["failures"] == 0);
        CHECK(c["cases"].get<long>() > 0);
    }
}

TEST_CASE("limit-check") {
    auto j = run_json({"limit-check", "--n", "0", "--r", "2", "--Nmax", "3", "--D", "2"});
    CHECK(j["pass"] == true);
    REQUIRE(j["agreement"].size() == 3);
    for (const auto& row : j["agreement"]) CHECK(row["stable_from"].get<int>() <= 3);
    CHECK(io::series_from_json(j["rhs"]) == fock::limit_character_rhs(0, 2, 2));
    CHECK(run_json({"limit-check", "--n", "0", "--D", "0"})["pass"] == true);
    CHECK(run({"limit-check", "--n", "0", "--Nmax", "0"}).code == cli::kUsageError);
}

TEST_CASE("output file") {
    const std::string path = "weylpark_cli_test_output.json";
    const auto r = run({"--output", path, "dims", "--xi", "2", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    CHECK(json::parse(f)["closure_dim"] == 5);
    std::remove(path.c_str());
}

TEST_CASE("serialization round trips") {
    const auto ch = degeneration::bigraded_character(Partition{3}, 2);
    CHECK(io::character_from_json(io::character_json(ch)) == ch);
    const auto csv = io::character_csv(ch);
    CHECK(csv.rfind("weight,x,y,dim\n", 0) == 0);

    const auto s = fock::limit_character_rhs(1, 2, 2);
    CHECK(io::series_from_json(io::series_json(s)) == s);

    CHECK(io::integer_json(mpz_class(42)) == 42);
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
    CHECK(io::integer_json(big) == big.get_str());
}
