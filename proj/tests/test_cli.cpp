#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

// Exercises the installed command line front end as a child process.  The
// binary path is baked in at configure time.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(ASTOWER_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("table csv matches the frozen bytes") {
    const auto r = run("table --imax 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "i,n_i,genus_hurwitz,genus_closed,N8,ratio_num,ratio_den,ratio_float\n"
          "1,4,1,1,14,14,1,14.000000\n"
          "2,6,5,5,26,26,5,5.200000\n");

    // level zero: the projective line row, ratio 9/0 kept unreduced
    const auto p1 = run("table --imax 0 --format csv");
    CHECK(p1.exit_code == 0);
    CHECK(p1.out ==
          "i,n_i,genus_hurwitz,genus_closed,N8,ratio_num,ratio_den,ratio_float\n"
          "0,2,0,0,9,9,0,inf\n");
}

TEST_CASE("verify is deterministic and reports through exit codes") {
    const auto a = run("verify");
    const auto b = run("verify");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("gf2m: PASS") != std::string::npos);
    CHECK(a.out.find("zeta: PASS") != std::string::npos);
    CHECK(a.out.find("all suites passed") != std::string::npos);

    const auto reduced = run("verify --imax 1");
    CHECK(reduced.exit_code == 0);
    CHECK(reduced.out.find("FAIL") == std::string::npos);

    // starved precision must fail the series suite and say why
    const auto starved = run("verify --precision 8");
    CHECK(starved.exit_code == 1);
    CHECK(starved.out.find("laurent: FAIL") != std::string::npos);
    CHECK(starved.out.find("precision") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("--bogus").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("table --imax 77").exit_code == 2);
    CHECK(run("table --format yaml").exit_code == 2);
    CHECK(run("zeta --level 3").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("table json holds one object per level") {
    const auto r = run("table --imax 1 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    const auto& row = doc[0];
    CHECK(row.at("i") == 1);
    CHECK(row.at("n_i") == 4);
    CHECK(row.at("genus_hurwitz") == 1);
    CHECK(row.at("genus_closed") == 1);
    CHECK(row.at("N8") == 14);
    CHECK(row.at("ratio_num") == 14);
    CHECK(row.at("ratio_den") == 1);
    CHECK(row.at("ratio_float") == "14.000000");
}

TEST_CASE("zeta json carries the degree ten polynomial") {
    const auto r = run("zeta --level 2 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("q") == 2);
    CHECK(doc.at("g") == 5);
    REQUIRE(doc.at("coeffs").size() == 11);
    CHECK(doc.at("coeffs")[0] == 1);
    CHECK(doc.at("coeffs")[10] == 32);
    REQUIRE(doc.at("roots_abs").size() == 10);
    for (const auto& m : doc.at("roots_abs"))
        CHECK(std::abs(m.get<double>() - std::sqrt(2.0)) < 1e-9);
    CHECK(doc.at("predicted_counts").size() == 5);
    CHECK(doc.at("passed") == true);
}

TEST_CASE("expand json exposes expansions and principal parts") {
    const auto r = run("expand --level 2 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("level") == 2);
    CHECK(doc.at("sequence") == "1,rho,0");
    REQUIRE(doc.at("expansions").size() == 3);
    CHECK(doc.at("expansions")[0].at("order") == 1);
    CHECK(doc.at("expansions")[0].at("coeffs").at("1") == 1);
    REQUIRE(doc.at("principal_parts").size() == 3);
    // F_2 on a class-one chain: top exponent two
    const auto& top = doc.at("principal_parts")[2].at("terms");
    CHECK(top.at("1") == 2);
    CHECK(top.at("2") == 2);
    CHECK(doc.at("legend").at("2") == "rho");
}

TEST_CASE("output lands in the file named by --out") {
    const std::string path = "/tmp/astower_cli_out_test.csv";
    std::remove(path.c_str());
    const auto r = run("table --imax 2 --format csv --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == run("table --imax 2 --format csv").out);
    std::remove(path.c_str());
}
