#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rperm/permutation.hpp"

#include "cli_runner.hpp"
#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace rperm;

TEST_CASE("enumerate golden outputs") {
    const auto r22 = cli::run("enumerate --r 2 --n 2");
    CHECK(r22.exit_code == 0);
    CHECK(r22.out == "1122 d=1\n1221 d=2\n2211 d=2\n");

    const auto r31 = cli::run("enumerate --r 3 --n 1");
    CHECK(r31.exit_code == 0);
    CHECK(r31.out == "111 d=1\n");

    const auto r10 = cli::run("enumerate --r 1 --n 0");
    CHECK(r10.exit_code == 0);
    CHECK(r10.out == "- d=0\n");

    const auto sup = cli::run("enumerate --r 2 --support 4 9");
    CHECK(sup.exit_code == 0);
    CHECK(sup.out == "4499 d=1\n4994 d=2\n9944 d=2\n");
}

TEST_CASE("tree golden outputs") {
    const auto worked = cli::run("tree --r 3 --perm 122211334443");
    CHECK(worked.exit_code == 0);
    CHECK(worked.out == "1(_,2(_,_,_,_),_,3(_,_,4(_,_,_,_),_))\n");

    const auto chain = cli::run("tree --r 0 --perm 123");
    CHECK(chain.exit_code == 0);
    CHECK(chain.out == "1(2(3(_)))\n");

    const auto skel = cli::run("tree --r 3 --perm 122211334443 --skeleton 0");
    CHECK(skel.exit_code == 0);
    CHECK(skel.out ==
          "skeleton: 1(3(_)) d=1\n"
          "deleted: 2(_,_,_,_) d=1\n"
          "deleted: 4(_,_,_,_) d=1\n"
          "deleted-total: d=2\n");

    const auto empty = cli::run("tree --r 2 --perm -");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out == "_\n");
}

TEST_CASE("table golden outputs") {
    const auto plain = cli::run("table --r 1 --nmax 2");
    CHECK(plain.exit_code == 0);
    CHECK(plain.out == "[1]\n[0,1]\n[0,1,1]\n");

    const auto single = cli::run("table --r 5 --nmax 0");
    CHECK(single.exit_code == 0);
    CHECK(single.out == "[1]\n");

    const auto csv = cli::run("table --r 2 --nmax 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.starts_with("n,k,count\n"));
    CHECK(csv.out.find("3,2,8\n") != std::string::npos);
}

TEST_CASE("csv output round-trips") {
    const auto csv = cli::run("table --r 2 --nmax 4 --format csv");
    REQUIRE(csv.exit_code == 0);
    std::istringstream in(csv.out);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "n,k,count");
    std::vector<std::vector<Int>> rows(5);
    while (std::getline(in, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const int n = std::stoi(line.substr(0, c1));
        const int k = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
        REQUIRE(n >= 0);
        REQUIRE(n < 5);
        REQUIRE(k == static_cast<int>(rows[n].size()));  // dense, in order
        rows[n].emplace_back(line.substr(c2 + 1));
    }
    for (int n = 0; n <= 4; ++n)
        CHECK(rows[n] == descent_polynomial(RSpec::first_n(2, n)).coeffs);
}

TEST_CASE("json output round-trips") {
    const auto res = cli::run("table --r 3 --nmax 4 --format json");
    REQUIRE(res.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(res.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 5);
    for (int n = 0; n <= 4; ++n) {
        const auto want = descent_polynomial(RSpec::first_n(3, n)).coeffs;
        REQUIRE(doc[n].size() == want.size());
        for (std::size_t k = 0; k < want.size(); ++k)
            CHECK(Int(doc[n][k].get<std::string>()) == want[k]);
    }
}

TEST_CASE("verify golden outputs") {
    const auto ode = cli::run("verify ode --r 2 --order 6");
    CHECK(ode.exit_code == 0);
    CHECK(ode.out == "OK ode r=2 N=6 indices 0..5\n");

    const auto skel = cli::run("verify skeleton --r 2 --s 1 --order 6");
    CHECK(skel.exit_code == 0);
    CHECK(skel.out == "OK skeleton r=2 s=1 N=6 indices 0..6\n");

    const auto rd0 = cli::run("verify skeleton --r 1 --s 0 --order 5");
    CHECK(rd0.exit_code == 0);
    CHECK(rd0.out == "OK skeleton r=1 s=0 N=5 indices 0..5\n");
}

TEST_CASE("exit-code contract") {
    CHECK(cli::run("verify skeleton --r 2 --s 2 --order 6").exit_code == 1);  // needs s < r
    CHECK(cli::run("enumerate --r 2 --n 12").exit_code == 2);                 // over the cap
    CHECK(cli::run("enumerate --r 2 --n 4 --cap 3").exit_code == 2);
    CHECK(cli::run("tree --r 2 --perm 2121").exit_code == 1);
    CHECK(cli::run("tree --r 0 --perm 132").exit_code == 1);
    CHECK(cli::run("enumerate --r 2").exit_code == 1);        // needs --n or --support
    CHECK(cli::run("enumerate --n 2").exit_code == 1);        // --r is required
    CHECK(cli::run("nonsense").exit_code == 1);
    CHECK(cli::run("table --r 1 --nmax 2 --format yaml").exit_code == 1);
    CHECK(cli::run("--help").exit_code == 0);
}

TEST_CASE("byte-identical reruns") {
    const std::vector<std::string> invocations = {
        "enumerate --r 3 --n 3",
        "tree --r 3 --perm 122211334443 --skeleton 1",
        "table --r 2 --nmax 4 --format json",
        "verify skeleton --r 3 --s 1 --order 5",
    };
    for (const auto& args : invocations) {
        const auto first = cli::run(args);
        const auto second = cli::run(args);
        CHECK(first.exit_code == 0);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
        CHECK_FALSE(first.out.empty());
    }
}
