#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "planch/cli.hpp"

using namespace planch;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  RunResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("pinned average examples") {
  RunResult a = run({"avg", "--obs", "fmu:1", "--n", "0..6"});
  CHECK(a.code == 0);
  CHECK(a.out == "0,1,2,3,4,5,6\n");
  CHECK(a.err.empty());

  RunResult b = run({"avg", "--obs", "content:p(2)", "--theta", "1", "--n", "2"});
  CHECK(b.code == 0);
  CHECK(b.out == "1\n");

  RunResult c = run({"avg", "--obs", "pstar:1", "--n", "5"});
  CHECK(c.code == 0);
  CHECK(c.out == "5\n");
}

TEST_CASE("pinned show examples") {
  RunResult coords =
      run({"show", "coords", "--lambda", "3,3,1", "--theta", "1/2"});
  CHECK(coords.code == 0);
  CHECK(coords.out == "X,3,0,-3/2\nY,2,-1/2\n");

  RunResult kernel = run({"show", "kernel", "--lambda", "", "--theta", "1"});
  CHECK(kernel.code == 0);
  CHECK(kernel.out == "partition,weight\n\"1\",1\n");

  RunResult measure = run({"show", "measure", "--n", "2", "--theta", "3"});
  CHECK(measure.code == 0);
  CHECK(measure.out == "partition,weight\n\"2\",3/4\n\"1,1\",1/4\n");

  RunResult jack = run({"show", "jack", "--lambda", "2", "--theta", "1/2"});
  CHECK(jack.code == 0);
  CHECK(jack.out ==
        "partition,coefficient\n\"2\",1\n\"1,1\",2/3\n"
        "# norm=8/3\n# dim=1\n# dim_prime=8/3\n");
}

TEST_CASE("json outputs") {
  RunResult a = run({"avg", "--obs", "fmu:1", "--n", "0..2", "--format", "json"});
  REQUIRE(a.code == 0);
  nlohmann::json avg = nlohmann::json::parse(a.out);
  CHECK(avg["observable"] == "fmu:1");
  CHECK(avg["theta"] == "1");
  CHECK(avg["measure"] == "plancherel");
  CHECK(avg["n"] == nlohmann::json({0, 1, 2}));
  CHECK(avg["values"] == nlohmann::json({"0", "1", "2"}));

  RunResult c = run({"show", "coords", "--lambda", "3,3,1", "--theta", "1/2",
                     "--format", "json"});
  REQUIRE(c.code == 0);
  nlohmann::json coords = nlohmann::json::parse(c.out);
  CHECK(coords["lambda"] == "3,3,1");
  CHECK(coords["X"] == nlohmann::json({"3", "0", "-3/2"}));
  CHECK(coords["Y"] == nlohmann::json({"2", "-1/2"}));

  RunResult j = run({"show", "jack", "--lambda", "2", "--theta", "1/2",
                     "--format", "json"});
  REQUIRE(j.code == 0);
  nlohmann::json jack = nlohmann::json::parse(j.out);
  CHECK(jack["basis"] == "monomial");
  CHECK(jack["norm"] == "8/3");
  CHECK(jack["dim"] == "1");
  CHECK(jack["dim_prime"] == "8/3");

  RunResult m = run({"show", "measure", "--n", "2", "--theta", "3", "--format",
                     "json"});
  REQUIRE(m.code == 0);
  nlohmann::json measure = nlohmann::json::parse(m.out);
  CHECK(measure["n"] == 2);
  CHECK(measure["theta"] == "3");
  CHECK(measure["weights"].size() == 2);

  RunResult v = run({"verify", "stanley", "--n-max", "4", "--format", "json"});
  REQUIRE(v.code == 0);
  nlohmann::json suite = nlohmann::json::parse(v.out);
  CHECK(suite["suite"] == "stanley");
  CHECK(suite["all_pass"] == true);
  CHECK(suite["passed"] == suite["total"]);
}

TEST_CASE("identical configuration produces identical bytes") {
  std::vector<std::string> avg_args{"avg",     "--obs", "frak:3",
                                    "--theta", "5/3",   "--n",
                                    "0..5",    "--format", "json"};
  CHECK(run(avg_args).out == run(avg_args).out);

  std::vector<std::string> sample_args{"sample", "--n",    "6",
                                       "--trajectories", "25", "--seed", "11",
                                       "--theta", "2"};
  RunResult s1 = run(sample_args);
  RunResult s2 = run(sample_args);
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
}

TEST_CASE("sampler output") {
  RunResult five = run({"sample", "--n", "1", "--trajectories", "5", "--seed",
                        "7"});
  CHECK(five.code == 0);
  CHECK(five.out ==
        "trajectory,final\n0,\"1\"\n1,\"1\"\n2,\"1\"\n3,\"1\"\n4,\"1\"\n"
        "\n# frequencies\npartition,count,empirical,exact\n\"1\",5,1,1\n");

  RunResult trivial = run({"sample", "--n", "0", "--trajectories", "1",
                           "--seed", "3"});
  CHECK(trivial.code == 0);
  CHECK(trivial.out ==
        "trajectory,final\n0,\"\"\n"
        "\n# frequencies\npartition,count,empirical,exact\n\"\",1,1,1\n");

  RunResult paths = run({"sample", "--n", "2", "--trajectories", "2", "--seed",
                         "5", "--paths"});
  CHECK(paths.code == 0);
  CHECK(paths.out.substr(0, paths.out.find('\n')) ==
        "trajectory,lambda0,lambda1,lambda2");
  // Zero-count diagrams still get a frequency row with their exact weight.
  CHECK(paths.out.find("\"1,1\",0,0,1/2") != std::string::npos);
}

TEST_CASE("exit codes for usage errors") {
  CHECK(run({"avg", "--obs", "fmu:1", "--n", "3", "--bogus"}).code == 2);
  CHECK(run({"avg", "--n", "3"}).code == 2);
  CHECK(run({"avg", "--obs", "frak:0", "--n", "3"}).code == 2);
  CHECK(run({"avg", "--obs", "nope:1", "--n", "3"}).code == 2);
  CHECK(run({"avg", "--obs", "fmu:1", "--n", "3", "--theta", "0"}).code == 2);
  CHECK(run({"avg", "--obs", "fmu:1", "--n", "3", "--theta", "1.5"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"show", "coords"}).code == 2);
  CHECK(run({"show", "measure", "--theta", "2"}).code == 2);
  CHECK(run({"verify", "stanley", "--emit-table", "/tmp/planch_wrong.csv"})
            .code == 2);

  RunResult missing = run({"avg", "--n", "3"});
  CHECK_FALSE(missing.err.empty());
}

TEST_CASE("exit codes for verification outcomes") {
  RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK_FALSE(help.out.empty());

  CHECK(run({"verify", "stanley", "--n-max", "4"}).code == 0);
  CHECK(run({"verify", "duality", "--n-max", "3"}).code == 0);

  // Too few sample points for the claimed degree: bound violation, not a
  // verification failure.
  RunResult shallow = run({"verify", "polynomiality", "--theta", "2",
                           "--n-max", "3"});
  CHECK(shallow.code == 3);

  // The unrestricted sweep contains genuinely nonpolynomial families away
  // from theta one, so it reports failures and exits 1.
  RunResult sweep = run({"verify", "polynomiality-all-theta", "--theta", "2"});
  CHECK(sweep.code == 1);
  CHECK(sweep.err.find("first failure:") != std::string::npos);
  CHECK(sweep.out.find("FAIL") != std::string::npos);
}

TEST_CASE("file outputs") {
  std::string avg_path = "/tmp/planch_test_avg.csv";
  std::remove(avg_path.c_str());
  RunResult a = run({"avg", "--obs", "fmu:1", "--n", "0..6", "--out", avg_path});
  CHECK(a.code == 0);
  CHECK(a.out.empty());
  CHECK(slurp(avg_path) == "0,1,2,3,4,5,6\n");
  std::remove(avg_path.c_str());

  std::string table_path = "/tmp/planch_test_table.csv";
  std::remove(table_path.c_str());
  RunResult v = run({"verify", "polynomiality", "--theta", "1",
                     "--emit-table", table_path});
  CHECK(v.code == 0);
  std::string table = slurp(table_path);
  CHECK(table.substr(0, table.find('\n')) == "observable,theta,n,value");
  CHECK(table.find("content:p(1)") != std::string::npos);
  std::remove(table_path.c_str());
}
