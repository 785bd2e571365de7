#include "doctest.h"
#include "wekit/parallel.hpp"
#include "wekit/report.hpp"

#include <vector>

using namespace wekit;

TEST_CASE("float formatting") {
  CHECK(format_g17(2.0) == "2");
  CHECK(format_g17(0.1) == "0.10000000000000001");
  CHECK(format_g17(-1.8754727160553666) == "-1.8754727160553666");
}

TEST_CASE("json report is deterministic and well formed") {
  RunReport rep;
  rep.command = "identities";
  rep.config = {cfg("seed", 7), cfg("samples", 100), cfg("tol", 1e-9),
                cfg("generator", std::string("mt19937_64"))};
  rep.results.push_back(below("max_residual", 3.2e-12, 1e-9));
  rep.results.push_back(near("constant", 1.2094292, 1.209429, 1e-5));
  rep.results.push_back(claim("all_consistent", true));
  rep.pass = true;

  const std::string a = to_json(rep);
  const std::string b = to_json(rep);
  CHECK(a == b);
  CHECK(a.find("\"command\": \"identities\"") != std::string::npos);
  CHECK(a.find("\"tol\": 1.0000000000000001e-09") != std::string::npos);
  CHECK(a.find("\"pass\": true") != std::string::npos);
  CHECK(a.back() == '\n');
}

TEST_CASE("check row semantics") {
  CHECK(below("x", 0.5, 1.0).pass);
  CHECK_FALSE(below("x", 2.0, 1.0).pass);
  CHECK(near("x", 1.0005, 1.0, 1e-3).pass);
  CHECK_FALSE(near("x", 1.01, 1.0, 1e-3).pass);
}

TEST_CASE("csv escaping") {
  CHECK(csv_line({"a", "b", "c"}) == "a,b,c\n");
  CHECK(csv_line({"a,b", "q\"t"}) == "\"a,b\",\"q\"\"t\"\n");
}

TEST_CASE("parallel_for is deterministic and complete") {
  std::vector<int> slots(1000, -1);
  parallel_for(1000, [&](int i) { slots[i] = 3 * i + 1; });
  for (int i = 0; i < 1000; ++i) CHECK(slots[i] == 3 * i + 1);
  CHECK(worker_count() >= 1);
}
