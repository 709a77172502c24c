// Copyright 2026 the hyperci authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "hyperci/cli.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = hyperci::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct EnvGuard {
  EnvGuard(const char* k, const char* v) : key(k) { ::setenv(k, v, 1); }
  ~EnvGuard() { ::unsetenv(key); }
  const char* key;
};

}  // namespace

TEST_CASE("decide text output") {
  const auto r = run_cli({"decide", "3", "4", "1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "NotContains\n");
  CHECK(r.err == "# prime=2147483647 seed=0 trials=2\n");
}

TEST_CASE("decide json output") {
  const auto r = run_cli({"decide", "5", "6", "1,1,1,1", "--json"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("{\"verdict\":\"Contains\",\"certified\":true,", 0) == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "Contains");
  CHECK(j["certified"] == true);
  CHECK(j["hilbert_at_d"] == 0);
  CHECK(j["trials"] == 2);
  CHECK(j["trials_used"] == 1);
  CHECK(j["prime"] == 2147483647);
  CHECK(j["seed"] == 0);
  CHECK(j["input"]["n"] == 5);
  CHECK(j["input"]["a"] == std::vector<int>({1, 1, 1, 1}));
  CHECK(j["normalized"]["a"] == std::vector<int>({1, 1, 1, 1}));
  CHECK(r.err.empty());
}

TEST_CASE("decide json reports a null hilbert value on trivial containment") {
  const auto r = run_cli({"decide", "3", "4", "4,2", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "TriviallyContains");
  CHECK(j["certified"] == true);
  CHECK(j["hilbert_at_d"].is_null());
}

TEST_CASE("json flag and output option agree") {
  const auto a = run_cli({"decide", "3", "3", "1,1", "--json"});
  const auto b = run_cli({"decide", "3", "3", "1,1", "--output", "json"});
  CHECK(a.out == b.out);
  CHECK(a.code == 0);
}

TEST_CASE("identical invocations produce identical bytes") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"decide", "3", "4", "1,2", "--json"},
           {"hf", "3", "4", "--degrees", "1,1,3,3"},
           {"join", "3", "4", "--lambdas", "1+3;1+3"},
           {"verify", "--nmax", "3", "--dmax", "3"}}) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("classify text and json output") {
  const auto text = run_cli({"classify", "9", "3", "1,1,1,1,1"});
  CHECK(text.code == 0);
  CHECK(text.out == "NotContains 2r=n+1\n");
  CHECK(text.err.empty());

  const auto json = run_cli({"classify", "9", "3", "1,1,1,1,1", "--json"});
  CHECK(json.code == 0);
  CHECK(json.out == "{\"verdict\":\"NotContains\",\"branch\":\"2r=n+1\"}\n");

  const auto tsv = run_cli({"classify", "3", "4", "1,1", "--output", "tsv"});
  CHECK(tsv.code == 0);
  CHECK(tsv.out == "verdict\tbranch\nNotContains\t2r=n+1\n");
}

TEST_CASE("hf value output") {
  const auto r = run_cli({"hf", "4", "3", "--degrees", "2,2,2,2,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");
  CHECK(r.err == "# prime=2147483647 seed=0 trials=2\n");

  const auto j = run_cli({"hf", "4", "3", "--degrees", "2,2,2,2,2", "--json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["value"] == 10);
  CHECK(parsed["certified"] == false);
}

TEST_CASE("series output") {
  const auto r = run_cli({"series", "5", "--degrees", "2,2,2,2,2", "--dmax", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 5 10 10 5 1 0\n");
  CHECK(r.err.empty());

  const auto j = run_cli({"series", "5", "--degrees", "2,2,2,2,2,2", "--dmax", "4", "--json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["values"] == std::vector<long long>({1, 5, 9, 5, 0}));
  CHECK(parsed["mode"] == "exact_conjectural");
}

TEST_CASE("join secant defect and fano output") {
  const auto join = run_cli({"join", "3", "4", "--lambdas", "1+3;1+3"});
  CHECK(join.code == 0);
  CHECK(join.out == "33\n");

  const auto secant = run_cli({"secant", "2", "1+1", "2"});
  CHECK(secant.code == 0);
  CHECK(secant.out == "5\n");

  const auto defect = run_cli({"defect", "3", "1+3"});
  CHECK(defect.code == 0);
  CHECK(defect.out == "12\n");

  const auto fano = run_cli({"fano", "3", "3", "2"});
  CHECK(fano.code == 0);
  CHECK(fano.out == "true\n");
  CHECK(fano.err.empty());

  const auto fano_no = run_cli({"fano", "3", "4", "2"});
  CHECK(fano_no.out == "false\n");

  const auto dj = run_cli({"defect", "3", "1+3", "--json"});
  const auto parsed = nlohmann::json::parse(dj.out);
  CHECK(parsed["reducible_dim"] == 22);
  CHECK(parsed["secant_dim"] == 33);
  CHECK(parsed["defect"] == 12);
}

TEST_CASE("verify text summary") {
  const auto r = run_cli({"verify", "--nmax", "3", "--dmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "instances: 4\n"
        "agreements: 4\n"
        "disagreements: 0\n"
        "skipped: 0\n");

  const auto j = run_cli({"verify", "--nmax", "3", "--dmax", "3", "--json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["total"] == 4);
  CHECK(parsed["agreements"] == 4);
  CHECK(parsed["disagreements"].empty());
  CHECK(parsed["skipped"].empty());

  const auto tsv = run_cli({"verify", "--nmax", "3", "--dmax", "3", "--output", "tsv"});
  CHECK(tsv.out.rfind("n\td\ta\tdecided\tpredicted\tbranch\thilbert_at_d\tagree\n", 0) == 0);
  CHECK(std::count(tsv.out.begin(), tsv.out.end(), '\n') == 5);
}

TEST_CASE("gorenstein output") {
  const auto r = run_cli({"gorenstein", "3", "4", "2,2,2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "hf: 1 5 10 10 5 1 0\n"
        "socle: 5\n"
        "c: 5/2\n"
        "alpha: 1/2\n"
        "beta: 3/2\n"
        "m_surjective: true\n"
        "general_case: false\n"
        "symmetric: true\n"
        "unimodal: true\n");

  const auto j = run_cli({"gorenstein", "3", "6", "3,3,3", "--json"});
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["socle"] == 10);
  CHECK(parsed["c"] == "5");
  CHECK(parsed["m_surjective"] == false);
  CHECK(parsed["general_case"] == true);
  CHECK(parsed["checks"]["symmetric"] == true);
  CHECK(parsed["checks"]["strictly_increasing_to_a1"] == true);
}

TEST_CASE("random options flow into the provenance line") {
  const auto r = run_cli({"decide", "3", "4", "1,1", "--seed", "5", "--trials", "3",
                          "--prime", "101"});
  CHECK(r.code == 0);
  CHECK(r.err == "# prime=101 seed=5 trials=3\n");
}

TEST_CASE("usage errors exit with one") {
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({"decide", "3", "4"}).code == 1);
  CHECK(run_cli({"decide", "3", "4", "1,,2"}).code == 1);
  CHECK(run_cli({"decide", "1", "4", "1"}).code == 1);
  CHECK(run_cli({"decide", "3", "4", "1,1", "--prime", "100"}).code == 1);
  CHECK(run_cli({"decide", "3", "4", "1,1", "--trials", "0"}).code == 1);
  CHECK(run_cli({"join", "3", "5", "--lambdas", "1+3"}).code == 1);
  CHECK(run_cli({"classify", "3", "4", "3"}).code == 1);
  CHECK(run_cli({"gorenstein", "2", "4", "1,2"}).code == 1);
}

TEST_CASE("help exits with zero") {
  const auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("decide") != std::string::npos);
  const auto sub = run_cli({"decide", "--help"});
  CHECK(sub.code == 0);
}

TEST_CASE("capacity overruns exit with two") {
  const auto r = run_cli({"hf", "10", "40", "--degrees", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("capacity error:", 0) == 0);
}

TEST_CASE("environment variables set the defaults") {
  {
    const EnvGuard prime("HYPERCI_PRIME", "97");
    const auto r = run_cli({"decide", "3", "4", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.err == "# prime=97 seed=0 trials=2\n");

    const auto overridden = run_cli({"decide", "3", "4", "1,1", "--prime", "101"});
    CHECK(overridden.err == "# prime=101 seed=0 trials=2\n");
  }
  {
    const EnvGuard cap("HYPERCI_CAPACITY", "10");
    const auto r = run_cli({"hf", "3", "4", "--degrees", "2"});
    CHECK(r.code == 2);
  }
  {
    const EnvGuard bad("HYPERCI_PRIME", "abc");
    const auto r = run_cli({"decide", "3", "4", "1,1"});
    CHECK(r.code == 1);
    CHECK(r.err == "error: HYPERCI_PRIME is not an integer\n");
  }
  const auto clean = run_cli({"decide", "3", "4", "1,1"});
  CHECK(clean.err == "# prime=2147483647 seed=0 trials=2\n");
}
