#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "dybe.h"

using Json = nlohmann::json;

namespace {

// owning wrapper so every test path frees its result
struct Run {
  dybe_result* r;
  explicit Run(const char* req) : r(dybe_run_json(req)) {}
  explicit Run(const std::string& req) : r(dybe_run_json(req.c_str())) {}
  ~Run() { dybe_result_free(r); }
  Run(const Run&) = delete;
  Run& operator=(const Run&) = delete;
  int status() const { return dybe_result_status(r); }
  std::string output() const { return dybe_result_output(r); }
  std::string report() const { return dybe_result_report(r); }
};

}  // namespace

TEST_CASE("library version") { CHECK(std::string(dybe_version()) == "0.1.0"); }

TEST_CASE("null and malformed requests are rejected, never crash") {
  CHECK(dybe_result_status(nullptr) == DYBE_BAD_REQUEST);
  CHECK(dybe_result_output(nullptr) != nullptr);
  CHECK(std::string(dybe_result_output(nullptr)).empty());
  CHECK(dybe_result_report(nullptr) != nullptr);
  dybe_result_free(nullptr);  // must be a no-op

  {
    Run r(nullptr);
    REQUIRE(r.r != nullptr);
    CHECK(r.status() == DYBE_BAD_REQUEST);
    CHECK(!r.report().empty());
  }
  {
    Run r("{nope");
    CHECK(r.status() == DYBE_BAD_REQUEST);
    CHECK(r.report().find("not valid JSON") != std::string::npos);
    CHECK(r.output().empty());
  }
  {
    Run r(R"js({"command":"verify","target":"qdybe","algebra":"A1",
              "modules":"L(1)","typo_field":1})js");
    CHECK(r.status() == DYBE_BAD_REQUEST);
    CHECK(r.report().find("typo_field") != std::string::npos);
  }
  {  // numeric mode without a seed
    Run r(R"js({"command":"verify","target":"qdybe","algebra":"A1",
              "modules":"L(1)","mode":"numeric"})js");
    CHECK(r.status() == DYBE_BAD_REQUEST);
    CHECK(r.report().find("seed") != std::string::npos);
  }
  {  // arity overflow
    Run r(R"js({"command":"compute","target":"qmatrix","algebra":"A1",
              "modules":["L(1)","L(1)"]})js");
    CHECK(r.status() == DYBE_BAD_REQUEST);
  }
  {  // unknown algebra family
    Run r(R"js({"command":"verify","target":"qdybe","algebra":"B2","modules":"L(1)"})js");
    CHECK(r.status() == DYBE_BAD_REQUEST);
  }
}

TEST_CASE("symbolic verification round trip") {
  Run r(R"js({"command":"verify","target":"qdybe","algebra":"A1","modules":"L(1)"})js");
  REQUIRE(r.r != nullptr);
  CHECK(r.status() == DYBE_OK);
  CHECK(r.report().find("[PASS] qdybe") != std::string::npos);

  Json out = Json::parse(r.output());
  CHECK(out.at("command") == "verify");
  CHECK(out.at("target") == "qdybe");
  CHECK(out.at("algebra") == "A1");
  CHECK(out.at("mode") == "symbolic");
  CHECK(out.at("status") == "pass");
  REQUIRE(out.at("reports").is_array());
  REQUIRE(out.at("reports").size() == 1);
  const Json& rep = out.at("reports").at(0);
  CHECK(rep.at("identity") == "qdybe");
  CHECK(rep.at("status") == "pass");
  CHECK(rep.at("operands") == "A1:L(1),A1:L(1),A1:L(1)");
}

TEST_CASE("symbolic compute emits the known exchange entries") {
  Run r(R"js({"command":"compute","target":"exchange","algebra":"A1","modules":"L(1),L(1)"})js");
  CHECK(r.status() == DYBE_OK);
  Json out = Json::parse(r.output());
  CHECK(out.at("target") == "exchange");
  const Json& entries = out.at("result").at("entries");
  REQUIRE(entries.is_array());
  bool saw_upper = false, saw_lower = false;
  for (const Json& e : entries) {
    REQUIRE(e.size() == 3);
    if (e.at(0) == "0|1" && e.at(1) == "1|0") {
      CHECK(e.at(2) == "-1/(x1+1)");
      saw_upper = true;
    }
    if (e.at(0) == "1|0" && e.at(1) == "0|1") {
      CHECK(e.at(2) == "1/(x1+1)");
      saw_lower = true;
    }
  }
  CHECK(saw_upper);
  CHECK(saw_lower);
}

TEST_CASE("numeric runs with one seed are bitwise reproducible") {
  const std::string req =
      R"js({"command":"verify","target":"cocycle","algebra":"A1",
          "modules":["L(1)","L(2)","L(1)"],"mode":"numeric","seed":97,"samples":2})js";
  Run a(req), b(req);
  CHECK(a.status() == DYBE_OK);
  CHECK(b.status() == DYBE_OK);
  CHECK(a.output() == b.output());
  CHECK(a.report() == b.report());
  Json out = Json::parse(a.output());
  const Json& rep = out.at("reports").at(0);
  CHECK(rep.at("mode") == "numeric");
  CHECK(rep.at("seed") == 97);
  CHECK(rep.at("sample").size() == 2);
}

TEST_CASE("verify all aggregates one report per identity") {
  Run r(R"js({"command":"verify","target":"all","algebra":"A1","modules":"L(1),L(2)",
            "order":4,"depth":2})js");
  CHECK(r.status() == DYBE_OK);
  Json out = Json::parse(r.output());
  REQUIRE(out.at("reports").size() == 7);
  std::string ids;
  for (const Json& rep : out.at("reports")) {
    CHECK(rep.at("status") == "pass");
    ids += rep.at("identity").get<std::string>() + ";";
  }
  CHECK(ids == "cocycle;qdybe;fusion-exchange;q-identities;eta;diffop-commute;mr;");
}
