#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <string>

#include "stsd/stsd.h"

using nlohmann::json;

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  stsd_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

const char* kFano = "STS v=7\n0 1 3\n1 2 4\n2 3 5\n3 4 6\n0 4 5\n1 5 6\n0 2 6\n";

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(stsd_version()).size() > 0);
  CHECK(std::string(stsd_status_name(STSD_OK)) == "ok");
  CHECK(std::string(stsd_status_name(STSD_ERR_PARSE)) != "ok");
  stsd_budget b;
  stsd_budget_default(&b);
  CHECK(b.node_limit > 0);
  CHECK(b.time_limit_seconds > 0);
  CHECK(b.class_cap == 0);
}

TEST_CASE("system handles") {
  stsd_system* s = nullptr;
  REQUIRE(stsd_system_parse(kFano, &s) == STSD_OK);
  CHECK(stsd_system_order(s) == 7);
  CHECK(stsd_system_size(s) == 7);
  uint32_t t[3];
  CHECK(stsd_system_triple(s, 0, t) == STSD_OK);
  CHECK(t[0] == 0);
  CHECK(t[1] == 1);
  CHECK(t[2] == 3);
  CHECK(stsd_system_triple(s, 7, t) == STSD_ERR_INVALID_ARGUMENT);

  int ok = 0;
  char* js = nullptr;
  CHECK(stsd_system_verify_json(s, &ok, &js) == STSD_OK);
  CHECK(ok == 1);
  const auto report = take_json(js);
  CHECK(report["ok"] == true);
  CHECK(report["violation_count"] == 0);

  char* text = nullptr;
  CHECK(stsd_system_to_text(s, &text) == STSD_OK);
  CHECK(take(text).rfind("STS v=7\n", 0) == 0);
  stsd_system_free(s);
  stsd_system_free(nullptr);
}

TEST_CASE("create from a flat point array") {
  const uint32_t pts[] = {0, 1, 2};
  stsd_system* s = nullptr;
  REQUIRE(stsd_system_create(3, pts, 1, &s) == STSD_OK);
  int ok = 0;
  char* js = nullptr;
  CHECK(stsd_system_verify_json(s, &ok, &js) == STSD_OK);
  stsd_string_free(js);
  CHECK(ok == 1);
  stsd_system_free(s);

  const uint32_t bad[] = {0, 1, 5};
  CHECK(stsd_system_create(3, bad, 1, &s) == STSD_ERR_PRECONDITION);
  CHECK(std::string(stsd_last_error()).size() > 0);
}

TEST_CASE("errors map to status codes") {
  stsd_system* s = nullptr;
  CHECK(stsd_system_parse("STS v=7\n0 1\n", &s) == STSD_ERR_PARSE);
  CHECK(std::string(stsd_last_error()).find("line 2") != std::string::npos);
  CHECK(s == nullptr);
  CHECK(stsd_system_parse(nullptr, &s) == STSD_ERR_INVALID_ARGUMENT);
  CHECK(stsd_system_load("/nonexistent/stsd/x.sts", &s) == STSD_ERR_IO);
  CHECK(stsd_construct_wilson_schreiber(11, &s) == STSD_ERR_PRECONDITION);
  CHECK(stsd_construct_bose(7, 0, 0, &s) == STSD_ERR_PRECONDITION);
  char* js = nullptr;
  CHECK(stsd_numtheory_profile_json(15, &js) == STSD_ERR_PRECONDITION);
}

TEST_CASE("save and load round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "stsd_capi_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "ws.sts").string();
  stsd_system* ws = nullptr;
  REQUIRE(stsd_construct_wilson_schreiber(13, &ws) == STSD_OK);
  CHECK(stsd_system_save(ws, path.c_str()) == STSD_OK);
  stsd_system* back = nullptr;
  REQUIRE(stsd_system_load(path.c_str(), &back) == STSD_OK);
  char *a = nullptr, *b = nullptr;
  stsd_system_to_text(ws, &a);
  stsd_system_to_text(back, &b);
  CHECK(take(a) == take(b));

  stsd_system* fx = nullptr;
  stsd_colouring* col = nullptr;
  REQUIRE(stsd_fixture_sts33(&fx, &col) == STSD_OK);
  CHECK(stsd_colouring_class_count(col) == 18);
  const auto cpath = (dir / "fx.col").string();
  CHECK(stsd_colouring_save(col, 33, cpath.c_str()) == STSD_OK);
  stsd_colouring* col2 = nullptr;
  REQUIRE(stsd_colouring_load(cpath.c_str(), &col2) == STSD_OK);
  int ok = 0;
  char* js = nullptr;
  CHECK(stsd_colouring_verify_json(fx, col2, &ok, &js) == STSD_OK);
  CHECK(take_json(js)["ok"] == true);
  CHECK(ok == 1);

  stsd_colouring_free(col);
  stsd_colouring_free(col2);
  stsd_system_free(fx);
  stsd_system_free(ws);
  stsd_system_free(back);
  std::filesystem::remove_all(dir);
}

TEST_CASE("constructions and bounds") {
  stsd_system* b = nullptr;
  REQUIRE(stsd_construct_bose(11, 0, 0, &b) == STSD_OK);
  int cyclic = 0;
  CHECK(stsd_is_cyclic(b, &cyclic) == STSD_OK);
  CHECK(cyclic == 1);
  char* js = nullptr;
  REQUIRE(stsd_bound_mod3_json(b, nullptr, 0, &js) == STSD_OK);
  auto j = take_json(js);
  CHECK(j["bound"] == 5);
  CHECK(j["threshold"] == 6);
  CHECK(stsd_bound_ws_json(b, &js) == STSD_ERR_PRECONDITION);
  stsd_system_free(b);

  stsd_system* ws = nullptr;
  REQUIRE(stsd_construct_wilson_schreiber(13, &ws) == STSD_OK);
  REQUIRE(stsd_bound_ws_json(ws, &js) == STSD_OK);
  j = take_json(js);
  CHECK(j["bound"] == 1);
  CHECK(j["method"] == "ws-weight-argument");
  REQUIRE(stsd_parallel_classes_json(ws, nullptr, 1, &js) == STSD_OK);
  j = take_json(js);
  CHECK(j["status"] == "complete");
  CHECK(j["max_disjoint"] == 1);
  stsd_system_free(ws);
}

TEST_CASE("chromatic index through the API") {
  stsd_system* s = nullptr;
  REQUIRE(stsd_system_parse(kFano, &s) == STSD_OK);
  char* js = nullptr;
  stsd_colouring* best = nullptr;
  REQUIRE(stsd_chromatic_exact_json(s, nullptr, nullptr, &js, &best) == STSD_OK);
  const auto j = take_json(js);
  CHECK(j["exact"] == true);
  CHECK(j["chromatic_index"] == 7);
  CHECK(stsd_colouring_class_count(best) == 7);
  stsd_colouring_free(best);

  stsd_colouring* h = nullptr;
  CHECK(stsd_chromatic_heuristic(s, 6, 1, 2, 500, &h) == STSD_ERR_NOT_FOUND);
  CHECK(stsd_chromatic_heuristic(s, 7, 1, 2, 500, &h) == STSD_OK);
  CHECK(stsd_colouring_class_count(h) <= 7);
  stsd_colouring_free(h);
  stsd_system_free(s);
}

TEST_CASE("number theory and theorem through the API") {
  char* js = nullptr;
  REQUIRE(stsd_numtheory_profile_json(49, &js) == STSD_OK);
  auto j = take_json(js);
  CHECK(j["f"] == 2);
  CHECK(j["psi_star"] == 12);
  REQUIRE(stsd_numtheory_scan_json(600, &js) == STSD_OK);
  j = take_json(js);
  CHECK(j["exceptions"] == json::array({7, 11, 19, 31, 43, 73, 127, 511}));
  REQUIRE(stsd_theorem1_json(15, &js) == STSD_OK);
  j = take_json(js);
  CHECK(j["verdict"] == "certified");
  CHECK(j["index_lower"] == 9);

  int ok = 0;
  char *text = nullptr, *fj = nullptr;
  REQUIRE(stsd_factorise(13, &ok, &text, &fj) == STSD_OK);
  CHECK(ok == 1);
  CHECK(take(text).rfind("FACTOR 0", 0) == 0);
  stsd_string_free(fj);
}

TEST_CASE("generation through the API") {
  stsd_system* s = nullptr;
  REQUIRE(stsd_generate(19, 4, &s) == STSD_OK);
  int ok = 0;
  char* js = nullptr;
  stsd_system_verify_json(s, &ok, &js);
  stsd_string_free(js);
  CHECK(ok == 1);
  stsd_system_free(s);
  CHECK(stsd_generate(11, 4, &s) == STSD_ERR_PRECONDITION);

  REQUIRE(stsd_survey_json(9, 3, 1, 5, 1, &js) == STSD_OK);
  const auto j = take_json(js);
  CHECK(j["histogram"]["m"] == 3);
}
