// stsd command-line tool. Talks to the library only through stsd.h.
//
// Exit codes: 0 success, 1 verification failure or negative verdict,
// 2 usage or input error, 3 search budget exhausted.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stsd/stsd.h"

namespace {

using json = nlohmann::json;

constexpr const char* kSchema = "stsd-report/1";
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct Failure {
  int code;
  std::string message;
};

struct SystemDeleter {
  void operator()(stsd_system* s) const { stsd_system_free(s); }
};
struct ColouringDeleter {
  void operator()(stsd_colouring* c) const { stsd_colouring_free(c); }
};
using SystemPtr = std::unique_ptr<stsd_system, SystemDeleter>;
using ColouringPtr = std::unique_ptr<stsd_colouring, ColouringDeleter>;

void check(stsd_status status) {
  if (status == STSD_OK) return;
  const bool input_problem = status == STSD_ERR_INVALID_ARGUMENT || status == STSD_ERR_PRECONDITION ||
                             status == STSD_ERR_PARSE || status == STSD_ERR_IO;
  throw Failure{input_problem ? kExitUsage : kExitNegative,
                std::string(stsd_status_name(status)) + " error: " + stsd_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  stsd_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

SystemPtr load_system(const std::string& path) {
  stsd_system* s = nullptr;
  check(stsd_system_load(path.c_str(), &s));
  return SystemPtr(s);
}

ColouringPtr load_colouring(const std::string& path) {
  stsd_colouring* c = nullptr;
  check(stsd_colouring_load(path.c_str(), &c));
  return ColouringPtr(c);
}

struct Options {
  bool json = false;
  unsigned threads = 0;
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
};

Options g_opts;

/// Prints `text` or the JSON envelope, and returns `code`.
int finish(const std::string& command, json result, const std::string& text, int code) {
  if (g_opts.json) {
    json out = {{"schema", kSchema}, {"command", command}, {"exit_code", code}, {"result", std::move(result)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  }
  return code;
}

stsd_budget budget() {
  stsd_budget b;
  stsd_budget_default(&b);
  if (g_opts.budget_nodes) b.node_limit = g_opts.budget_nodes;
  if (g_opts.budget_seconds > 0) b.time_limit_seconds = g_opts.budget_seconds;
  return b;
}

unsigned threads() {
  if (g_opts.threads) return g_opts.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string join(const json& array) {
  std::string out;
  for (const auto& x : array) {
    if (!out.empty()) out += ' ';
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

void append_violations(std::ostringstream& text, const json& report) {
  for (const auto& v : report["violations"]) text << "  " << v.get<std::string>() << '\n';
  const auto shown = report["violations"].size();
  const auto total = report["violation_count"].get<std::size_t>();
  if (total > shown) text << "  ... " << (total - shown) << " more\n";
}

// Verifies, then writes to `out` or prints the system text.
int emit_system(const std::string& command, const SystemPtr& sys, const std::string& out) {
  int ok = 0;
  char* raw = nullptr;
  check(stsd_system_verify_json(sys.get(), &ok, &raw));
  json result = take_json(raw);
  std::ostringstream text;
  if (!out.empty()) {
    check(stsd_system_save(sys.get(), out.c_str()));
    result["out"] = out;
    text << "wrote STS(" << stsd_system_order(sys.get()) << ") with " << stsd_system_size(sys.get())
         << " triples to " << out << (ok ? " (verified)" : " (INVALID)") << '\n';
  } else {
    char* body = nullptr;
    check(stsd_system_to_text(sys.get(), &body));
    const std::string sts = take(body);
    result["sts"] = sts;
    text << sts;
  }
  if (!ok) append_violations(text, result);
  return finish(command, result, text.str(), ok ? kExitOk : kExitNegative);
}

// --- commands ----------------------------------------------------------------

int cmd_verify(const std::string& in, const std::string& colouring_path) {
  auto sys = load_system(in);
  int ok = 0;
  char* raw = nullptr;
  check(stsd_system_verify_json(sys.get(), &ok, &raw));
  json result = {{"system", take_json(raw)}};
  std::ostringstream text;
  const json& s = result["system"];
  text << "STS(" << s["v"] << ") with " << s["triples"] << " triples: " << (ok ? "valid" : "INVALID") << '\n';
  append_violations(text, s);
  bool all_ok = ok != 0;
  if (!colouring_path.empty()) {
    auto col = load_colouring(colouring_path);
    int cok = 0;
    check(stsd_colouring_verify_json(sys.get(), col.get(), &cok, &raw));
    result["colouring"] = take_json(raw);
    const json& c = result["colouring"];
    text << "colouring with " << c["classes"] << " classes: " << (cok ? "valid" : "INVALID") << '\n';
    append_violations(text, c);
    all_ok = all_ok && cok;
  }
  result["ok"] = all_ok;
  return finish("verify", result, text.str(), all_ok ? kExitOk : kExitNegative);
}

int cmd_fixture(const std::string& out, const std::string& colouring_out) {
  stsd_system* s = nullptr;
  stsd_colouring* c = nullptr;
  check(stsd_fixture_sts33(&s, &c));
  SystemPtr sys(s);
  ColouringPtr col(c);
  int ok = 0, cok = 0;
  char* raw = nullptr;
  check(stsd_system_verify_json(sys.get(), &ok, &raw));
  json result = {{"system", take_json(raw)}};
  check(stsd_colouring_verify_json(sys.get(), col.get(), &cok, &raw));
  result["colouring"] = take_json(raw);
  std::ostringstream text;
  if (!out.empty()) {
    check(stsd_system_save(sys.get(), out.c_str()));
    text << "wrote STS(33) to " << out << '\n';
  }
  if (!colouring_out.empty()) {
    check(stsd_colouring_save(col.get(), 33, colouring_out.c_str()));
    text << "wrote " << stsd_colouring_class_count(col.get()) << "-class colouring to " << colouring_out << '\n';
  }
  if (out.empty() && colouring_out.empty()) {
    char* body = nullptr;
    check(stsd_system_to_text(sys.get(), &body));
    text << take(body);
    check(stsd_colouring_to_text(col.get(), 33, &body));
    text << take(body);
  }
  text << "system " << (ok ? "valid" : "INVALID") << ", colouring with " << stsd_colouring_class_count(col.get())
       << " classes " << (cok ? "valid" : "INVALID") << '\n';
  return finish("fixture sts33", result, text.str(), ok && cok ? kExitOk : kExitNegative);
}

int cmd_profile(std::uint64_t n) {
  char* raw = nullptr;
  check(stsd_numtheory_profile_json(n, &raw));
  const json r = take_json(raw);
  std::ostringstream text;
  std::vector<std::uint64_t> divisors;
  for (const auto& d : r["divisors"]) divisors.push_back(d["d"]);
  text << "n=" << r["n"] << "\ndivisors=" << join(json(divisors)) << "\nphi=" << r["phi"]
       << "\nsub_order=" << r["subgroup_order"] << "\ng=" << r["g"] << "\nf=" << r["f"] << "\npsi=" << r["psi"]
       << "\npsi_star=" << r["psi_star"] << '\n';
  return finish("numtheory profile", r, text.str(), kExitOk);
}

int cmd_scan(std::uint64_t limit, bool negative_psi, bool tsv) {
  char* raw = nullptr;
  check(stsd_numtheory_scan_json(limit, &raw));
  json r = take_json(raw);
  std::ostringstream text;
  if (tsv) {
    char* table = nullptr;
    check(stsd_numtheory_table_tsv(limit, &table));
    text << take(table);
  } else if (negative_psi) {
    text << "n\tpsi\n";
    for (const auto& row : r["negative_psi"]) text << row["n"] << '\t' << row["psi"] << '\n';
  } else {
    text << "n <= " << limit << " coprime to 6 with psi*(n) <= 0: " << join(r["exceptions"]) << '\n';
  }
  return finish("numtheory scan", r, text.str(), kExitOk);
}

int cmd_growth(std::uint64_t limit, std::uint64_t step) {
  char* raw = nullptr;
  check(stsd_numtheory_growth_json(limit, step, &raw));
  const json r = take_json(raw);
  std::ostringstream text;
  text << "n        f(n)   f(n)/n\n";
  for (const auto& row : r["rows"]) {
    char line[80];
    std::snprintf(line, sizeof line, "%-8llu %-6llu %.6f\n", row["n"].get<unsigned long long>(),
                  row["f"].get<unsigned long long>(), row["ratio"].get<double>());
    text << line;
  }
  return finish("numtheory growth", r, text.str(), kExitOk);
}

int cmd_factorise(std::uint32_t n, const std::string& out) {
  int ok = 0;
  char* body = nullptr;
  char* raw = nullptr;
  check(stsd_factorise(n, &ok, &body, &raw));
  const std::string listing = take(body);
  json r = take_json(raw);
  std::ostringstream text;
  if (!out.empty()) {
    std::FILE* f = std::fopen(out.c_str(), "w");
    if (!f) throw Failure{kExitUsage, "cannot open '" + out + "' for writing"};
    std::fwrite(listing.data(), 1, listing.size(), f);
    std::fclose(f);
    r["out"] = out;
  } else if (!g_opts.json) {
    text << listing;
  }
  text << "G(" << n << "): factors of sizes " << join(r["factor_sizes"]) << ", f(n) = " << r["f"]
       << ", weight properties " << (ok ? "hold" : "FAIL") << '\n';
  append_violations(text, r);
  return finish("factorise", r, text.str(), ok ? kExitOk : kExitNegative);
}

int cmd_pcs(const std::string& in, bool max_disjoint) {
  auto sys = load_system(in);
  const stsd_budget b = budget();
  char* raw = nullptr;
  check(stsd_parallel_classes_json(sys.get(), &b, max_disjoint ? 1 : 0, &raw));
  const json r = take_json(raw);
  const bool complete = r["status"] == "complete";
  std::ostringstream text;
  if (max_disjoint) {
    text << "parallel classes: " << r["classes_considered"] << "\n";
    if (complete)
      text << "maximum number of disjoint parallel classes: " << r["max_disjoint"] << '\n';
    else
      text << "inconclusive: between " << r["max_disjoint"] << " and " << r["upper_bound"]
           << " disjoint parallel classes\n";
  } else {
    text << (complete ? "" : "inconclusive, at least ") << r["count"] << " parallel classes\n";
    for (const auto& c : r["classes"]) text << "  " << join(c) << '\n';
  }
  return finish("analyze pcs", r, text.str(), complete ? kExitOk : kExitInconclusive);
}

int cmd_chi_exact(const std::string& in, const std::string& witness_path, const std::string& colouring_out) {
  auto sys = load_system(in);
  ColouringPtr witness;
  if (!witness_path.empty()) witness = load_colouring(witness_path);
  const stsd_budget b = budget();
  char* raw = nullptr;
  stsd_colouring* best = nullptr;
  check(stsd_chromatic_exact_json(sys.get(), &b, witness.get(), &raw, &best));
  ColouringPtr best_ptr(best);
  json r = take_json(raw);
  std::ostringstream text;
  if (r["exact"].get<bool>())
    text << "chromatic index = " << r["chromatic_index"] << " (lower bound: " << r["lower_reason"].get<std::string>()
         << ")\n";
  else
    text << "inconclusive: " << r["lower"] << " <= chromatic index <= " << r["upper"] << '\n';
  if (!colouring_out.empty() && best_ptr) {
    check(stsd_colouring_save(best_ptr.get(), 0, colouring_out.c_str()));
    r["colouring_out"] = colouring_out;
  }
  return finish("analyze chi", r, text.str(), r["exact"].get<bool>() ? kExitOk : kExitInconclusive);
}

int cmd_chi_heuristic(const std::string& in, std::size_t target, std::uint64_t seed, std::size_t restarts,
                      const std::string& colouring_out) {
  auto sys = load_system(in);
  stsd_colouring* c = nullptr;
  const stsd_status status = stsd_chromatic_heuristic(sys.get(), target, seed, restarts, 0, &c);
  json r = {{"target", target}, {"seed", seed}};
  if (status == STSD_ERR_NOT_FOUND) {
    r["found"] = false;
    return finish("analyze chi", r,
                  "no colouring with " + std::to_string(target) + " classes found (not a proof that none exists)\n",
                  kExitNegative);
  }
  check(status);
  ColouringPtr col(c);
  r["found"] = true;
  r["classes"] = stsd_colouring_class_count(col.get());
  std::ostringstream text;
  text << "found a verified colouring with " << r["classes"] << " classes\n";
  if (!colouring_out.empty()) {
    check(stsd_colouring_save(col.get(), 0, colouring_out.c_str()));
    r["colouring_out"] = colouring_out;
  } else {
    char* body = nullptr;
    check(stsd_colouring_to_text(col.get(), 0, &body));
    r["colouring"] = take(body);
    text << r["colouring"].get<std::string>();
  }
  return finish("analyze chi", r, text.str(), kExitOk);
}

std::vector<std::uint8_t> parse_weighting(const std::string& spec) {
  std::vector<std::uint8_t> w;
  for (char ch : spec) {
    if (ch >= '0' && ch <= '2')
      w.push_back(static_cast<std::uint8_t>(ch - '0'));
    else if (ch != ',' && ch != ' ')
      throw Failure{kExitUsage, "weighting must be 'auto' or a list of digits 0-2, got '" + spec + "'"};
  }
  return w;
}

int cmd_bound(const std::string& in, const std::string& method, const std::string& weighting) {
  auto sys = load_system(in);
  char* raw = nullptr;
  if (method == "mod3") {
    if (weighting == "auto") {
      check(stsd_bound_mod3_json(sys.get(), nullptr, 0, &raw));
    } else {
      const auto w = parse_weighting(weighting);
      check(stsd_bound_mod3_json(sys.get(), w.data(), w.size(), &raw));
    }
  } else {
    check(stsd_bound_ws_json(sys.get(), &raw));
  }
  const json r = take_json(raw);
  std::ostringstream text;
  text << "at most " << r["bound"] << " disjoint parallel classes (" << r["method"].get<std::string>() << ")\n";
  if (method == "mod3")
    text << "  zero-sum triples " << r["zero_sum_triples"] << ", nonzero sum " << r["nonzero_sum"]
         << ", at least " << r["min_zero_per_class"] << " zero-sum triples per class\n";
  else
    text << "  f = " << r["f"] << ": " << r["type_i"] << " + " << r["type_ii"] << " + " << r["type_iii"] << '\n';
  const auto threshold = r["threshold"].get<std::size_t>();
  if (threshold && r["bound"].get<std::size_t>() < threshold)
    text << "  " << r["bound"] << " < " << threshold << " = (v+3)/6, so chromatic index >= "
         << (r["v"].get<std::size_t>() + 3) / 2 << '\n';
  return finish("analyze bound", r, text.str(), kExitOk);
}

int cmd_cyclic(const std::string& in) {
  auto sys = load_system(in);
  int cyclic = 0;
  check(stsd_is_cyclic(sys.get(), &cyclic));
  const json r = {{"cyclic", cyclic != 0}};
  return finish("analyze cyclic", r,
                cyclic ? "(x,i) -> (x+1,i+1) is a single-cycle automorphism\n" : "not cyclic under (x,i) -> (x+1,i+1)\n",
                cyclic ? kExitOk : kExitNegative);
}

int cmd_theorem1(std::uint32_t v) {
  char* raw = nullptr;
  check(stsd_theorem1_json(v, &raw));
  const json r = take_json(raw);
  const std::string verdict = r["verdict"];
  const bool positive = verdict != "possible-exception" && verdict != "not-certified";
  return finish("theorem1", r,
                "v = " + std::to_string(v) + ": " + verdict + "\n" + r["summary"].get<std::string>() + "\n",
                positive ? kExitOk : kExitNegative);
}

int cmd_generate(std::uint32_t v, std::size_t count, std::uint64_t seed, const std::string& out_dir) {
  json r = {{"v", v}, {"count", count}, {"seed", seed}, {"systems", json::array()}};
  std::ostringstream text;
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < count; ++i) {
    // System i uses seed + i, so `--count 1 --seed S+i` reproduces it.
    stsd_system* s = nullptr;
    check(stsd_generate(v, seed + i, &s));
    SystemPtr sys(s);
    json entry = {{"seed", seed + i}, {"triples", stsd_system_size(sys.get())}};
    if (!out_dir.empty()) {
      const std::string path = (std::filesystem::path(out_dir) / ("sts" + std::to_string(v) + "_" +
                                                                   std::to_string(seed + i) + ".sts"))
                                   .string();
      check(stsd_system_save(sys.get(), path.c_str()));
      entry["path"] = path;
      text << path << '\n';
    } else {
      char* body = nullptr;
      check(stsd_system_to_text(sys.get(), &body));
      entry["sts"] = take(body);
      text << entry["sts"].get<std::string>();
    }
    r["systems"].push_back(entry);
  }
  return finish("generate", r, text.str(), kExitOk);
}

int cmd_survey(std::uint32_t v, std::size_t count, std::uint64_t seed, std::size_t restarts) {
  char* raw = nullptr;
  check(stsd_survey_json(v, count, seed, restarts, threads(), &raw));
  const json r = take_json(raw);
  const json& h = r["histogram"];
  const auto m = r["m"].get<unsigned>();
  std::ostringstream text;
  text << count << " random STS(" << v << "), m(v) = " << m << '\n'
       << "  " << m << " classes:     " << h["m"] << '\n'
       << "  " << m + 1 << " classes:     " << h["m+1"] << '\n'
       << "  " << m + 2 << " classes:     " << h["m+2"] << '\n'
       << "  not coloured: " << h["fail"] << '\n'
       << "  generator failures: " << h["generator_failed"] << '\n';
  return finish("survey colouring", r, text.str(), kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner triple systems: constructions, parallel classes and chromatic index"};
  app.require_subcommand(1);
  app.add_flag("--json", g_opts.json, "Emit a JSON report instead of text");
  app.add_option("--threads", g_opts.threads, "Worker threads (default: hardware concurrency)");
  app.add_option("--budget-nodes", g_opts.budget_nodes, "Search node limit (default 1e8 or STSD_BUDGET_NODES)");
  app.add_option("--budget-seconds", g_opts.budget_seconds, "Search time limit (default 60 or STSD_BUDGET_SECONDS)");

  int code = kExitOk;
  std::function<int()> action;

  // verify
  auto* verify = app.add_subcommand("verify", "Check an STS file, and optionally a colouring of it");
  std::string in, colouring_path, out, colouring_out;
  verify->add_option("--in", in, "STS file")->required();
  verify->add_option("--colouring", colouring_path, "Colouring file");
  verify->callback([&] { action = [&] { return cmd_verify(in, colouring_path); }; });

  // construct
  auto* construct = app.add_subcommand("construct", "Build a Steiner triple system");
  construct->require_subcommand(1);
  std::uint32_t n = 0;
  std::uint64_t seed = 0;
  std::string square = "half-sum";
  auto* ws = construct->add_subcommand("wilson-schreiber", "STS(n+2) from the 1-factorisation of G(n), n = 1 (mod 6)");
  ws->add_option("--n", n, "n")->required();
  ws->add_option("--out", out, "Output file (default: stdout)");
  ws->callback([&] {
    action = [&] {
      stsd_system* s = nullptr;
      check(stsd_construct_wilson_schreiber(n, &s));
      return emit_system("construct wilson-schreiber", SystemPtr(s), out);
    };
  });
  auto* bose = construct->add_subcommand("bose", "STS(3n) from idempotent symmetric Latin squares, n = 5 (mod 6)");
  bose->add_option("--n", n, "n")->required();
  bose->add_option("--square", square, "half-sum or conjugate")->check(CLI::IsMember({"half-sum", "conjugate"}));
  bose->add_option("--seed", seed, "Seed for conjugate squares");
  bose->add_option("--out", out, "Output file (default: stdout)");
  bose->callback([&] {
    action = [&] {
      stsd_system* s = nullptr;
      check(stsd_construct_bose(n, square == "conjugate" ? 1 : 0, seed, &s));
      return emit_system("construct bose", SystemPtr(s), out);
    };
  });

  // fixture
  auto* fixture = app.add_subcommand("fixture", "Embedded systems");
  fixture->require_subcommand(1);
  auto* sts33 = fixture->add_subcommand("sts33", "The cyclic STS(33) and its 18-class colouring");
  sts33->add_option("--out", out, "STS output file");
  sts33->add_option("--colouring-out", colouring_out, "Colouring output file");
  sts33->callback([&] { action = [&] { return cmd_fixture(out, colouring_out); }; });

  // numtheory
  auto* numtheory = app.add_subcommand("numtheory", "f(n), psi(n) and related tables");
  numtheory->require_subcommand(1);
  std::uint64_t nt_n = 0, limit = 0, step = 1;
  auto* profile = numtheory->add_subcommand("profile", "All quantities for one n coprime to 6");
  profile->add_option("--n", nt_n, "n")->required();
  profile->callback([&] { action = [&] { return cmd_profile(nt_n); }; });
  bool negative_psi = false, tsv = false;
  auto* scan = numtheory->add_subcommand("scan", "n with psi*(n) <= 0 and n with psi(n) < 0");
  scan->add_option("--limit", limit, "Largest n")->required()->check(CLI::Range(3ull, 100'000'000ull));
  auto* neg_flag = scan->add_flag("--negative-psi", negative_psi, "List (n, psi(n)) with psi(n) < 0");
  scan->add_flag("--tsv", tsv, "Print n, phi, f, psi, psi_star for every n")->excludes(neg_flag);
  scan->callback([&] { action = [&] { return cmd_scan(limit, negative_psi, tsv); }; });
  auto* growth = numtheory->add_subcommand("growth", "f(n) against n");
  growth->add_option("--limit", limit, "Largest n")->required();
  growth->add_option("--step", step, "Report every step-th n coprime to 6")->check(CLI::PositiveNumber);
  growth->callback([&] { action = [&] { return cmd_growth(limit, step); }; });

  // factorise
  auto* factorise = app.add_subcommand("factorise", "Weight-balanced 1-factorisation of G(n)");
  factorise->add_option("--n", n, "n = 1 (mod 6)")->required();
  factorise->add_option("--out", out, "Output file");
  factorise->callback([&] { action = [&] { return cmd_factorise(n, out); }; });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Parallel classes, bounds and chromatic index");
  analyze->require_subcommand(1);
  bool max_disjoint = false;
  auto* pcs = analyze->add_subcommand("pcs", "Enumerate parallel classes");
  pcs->add_option("--in", in, "STS file")->required();
  pcs->add_flag("--max-disjoint", max_disjoint, "Maximum number of pairwise disjoint parallel classes");
  pcs->add_option("--budget-nodes", g_opts.budget_nodes, "Search node limit");
  pcs->add_option("--budget-seconds", g_opts.budget_seconds, "Search time limit");
  pcs->callback([&] { action = [&] { return cmd_pcs(in, max_disjoint); }; });

  bool exact = false, heuristic = false;
  std::size_t target = 0, restarts = 20;
  std::string witness;
  auto* chi = analyze->add_subcommand("chi", "Chromatic index");
  chi->add_option("--in", in, "STS file")->required();
  auto* exact_flag = chi->add_flag("--exact", exact, "Exact branch and bound");
  auto* heuristic_flag = chi->add_flag("--heuristic", heuristic, "Tabu search for a colouring with --target classes");
  exact_flag->excludes(heuristic_flag);
  auto* target_opt = chi->add_option("--target", target, "Number of classes for --heuristic");
  target_opt->needs(heuristic_flag);
  chi->add_option("--seed", seed, "Seed for --heuristic");
  chi->add_option("--restarts", restarts, "Restarts for --heuristic");
  chi->add_option("--witness", witness, "Colouring file giving an upper bound for --exact");
  chi->add_option("--colouring-out", colouring_out, "Write the colouring found");
  chi->add_option("--budget-nodes", g_opts.budget_nodes, "Search node limit");
  chi->add_option("--budget-seconds", g_opts.budget_seconds, "Search time limit");
  chi->callback([&] {
    if (!exact && !heuristic) throw CLI::ValidationError("analyze chi", "one of --exact or --heuristic is required");
    if (heuristic && target_opt->count() == 0) throw CLI::ValidationError("--target", "required with --heuristic");
    action = [&] {
      return exact ? cmd_chi_exact(in, witness, colouring_out)
                   : cmd_chi_heuristic(in, target, seed, restarts, colouring_out);
    };
  });

  std::string method, weighting = "auto";
  auto* bound = analyze->add_subcommand("bound", "Certified upper bound on disjoint parallel classes");
  bound->add_option("--in", in, "STS file")->required();
  bound->add_option("--method", method, "mod3 or ws")->required()->check(CLI::IsMember({"mod3", "ws"}));
  bound->add_option("--weighting", weighting, "For mod3: auto, or one digit 0-2 per point");
  bound->callback([&] { action = [&] { return cmd_bound(in, method, weighting); }; });

  auto* cyclic = analyze->add_subcommand("cyclic", "Test (x,i) -> (x+1,i+1) on a system in Bose layout");
  cyclic->add_option("--in", in, "STS file")->required();
  cyclic->callback([&] { action = [&] { return cmd_cyclic(in); }; });

  // theorem1
  std::uint32_t v = 0;
  auto* theorem1 = app.add_subcommand("theorem1", "Certify chromatic index >= (v+3)/2 for some STS(v), v = 3 (mod 6)");
  theorem1->add_option("--v", v, "v")->required();
  theorem1->callback([&] { action = [&] { return cmd_theorem1(v); }; });

  // generate
  std::size_t count = 1;
  std::string out_dir;
  auto* generate = app.add_subcommand("generate", "Random Steiner triple systems by hill climbing");
  generate->add_option("--v", v, "v = 1, 3 (mod 6)")->required();
  generate->add_option("--count", count, "Number of systems");
  generate->add_option("--seed", seed, "Seed of the first system");
  generate->add_option("--out-dir", out_dir, "Write one file per system here");
  generate->callback([&] { action = [&] { return cmd_generate(v, count, seed, out_dir); }; });

  // survey
  auto* survey = app.add_subcommand("survey", "Experiments over random systems");
  survey->require_subcommand(1);
  auto* survey_colouring = survey->add_subcommand("colouring", "How many classes the heuristic needs");
  survey_colouring->add_option("--v", v, "v = 1, 3 (mod 6)")->required();
  survey_colouring->add_option("--count", count, "Number of systems")->required();
  survey_colouring->add_option("--seed", seed, "Master seed");
  survey_colouring->add_option("--restarts", restarts, "Heuristic restarts per target");
  survey_colouring->callback([&] { action = [&] { return cmd_survey(v, count, seed, restarts); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  try {
    code = action ? action() : kExitUsage;
  } catch (const Failure& f) {
    std::cerr << "stsd: " << f.message << '\n';
    return f.code;
  } catch (const json::exception& e) {
    std::cerr << "stsd: malformed library report: " << e.what() << '\n';
    return kExitNegative;
  } catch (const std::exception& e) {
    std::cerr << "stsd: " << e.what() << '\n';
    return kExitUsage;
  }
  return code;
}
