#include "stsd/stsd.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "stsd/analysis.hpp"
#include "stsd/constructions.hpp"
#include "stsd/generator.hpp"
#include "stsd/numtheory.hpp"
#include "stsd/rng.hpp"
#include "stsd/text_format.hpp"

struct stsd_system {
  stsd::TripleSystem system;
};

struct stsd_colouring {
  stsd::Colouring colouring;
  stsd::Point v = 0;
};

namespace {

using json = nlohmann::json;

thread_local std::string g_last_error;

stsd_status fail(stsd_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
stsd_status guarded(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const stsd::ParseError& e) {
    return fail(STSD_ERR_PARSE, e.what());
  } catch (const stsd::PreconditionError& e) {
    return fail(STSD_ERR_PRECONDITION, e.what());
  } catch (const stsd::GeneratorError& e) {
    return fail(STSD_ERR_GENERATOR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(STSD_ERR_INTERNAL, "out of memory");
  } catch (const std::logic_error& e) {
    return fail(STSD_ERR_INTERNAL, e.what());
  } catch (const std::runtime_error& e) {
    return fail(STSD_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(STSD_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

stsd_status emit(const json& j, char** out) {
  *out = dup_string(j.dump());
  return STSD_OK;
}

#define STSD_REQUIRE_ARG(cond)                                                    \
  do {                                                                            \
    if (!(cond)) return fail(STSD_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

json report_json(const stsd::VerificationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back(v.message);
  return {{"ok", report.ok}, {"violation_count", report.violation_count}, {"violations", violations}};
}

stsd::SearchBudget to_budget(const stsd_budget* budget) {
  stsd::SearchBudget b = stsd::SearchBudget::from_env();
  if (budget) {
    b.node_limit = budget->node_limit;
    b.time_limit_seconds = budget->time_limit_seconds;
    if (budget->class_cap) b.class_cap = budget->class_cap;
  }
  return b;
}

json classes_json(const std::vector<stsd::PartialParallelClass>& classes) {
  json out = json::array();
  for (const auto& c : classes) out.push_back(c);
  return out;
}

json certificate_json(const stsd::PCBoundCertificate& cert) {
  json j = {{"bound", cert.bound}, {"method", stsd::to_string(cert.method)}};
  switch (cert.method) {
    case stsd::BoundMethod::kMod3Weighting:
      j["weighting"] = cert.weighting;
      j["nonzero_sum"] = cert.nonzero_sum;
      j["zero_sum_triples"] = cert.zero_sum_triples;
      j["min_zero_per_class"] = cert.min_zero_per_class;
      break;
    case stsd::BoundMethod::kWsWeightArgument:
      j["f"] = cert.f;
      j["type_i"] = cert.type_i;
      j["type_ii"] = cert.type_ii;
      j["type_iii"] = cert.type_iii;
      break;
    case stsd::BoundMethod::kExhaustive:
      j["transcript_digest"] = cert.transcript_digest;
      break;
  }
  return j;
}

std::optional<stsd::PCBoundCertificate> ws_certificate(const stsd::TripleSystem& system) {
  const std::uint32_t n = system.order() - 2;
  return stsd::pc_bound_ws(n, stsd::recover_ws_factorisation(system));
}

}  // namespace

extern "C" {

const char* stsd_version(void) { return "1.0.0"; }

const char* stsd_last_error(void) { return g_last_error.c_str(); }

const char* stsd_status_name(stsd_status status) {
  switch (status) {
    case STSD_OK:
      return "ok";
    case STSD_ERR_INVALID_ARGUMENT:
      return "invalid-argument";
    case STSD_ERR_PRECONDITION:
      return "precondition";
    case STSD_ERR_PARSE:
      return "parse";
    case STSD_ERR_IO:
      return "io";
    case STSD_ERR_NOT_FOUND:
      return "not-found";
    case STSD_ERR_GENERATOR:
      return "generator";
    case STSD_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

void stsd_string_free(char* text) { delete[] text; }

void stsd_budget_default(stsd_budget* budget) {
  if (!budget) return;
  const stsd::SearchBudget b = stsd::SearchBudget::from_env();
  budget->node_limit = b.node_limit;
  budget->time_limit_seconds = b.time_limit_seconds;
  budget->class_cap = 0;
}

stsd_status stsd_system_create(uint32_t v, const uint32_t* points, size_t triple_count, stsd_system** out) {
  STSD_REQUIRE_ARG(out && (points || triple_count == 0));
  return guarded([&] {
    std::vector<stsd::Triple> triples(triple_count);
    for (size_t i = 0; i < triple_count; ++i) triples[i] = {points[3 * i], points[3 * i + 1], points[3 * i + 2]};
    *out = new stsd_system{stsd::TripleSystem(v, std::move(triples))};
    return STSD_OK;
  });
}

stsd_status stsd_system_parse(const char* text, stsd_system** out) {
  STSD_REQUIRE_ARG(text && out);
  return guarded([&] {
    *out = new stsd_system{stsd::parse_sts(text)};
    return STSD_OK;
  });
}

stsd_status stsd_system_load(const char* path, stsd_system** out) {
  STSD_REQUIRE_ARG(path && out);
  return guarded([&] {
    *out = new stsd_system{stsd::load_sts_file(path)};
    return STSD_OK;
  });
}

stsd_status stsd_system_save(const stsd_system* system, const char* path) {
  STSD_REQUIRE_ARG(system && path);
  return guarded([&] {
    stsd::save_sts_file(path, system->system);
    return STSD_OK;
  });
}

stsd_status stsd_system_to_text(const stsd_system* system, char** out) {
  STSD_REQUIRE_ARG(system && out);
  return guarded([&] {
    *out = dup_string(stsd::sts_to_string(system->system));
    return STSD_OK;
  });
}

void stsd_system_free(stsd_system* system) { delete system; }

uint32_t stsd_system_order(const stsd_system* system) { return system ? system->system.order() : 0; }

size_t stsd_system_size(const stsd_system* system) { return system ? system->system.size() : 0; }

stsd_status stsd_system_triple(const stsd_system* system, size_t index, uint32_t out[3]) {
  STSD_REQUIRE_ARG(system && out && index < system->system.size());
  const stsd::Triple& t = system->system[index];
  for (int i = 0; i < 3; ++i) out[i] = t[i];
  return STSD_OK;
}

stsd_status stsd_system_verify_json(const stsd_system* system, int* ok, char** json_out) {
  STSD_REQUIRE_ARG(system && ok && json_out);
  return guarded([&] {
    const auto report = stsd::verify_sts(system->system);
    *ok = report.ok ? 1 : 0;
    json j = report_json(report);
    j["v"] = system->system.order();
    j["triples"] = system->system.size();
    return emit(j, json_out);
  });
}

stsd_status stsd_colouring_parse(const char* text, stsd_colouring** out) {
  STSD_REQUIRE_ARG(text && out);
  return guarded([&] {
    auto* c = new stsd_colouring;
    c->colouring = stsd::parse_colouring(text, &c->v);
    *out = c;
    return STSD_OK;
  });
}

stsd_status stsd_colouring_load(const char* path, stsd_colouring** out) {
  STSD_REQUIRE_ARG(path && out);
  return guarded([&] {
    stsd::Point v = 0;
    stsd::Colouring colouring = stsd::load_colouring_file(path, &v);
    *out = new stsd_colouring{std::move(colouring), v};
    return STSD_OK;
  });
}

stsd_status stsd_colouring_save(const stsd_colouring* colouring, uint32_t v, const char* path) {
  STSD_REQUIRE_ARG(colouring && path);
  return guarded([&] {
    stsd::save_colouring_file(path, v ? v : colouring->v, colouring->colouring);
    return STSD_OK;
  });
}

stsd_status stsd_colouring_to_text(const stsd_colouring* colouring, uint32_t v, char** out) {
  STSD_REQUIRE_ARG(colouring && out);
  return guarded([&] {
    *out = dup_string(stsd::colouring_to_string(v ? v : colouring->v, colouring->colouring));
    return STSD_OK;
  });
}

void stsd_colouring_free(stsd_colouring* colouring) { delete colouring; }

size_t stsd_colouring_class_count(const stsd_colouring* colouring) {
  return colouring ? colouring->colouring.class_count() : 0;
}

stsd_status stsd_colouring_verify_json(const stsd_system* system, const stsd_colouring* colouring, int* ok,
                                       char** json_out) {
  STSD_REQUIRE_ARG(system && colouring && ok && json_out);
  return guarded([&] {
    auto report = stsd::verify_colouring(system->system, colouring->colouring);
    if (colouring->v != 0 && colouring->v != system->system.order())
      report.add(stsd::ViolationKind::kStructure, "colouring declares v=" + std::to_string(colouring->v) +
                                                      " but the system has v=" +
                                                      std::to_string(system->system.order()));
    *ok = report.ok ? 1 : 0;
    json j = report_json(report);
    j["classes"] = colouring->colouring.class_count();
    return emit(j, json_out);
  });
}

stsd_status stsd_construct_wilson_schreiber(uint32_t n, stsd_system** out) {
  STSD_REQUIRE_ARG(out);
  return guarded([&] {
    *out = new stsd_system{stsd::wilson_schreiber(n).system};
    return STSD_OK;
  });
}

stsd_status stsd_construct_bose(uint32_t n, int square, uint64_t seed, stsd_system** out) {
  STSD_REQUIRE_ARG(out && (square == 0 || square == 1));
  return guarded([&] {
    if (square == 0) {
      const stsd::LatinSquare l = stsd::half_sum_square(n);
      *out = new stsd_system{stsd::bose(l, l, l).system};
    } else {
      const auto l0 = stsd::random_conjugate_square(n, stsd::derive_seed(seed, 0));
      const auto l1 = stsd::random_conjugate_square(n, stsd::derive_seed(seed, 1));
      const auto l2 = stsd::random_conjugate_square(n, stsd::derive_seed(seed, 2));
      *out = new stsd_system{stsd::bose(l0, l1, l2).system};
    }
    return STSD_OK;
  });
}

stsd_status stsd_fixture_sts33(stsd_system** system, stsd_colouring** colouring) {
  STSD_REQUIRE_ARG(system);
  return guarded([&] {
    stsd::Sts33Fixture fixture = stsd::sts33_fixture();
    if (colouring) *colouring = new stsd_colouring{fixture.colouring, fixture.sts.system.order()};
    *system = new stsd_system{std::move(fixture.sts.system)};
    return STSD_OK;
  });
}

stsd_status stsd_is_cyclic(const stsd_system* system, int* out) {
  STSD_REQUIRE_ARG(system && out);
  return guarded([&] {
    *out = stsd::verify_cyclic(system->system) ? 1 : 0;
    return STSD_OK;
  });
}

stsd_status stsd_numtheory_profile_json(uint64_t n, char** json_out) {
  STSD_REQUIRE_ARG(json_out);
  return guarded([&] {
    const auto p = stsd::nt::profile(n);
    json divisors = json::array();
    for (std::uint64_t d : p.divisors_gt1)
      divisors.push_back({{"d", d},
                          {"phi", stsd::nt::euler_phi(d)},
                          {"order", stsd::nt::minus_one_minus_two_order(d)},
                          {"g", stsd::nt::g_of(d)}});
    json j = {{"n", p.n},     {"phi", p.phi}, {"subgroup_order", p.sub_order}, {"g", p.g},
              {"f", p.f},     {"psi", p.psi}, {"psi_star", p.psi_star},       {"divisors", divisors}};
    return emit(j, json_out);
  });
}

stsd_status stsd_numtheory_scan_json(uint64_t limit, char** json_out) {
  STSD_REQUIRE_ARG(json_out);
  return guarded([&] {
    json negative = json::array();
    for (const auto& [n, psi] : stsd::nt::negative_psi_scan(limit)) negative.push_back({{"n", n}, {"psi", psi}});
    json j = {{"limit", limit}, {"exceptions", stsd::nt::scan_exceptions(limit)}, {"negative_psi", negative}};
    return emit(j, json_out);
  });
}

stsd_status stsd_numtheory_table_tsv(uint64_t limit, char** text) {
  STSD_REQUIRE_ARG(text);
  return guarded([&] {
    std::ostringstream out;
    out << "n\tphi\tf\tpsi\tpsi_star\n";
    for (const auto& r : stsd::nt::scan_table(limit))
      out << r.n << '\t' << r.phi << '\t' << r.f << '\t' << r.psi << '\t' << r.psi_star << '\n';
    *text = dup_string(out.str());
    return STSD_OK;
  });
}

stsd_status stsd_numtheory_growth_json(uint64_t limit, uint64_t step, char** json_out) {
  STSD_REQUIRE_ARG(json_out);
  return guarded([&] {
    json rows = json::array();
    for (const auto& r : stsd::nt::f_growth_table(limit, step))
      rows.push_back({{"n", r.n}, {"f", r.f}, {"ratio", r.ratio}});
    return emit({{"limit", limit}, {"step", step}, {"rows", rows}}, json_out);
  });
}

stsd_status stsd_factorise(uint32_t n, int* ok, char** text, char** json_out) {
  STSD_REQUIRE_ARG(ok);
  return guarded([&] {
    const stsd::OneFactorisation fact = stsd::factorise_G(n);
    const std::uint64_t f = stsd::nt::f_of(n);
    const auto report = stsd::verify_factorisation_properties(fact, f);
    *ok = report.ok ? 1 : 0;
    if (text) *text = dup_string(stsd::factorisation_to_string(fact));
    if (json_out) {
      json j = report_json(report);
      j["n"] = n;
      j["f"] = f;
      j["factor_sizes"] = {fact.factors[0].size(), fact.factors[1].size(), fact.factors[2].size()};
      emit(j, json_out);
    }
    return STSD_OK;
  });
}

stsd_status stsd_parallel_classes_json(const stsd_system* system, const stsd_budget* budget, int max_disjoint,
                                       char** json_out) {
  STSD_REQUIRE_ARG(system && json_out);
  return guarded([&] {
    const stsd::SearchBudget b = to_budget(budget);
    json j = {{"v", system->system.order()}};
    if (max_disjoint) {
      const auto r = stsd::max_disjoint_pcs(system->system, b);
      j["status"] = stsd::to_string(r.status);
      j["classes_considered"] = r.classes_considered;
      j["max_disjoint"] = r.size;
      j["upper_bound"] = r.upper_bound;
      j["witness"] = classes_json(r.witness);
      j["nodes"] = r.nodes;
    } else {
      const auto r = stsd::enumerate_parallel_classes(system->system, b);
      j["status"] = stsd::to_string(r.status);
      j["count"] = r.classes.size();
      j["classes"] = classes_json(r.classes);
      j["nodes"] = r.nodes;
    }
    return emit(j, json_out);
  });
}

stsd_status stsd_bound_mod3_json(const stsd_system* system, const uint8_t* weights, size_t count, char** json_out) {
  STSD_REQUIRE_ARG(system && json_out);
  return guarded([&] {
    std::optional<stsd::PCBoundCertificate> cert;
    if (weights) {
      cert = stsd::pc_bound_mod3(system->system, std::span<const std::uint8_t>(weights, count));
    } else {
      cert = stsd::pc_bound_mod3_auto(system->system);
      if (!cert) return fail(STSD_ERR_NOT_FOUND, "no built-in Z_3 weighting satisfies the two-value hypothesis");
    }
    json j = certificate_json(*cert);
    j["v"] = system->system.order();
    j["threshold"] = system->system.order() % 6 == 3 ? stsd::min_pc_for_low_chi(system->system.order()) : 0;
    return emit(j, json_out);
  });
}

stsd_status stsd_bound_ws_json(const stsd_system* system, char** json_out) {
  STSD_REQUIRE_ARG(system && json_out);
  return guarded([&] {
    const auto cert = ws_certificate(system->system);
    json j = certificate_json(*cert);
    j["v"] = system->system.order();
    j["n"] = system->system.order() - 2;
    j["threshold"] = system->system.order() % 6 == 3 ? stsd::min_pc_for_low_chi(system->system.order()) : 0;
    return emit(j, json_out);
  });
}

stsd_status stsd_chromatic_exact_json(const stsd_system* system, const stsd_budget* budget,
                                      const stsd_colouring* witness, char** json_out,
                                      stsd_colouring** colouring_out) {
  STSD_REQUIRE_ARG(system && json_out);
  return guarded([&] {
    const stsd::TripleSystem& sys = system->system;
    // Strongest structural certificate available for this system.
    std::optional<stsd::PCBoundCertificate> cert;
    if (sys.order() % 6 == 3) {
      cert = stsd::pc_bound_mod3_auto(sys);
      try {
        auto ws = ws_certificate(sys);
        if (!cert || ws->bound < cert->bound) cert = ws;
      } catch (const stsd::PreconditionError&) {
      }
    }
    stsd::ChromaticOptions options;
    if (cert) options.certificate = &*cert;
    if (witness) options.upper_witness = &witness->colouring;
    const auto r = stsd::chromatic_index_exact(sys, to_budget(budget), options);
    json j = {{"v", sys.order()},
              {"status", stsd::to_string(r.status)},
              {"lower", r.lower},
              {"upper", r.upper},
              {"exact", r.exact()},
              {"lower_reason", r.lower_reason},
              {"nodes", r.nodes}};
    if (r.exact()) j["chromatic_index"] = r.lower;
    if (cert) j["certificate"] = certificate_json(*cert);
    if (colouring_out && r.colouring) *colouring_out = new stsd_colouring{*r.colouring, sys.order()};
    return emit(j, json_out);
  });
}

stsd_status stsd_chromatic_heuristic(const stsd_system* system, size_t target, uint64_t seed, size_t restarts,
                                     uint64_t iterations, stsd_colouring** out) {
  STSD_REQUIRE_ARG(system && out);
  return guarded([&] {
    stsd::HeuristicOptions options;
    if (restarts) options.restarts = restarts;
    if (iterations) options.iterations_per_restart = iterations;
    auto colouring = stsd::chromatic_index_heuristic(system->system, target, seed, options);
    if (!colouring)
      return fail(STSD_ERR_NOT_FOUND, "no colouring with at most " + std::to_string(target) +
                                          " classes found within the restart budget");
    *out = new stsd_colouring{std::move(*colouring), system->system.order()};
    return STSD_OK;
  });
}

stsd_status stsd_theorem1_json(uint32_t v, char** json_out) {
  STSD_REQUIRE_ARG(json_out);
  return guarded([&] {
    const auto r = stsd::theorem1_pipeline(v);
    json j = {{"v", r.v},
              {"verdict", stsd::to_string(r.verdict)},
              {"threshold", r.threshold},
              {"system_verified", r.system_verified},
              {"summary", r.summary}};
    j["f"] = r.f ? json(*r.f) : json(nullptr);
    j["pc_bound"] = r.pc_bound ? json(*r.pc_bound) : json(nullptr);
    j["index_lower"] = r.index_lower ? json(*r.index_lower) : json(nullptr);
    return emit(j, json_out);
  });
}

stsd_status stsd_generate(uint32_t v, uint64_t seed, stsd_system** out) {
  STSD_REQUIRE_ARG(out);
  return guarded([&] {
    *out = new stsd_system{stsd::random_sts(v, seed)};
    return STSD_OK;
  });
}

stsd_status stsd_survey_json(uint32_t v, size_t count, uint64_t seed, size_t restarts, unsigned threads,
                             char** json_out) {
  STSD_REQUIRE_ARG(json_out);
  return guarded([&] {
    const auto r = stsd::colouring_survey(v, count, seed, restarts ? restarts : 20, threads);
    json outcomes = json::array();
    for (auto o : r.outcomes) outcomes.push_back(stsd::to_string(o));
    json j = {{"v", r.v},
              {"m", r.m},
              {"count", count},
              {"seed", seed},
              {"histogram",
               {{"m", r.at_m}, {"m+1", r.at_m1}, {"m+2", r.at_m2}, {"fail", r.failed},
                {"generator_failed", r.generator_failures}}},
              {"outcomes", outcomes}};
    return emit(j, json_out);
  });
}

}  // extern "C"
