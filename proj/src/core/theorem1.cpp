#include <string>

#include "stsd/analysis.hpp"
#include "stsd/numtheory.hpp"

namespace stsd {

const char* to_string(Theorem1Verdict verdict) {
  switch (verdict) {
    case Theorem1Verdict::kUniqueLowIndex:
      return "unique-system";
    case Theorem1Verdict::kExternal:
      return "external";
    case Theorem1Verdict::kFixture:
      return "fixture";
    case Theorem1Verdict::kPossibleException:
      return "possible-exception";
    case Theorem1Verdict::kCertified:
      return "certified";
    case Theorem1Verdict::kNotCertified:
      return "not-certified";
  }
  return "unknown";
}

namespace {

std::string index_sentence(std::size_t bound, std::size_t threshold, std::size_t index) {
  return std::to_string(bound) + " < " + std::to_string(threshold) + " = (v+3)/6, so chromatic index >= " +
         std::to_string(index);
}

}  // namespace

Theorem1Report theorem1_pipeline(std::uint32_t v) {
  Theorem1Report report;
  report.v = v;
  if (v < 3 || v % 6 != 3) {
    report.verdict = Theorem1Verdict::kNotCertified;
    report.summary = "v = " + std::to_string(v) + " is not 3 (mod 6)";
    return report;
  }
  report.threshold = min_pc_for_low_chi(v);
  const std::size_t high_index = (v + 3) / 2;

  if (v == 3 || v == 9) {
    report.verdict = Theorem1Verdict::kUniqueLowIndex;
    report.index_lower = m_lower(v);
    report.summary = "the unique STS(" + std::to_string(v) + ") is resolvable with chromatic index " +
                     std::to_string(m_lower(v));
    return report;
  }
  if (v == 21) {
    report.verdict = Theorem1Verdict::kExternal;
    report.f = nt::f_of(19);
    report.summary = "external: some STS(21) has no parallel class, giving index >= 12";
    return report;
  }
  if (v == 33) {
    const Sts33Fixture fixture = sts33_fixture();
    report.verdict = Theorem1Verdict::kFixture;
    report.system_verified = verify_sts(fixture.sts.system).ok;
    const auto weights = natural_weighting(fixture.sts);
    const PCBoundCertificate cert = pc_bound_mod3(fixture.sts.system, weights);
    report.pc_bound = cert.bound;
    if (cert.bound < report.threshold) report.index_lower = high_index;
    report.summary = "fixture STS(33): mod-3 weighting gives " + index_sentence(cert.bound, report.threshold, high_index);
    return report;
  }
  if (v == 45 || v == 75 || v == 129 || v == 513) {
    const std::uint32_t n = v - 2;
    report.verdict = Theorem1Verdict::kPossibleException;
    report.f = nt::f_of(n);
    report.pc_bound = 3 * *report.f + 1;
    report.summary = "possible exception: 3f(" + std::to_string(n) + ")+1 = " + std::to_string(*report.pc_bound) +
                     " >= " + std::to_string(report.threshold) + " = (v+3)/6";
    return report;
  }

  const std::uint32_t n = v - 2;
  const LabelledSTS sts = wilson_schreiber(n);
  report.system_verified = verify_sts(sts.system).ok;
  report.f = nt::f_of(n);
  try {
    const PCBoundCertificate cert = pc_bound_ws(n, factorise_G(n));
    report.pc_bound = cert.bound;
  } catch (const PreconditionError& e) {
    report.verdict = Theorem1Verdict::kNotCertified;
    report.summary = std::string("factorisation rejected: ") + e.what();
    return report;
  }
  const std::string head = "3f(" + std::to_string(n) + ")+1 = ";
  if (report.system_verified && *report.pc_bound < report.threshold) {
    report.verdict = Theorem1Verdict::kCertified;
    report.index_lower = high_index;
    report.summary = head + index_sentence(*report.pc_bound, report.threshold, high_index);
  } else {
    report.verdict = Theorem1Verdict::kNotCertified;
    report.summary = report.system_verified ? head + std::to_string(*report.pc_bound) + " >= " +
                                                  std::to_string(report.threshold) + " = (v+3)/6"
                                            : "constructed STS(" + std::to_string(v) + ") failed verification";
  }
  return report;
}

}  // namespace stsd
