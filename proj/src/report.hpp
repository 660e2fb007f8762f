#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace cms {

/// Outcome of one identity check. Exact checks report residual 0 or 1 at tolerance 0.
struct VerificationReport {
  std::string identity;
  long samples = 0;
  double max_rel_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::optional<std::uint64_t> seed;
  std::string detail;
};

inline VerificationReport exact_report(std::string identity, long samples, bool ok, std::string detail = {}) {
  VerificationReport r;
  r.identity = std::move(identity);
  r.samples = samples;
  r.max_rel_residual = ok ? 0.0 : 1.0;
  r.tolerance = 0.0;
  r.pass = ok;
  r.detail = std::move(detail);
  return r;
}

}  // namespace cms
