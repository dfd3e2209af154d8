#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace nct::verify {

struct VerifyCase {
  std::string id;
  std::string law;  // the identity being checked, or "plumbing"
  double residual;
  double tolerance;
  bool pass;
};

struct VerificationReport {
  std::string suite;
  std::vector<VerifyCase> cases;
  double wall_seconds = 0.0;

  bool passed() const {
    for (const VerifyCase& c : cases)
      if (!c.pass) return false;
    return true;
  }
};

// Runs every identity suite at the default scales. Deterministic for a fixed
// seed. When tol_override is set it replaces every case tolerance (useful to
// demonstrate tolerance sensitivity).
VerificationReport run_all(std::uint64_t seed,
                           std::optional<double> tol_override = std::nullopt);

nlohmann::json report_to_json(const VerificationReport& rep);

}  // namespace nct::verify
