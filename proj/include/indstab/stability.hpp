#pragma once

// Exact Hurwitz quasi-stability (all roots in Re z <= 0) of integer
// polynomials, with replayable certificates.

#include "indstab/poly.hpp"
#include "indstab/roots.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace indstab {

enum class StabilityStatus
{
  stable,
  nonstable,
};

enum class VerdictMode
{
  exact,
  numeric,
};

auto to_string(StabilityStatus s) -> std::string;
auto to_string(VerdictMode m) -> std::string;

struct StabilityVerdict
{
  StabilityStatus status = StabilityStatus::nonstable;
  VerdictMode mode = VerdictMode::exact;
  // Stable: how it was proved. Nonstable: empty.
  nlohmann::json certificate;
  // Nonstable: what fails. Stable: empty.
  nlohmann::json witness;
  IntPoly polynomial;

  auto stable() const -> bool { return status == StabilityStatus::stable; }
};

// Hermite-Biehler on the even and odd parts. p must be nonzero with a
// positive leading coefficient.
auto hb_stable(const IntPoly& p) -> StabilityVerdict;

// Verdict for an independence polynomial: positive coefficients, p(0) = 1.
// Real-rooted polynomials are stable outright; the rest go through hb_stable.
auto stability_verdict(const IntPoly& p) -> StabilityVerdict;

// Numeric verdict: Nonstable iff some root has Re > margin.
auto numeric_verdict(const ComplexRootSet& rs, const IntPoly& p, double margin = 1e-8) -> StabilityVerdict;

class VerdictDisagreement : public std::runtime_error
{
public:
  VerdictDisagreement(const std::string& what, nlohmann::json diagnostic)
      : std::runtime_error(what), diagnostic_(std::move(diagnostic))
  {
  }
  auto diagnostic() const -> const nlohmann::json& { return diagnostic_; }

private:
  nlohmann::json diagnostic_;
};

// Stable must have max Re <= margin; Nonstable must have max Re > -margin.
// Throws VerdictDisagreement otherwise.
void cross_check(const StabilityVerdict& exact, const ComplexRootSet& rs, double margin = 1e-8);

// Exact verdict, then the numeric cross-check.
auto checked_verdict(const IntPoly& p, double margin = 1e-8) -> StabilityVerdict;

auto to_json(const StabilityVerdict& v, const std::optional<std::string>& graph_id = std::nullopt)
    -> nlohmann::json;

struct VerifyReport
{
  bool ok = true;
  int checks = 0;
  std::vector<std::string> failures;
};

// Replays a verdict JSON: re-derives every sign claim of a Stable certificate,
// recomputes Nonstable verdicts.
auto verify(const nlohmann::json& verdict) -> VerifyReport;

} // namespace indstab
