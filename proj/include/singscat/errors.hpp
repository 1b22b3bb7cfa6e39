#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace singscat {

/// Failure classes used across the library. Each maps to one named error
/// condition of the public operation contracts.
enum class Errc {
  assumption_violated,
  degenerate_sectorization,
  series_not_converged,
  near_integer_resonance,
  integration_diverged,
  asymptotic_not_reached,
  condition_r0_violated,
  branch_crossing,
  not_converged,
  tail_too_heavy,
  envelope_violated,
  solvability_violated,
  degenerate_system,
  delta_zero,
  delta_zero_at_origin,
  constructions_disagree,
  excessive_spread,
  condition_g0_violated,
  order_mismatch,
  dimension_mismatch,
  parse_error,
  validation_error,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::assumption_violated: return "AssumptionViolated";
    case Errc::degenerate_sectorization: return "DegenerateSectorization";
    case Errc::series_not_converged: return "SeriesNotConverged";
    case Errc::near_integer_resonance: return "NearIntegerResonance";
    case Errc::integration_diverged: return "IntegrationDiverged";
    case Errc::asymptotic_not_reached: return "AsymptoticNotReached";
    case Errc::condition_r0_violated: return "ConditionR0Violated";
    case Errc::branch_crossing: return "BranchCrossing";
    case Errc::not_converged: return "NotConverged";
    case Errc::tail_too_heavy: return "TailTooHeavy";
    case Errc::envelope_violated: return "EnvelopeViolated";
    case Errc::solvability_violated: return "SolvabilityViolated";
    case Errc::degenerate_system: return "DegenerateSystem";
    case Errc::delta_zero: return "DeltaZero";
    case Errc::delta_zero_at_origin: return "DeltaZeroAtOrigin";
    case Errc::constructions_disagree: return "ConstructionsDisagree";
    case Errc::excessive_spread: return "ExcessiveSpread";
    case Errc::condition_g0_violated: return "ConditionG0Violated";
    case Errc::order_mismatch: return "OrderMismatch";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::validation_error: return "ValidationError";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

/// Context attached to an error as it surfaces through the pipeline.
struct ErrorContext {
  std::string stage;
  std::optional<int> sector;
  std::optional<int> k;
  std::optional<std::complex<double>> rho;
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Error(Errc code, const std::string& what, ErrorContext ctx)
      : std::runtime_error(format(code, what, ctx)), code_(code),
        ctx_(std::move(ctx)) {}

  Errc code() const { return code_; }
  const ErrorContext& context() const { return ctx_; }

 private:
  static std::string format(Errc code, const std::string& what,
                            const ErrorContext& ctx) {
    std::string s = std::string(errc_name(code)) + ": " + what;
    if (!ctx.stage.empty()) s += " [stage=" + ctx.stage;
    if (ctx.sector) s += " sector=" + std::to_string(*ctx.sector);
    if (ctx.k) s += " k=" + std::to_string(*ctx.k);
    if (ctx.rho)
      s += " rho=(" + std::to_string(ctx.rho->real()) + "," +
           std::to_string(ctx.rho->imag()) + ")";
    if (!ctx.stage.empty() || ctx.sector || ctx.k || ctx.rho) s += "]";
    return s;
  }

  Errc code_;
  ErrorContext ctx_;
};

}  // namespace singscat
