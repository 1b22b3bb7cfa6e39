#pragma once

#include <string>
#include <vector>

#include "singscat/potential.hpp"
#include "singscat/tensor.hpp"

namespace singscat {

/// One validation clause with its measured margin.
struct ValidationClause {
  std::string name;
  bool pass = false;
  double margin = 0.0;  // positive distance from the failure boundary
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationClause> clauses;
  bool all_pass() const {
    for (const auto& c : clauses)
      if (!c.pass) return false;
    return true;
  }
  const ValidationClause* failing() const {
    for (const auto& c : clauses)
      if (!c.pass) return &c;
    return nullptr;
  }
};

struct ValidationThresholds {
  double b_sum_tol = 1e-12;
  double b_gap_min = 1e-9;        // pairwise distinctness of b_j
  double mu_integer_gap = 0.05;   // distance of mu_j - mu_k from integers
  double mu_re_gap = 1e-6;        // strict ordering of Re mu
  double diag_tol = 0.0;          // diagonal entries must vanish exactly
};

/// The validated problem: matrices of y' - x^{-1} A y - q(x) y = rho B y
/// together with the eigendata of A used by every downstream construction.
struct SystemSpec {
  int n = 0;
  CMatrix A;
  CVector b;    // diagonal of B
  Potential q;

  // eigendata, filled by validate(): mu sorted by increasing real part,
  // eigenvector matrix H scaled so det H = 1
  CVector mu;
  CMatrix H;
  ValidationReport report;

  static SystemSpec make(CMatrix A, CVector b, Potential q,
                         const ValidationThresholds& thr = {});
};

/// Checks every structural clause, computes and caches the eigendata.
/// Throws AssumptionViolated naming the failing clause when any hard clause
/// fails; the full report is embedded in the exception-free variant.
ValidationReport validate_assumption1(SystemSpec& spec,
                                      const ValidationThresholds& thr = {});

}  // namespace singscat
