#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qschur/matrix.hpp"
#include "qschur/schur.hpp"

namespace qschur {

/// One checked claim over a family of instances; the witness describes the first failing instance.
struct Claim {
  std::string id;
  std::string params;
  std::size_t instances = 0;
  bool pass = true;
  std::string witness;
};

struct Report {
  std::vector<Claim> claims;

  bool ok() const;
  /// Claims sorted by id (stable for equal ids).
  void sort();
  void append(const Report& other);
  /// One "PASS|FAIL id params (n instances)" line per claim, witnesses indented below failures.
  std::string text() const;
  std::string json() const;
};

struct VerifyOptions {
  /// Negative control: scales the right-hand side of the e/f commutator by v, and drops the
  /// idempotent factor from the monomial elements.
  bool perturb = false;
};

/// Defining relations, the idempotent lemmas and the divided-power commutator in K(window, r).
Report verify_presentation(const Window& w, Entry r, const VerifyOptions& opts = {});

/// Monomial unitriangularity, independence of the e^(A+) k^j f^(A-) and A(j, r) families,
/// and the cardinality/determinant lemma behind them.
Report basis_report(const Window& w, Entry r, const VerifyOptions& opts = {});

/// Structure constants evaluated at v^2 = q against flag counts, for every pair in Xi(window, r).
Report oracle_report(const Window& w, Entry r, const std::vector<int>& qs);

}  // namespace qschur
