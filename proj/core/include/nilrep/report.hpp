#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilrep/abelian.hpp"
#include "nilrep/error.hpp"
#include "nilrep/finite_hom.hpp"
#include "nilrep/group.hpp"
#include "nilrep/poly.hpp"
#include "nilrep/root_datum.hpp"

namespace nilrep {

struct AnalyzeOptions {
  /// Poincare polynomials are skipped (with a note) above this exponent.
  std::size_t r_max_guard = 32;
  /// Use this exponent instead of rank H1(Gamma;Z) for the pi1 and
  /// cohomology data, i.e. describe Hom(Z^N, G)_1 directly.
  std::optional<std::size_t> r_override;
};

struct AnalysisReport {
  std::string group;
  std::string target;
  AbelianInvariants h1;
  /// Exponent actually used: rank H1 unless overridden.
  std::size_t r = 0;
  std::string reduction;
  AbelianInvariants pi1_target;
  AbelianInvariants pi1_hom;
  AbelianInvariants pi1_char;
  Integer weyl_order;
  std::optional<GradedPoly> poincare_hom;
  std::optional<GradedPoly> poincare_char;
  std::optional<std::string> poincare_note;
  Verdict verdict;
  std::vector<std::string> caveats;
};

AnalysisReport analyze(const GroupSpec &g, const ReductiveSpec &spec,
                       const AnalyzeOptions &options = {});

nlohmann::json to_json(const AbelianInvariants &a);
nlohmann::json to_json(const GradedPoly &p);
nlohmann::json to_json(const Verdict &v);
nlohmann::json to_json(const AnalysisReport &report);
nlohmann::json error_to_json(const Error &e);

std::string to_text(const AnalysisReport &report);

/// "Hom(Γ,G)₁ ≃ Hom(ℤ^r,G)₁"
std::string reduction_statement(std::size_t r);

} // namespace nilrep
