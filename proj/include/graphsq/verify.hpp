#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphsq/report.hpp"

namespace graphsq {

struct VerifyOptions {
  /// Residual tolerance of the iterative solver.
  double tolerance = 1e-12;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  /// Instances per randomized lemma suite.
  std::size_t trials = 500;
  /// Fill runtime_ms (makes reports run-dependent).
  bool timing = false;
};

/// Scans run at a looser residual to bound cost at order 100.
inline constexpr double kScanTolerance = 1e-10;
/// Floating-point verdicts need a gap of this many residuals.
inline constexpr double kGapFactor = 10.0;
/// Margin applied to Perron-vector hypotheses of the relocation lemma.
inline constexpr double kHypothesisMargin = 1e-9;

struct IntRange {
  std::size_t min = 0;
  std::size_t max = 0;
};

/// rho(G^2) <= n-1 with equality iff diam(G) <= 2, over connected graphs.
ClaimReport check_upper_bound_connected(IntRange n, const VerifyOptions& o = {});
/// Same statement over unicyclic graphs.
ClaimReport check_upper_bound_unicyclic(IntRange n, const VerifyOptions& o = {});
/// Unique minimizer P_n and unique maximizer S_n over trees.
ClaimReport check_tree_extremes(IntRange n, const VerifyOptions& o = {});
/// Unique minimizer P_n over connected graphs, plus the n = 3 exception.
ClaimReport check_connected_min(IntRange n, const VerifyOptions& o = {});
/// Minimum over unicyclic graphs is attained only by the tadpole or C_n.
ClaimReport check_unicyclic_min(IntRange n, const VerifyOptions& o = {});
/// Girth in [5, n-1] forces average degree and radius of U^2 above 4.
ClaimReport check_girth_lemma(IntRange n, const VerifyOptions& o = {});
/// cycle_star(n, g) is the unique maximizer over unicyclic graphs of girth g.
ClaimReport check_girth_max(IntRange n, std::optional<IntRange> g, const VerifyOptions& o = {});
/// Extremal trees of fixed diameter and whether they are brooms.
ClaimReport check_diameter_candidates(IntRange n, std::optional<IntRange> d, const VerifyOptions& o = {});
/// Randomized and exhaustive suites for the structural lemmas.
ClaimReport check_lemma_properties(const VerifyOptions& o = {});
/// Iterative radius against the exact oracle on trees and unicyclic graphs.
ClaimReport check_oracle_agreement(IntRange trees, IntRange unicyclic, const VerifyOptions& o = {});
/// rho(P_n) <= rho(G) <= rho(K_n) and the tree / unicyclic analogues.
ClaimReport check_classical_bounds(IntRange n, const VerifyOptions& o = {});
/// 4 - rho(tadpole(n)^2) for 5 <= n <= n_max.
ClaimReport scan_conjecture1(std::size_t n_max, const VerifyOptions& o = {});
/// Argmax over i of rho(broom(n, d, i)^2) for 5 <= n <= n_max, 3 <= d <= n-2.
ClaimReport scan_conjecture2(std::size_t n_max, const VerifyOptions& o = {});

/// Parameters of a claim run by name (CLI and Python entry point).
struct ClaimRequest {
  std::string claim;
  std::optional<std::size_t> n_min;
  std::optional<std::size_t> n_max;
  std::optional<IntRange> girth;
  std::optional<IntRange> diameter;
  VerifyOptions options;
};

std::vector<std::string> claim_ids();
/// Throws std::invalid_argument for an unknown claim or bad range.
ClaimReport run_claim(const ClaimRequest& request);

}  // namespace graphsq
