#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "curvball/verifier.hpp"

namespace curvball {

/// Volume minimization over radial graphs r = 1 + sum c_i m_i(d), with m_i the
/// first `dimension` monomials of RadialPerturbation::monomials. Infeasible
/// points (curvature above 1 or max |x| >= 2) are rejected, not penalized.
struct ProbeConfig {
  int dimension = 8;
  /// Weights of the violation score written to the log for rejected points.
  double curvatureWeight = 1.0;
  double boundingWeight = 1.0;
  int budget = 2000;  ///< objective evaluations after the initial one
  std::uint64_t seed = 7;
  double initialStep = 0.02;  ///< simplex edge and restart noise scale
  int curvatureGrid = 32;
  int volumeDensity = 32;  ///< Richardson pair (n, 2n - 1)

  /// Throws InvalidParameter.
  void validate() const;
};

struct ProbeRecord {
  int evaluation = 0;
  bool feasible = false;
  double volume = 0.0;  ///< NaN when rejected
  double maxCurvature = 0.0;
  double maxNorm = 0.0;
  double violation = 0.0;
  std::vector<double> coefficients;
};

struct ProbeResult {
  std::vector<double> bestCoefficients;
  double bestVolume = 0.0;
  int evaluations = 0;
  int feasibleEvaluations = 0;
  std::vector<ProbeRecord> trajectory;
  /// The returned point passed both hypothesis checks at doubled density.
  bool recheckPassed = false;
  VerificationReport report;
};

/// Richardson-extrapolated mesh volume (4 V(2n - 1) - V(n)) / 3; the lattice
/// spacing halves between the two densities.
double extrapolatedVolume(const Surface& surface, int density);

/// Nelder-Mead from the zero start, then restarts from seeded random
/// perturbations of the incumbent until the budget is spent. Deterministic
/// for a given config. Throws NoFeasibleStart if the zero start is rejected.
ProbeResult probeMinVolume(const ProbeConfig& config, const VerifierOptions& verifyOptions = {});

/// CSV with header `evaluation,feasible,volume,max_curvature,max_norm,violation,c0,...`.
void writeTrajectoryCsv(std::ostream& out, const ProbeResult& result);

}  // namespace curvball
