#pragma once

#include <string>
#include <vector>

#include "curvball/fishbowl.hpp"
#include "curvball/probe.hpp"
#include "curvball/verifier.hpp"

namespace curvball {

/// {"surface", "checks": [{name, verdict, value, witness, tolerance, note}],
///  "finalBall", "translation", "conclusion", "options"}. NaN values become null.
std::string toJson(const VerificationReport& report);

struct CurvatureSummary {
  std::string surface;
  int grid = 0;
  DerivativeMode mode = DerivativeMode::kAnalytic;
  std::size_t samples = 0;
  SurfaceCurvatureMaximum maximum;
  std::vector<ComponentCurvature> components;
};

std::string toJson(const CurvatureSummary& summary);

struct FishbowlSummary {
  FishbowlParams params;
  std::string surface;
  double mainBodyClosedForm = 0.0;
  double mainBodyQuadrature = 0.0;
  double mainBodyMesh = 0.0;  ///< revolution of the main-body profile
  double bodyVolume = 0.0;    ///< body with collars pulled apart by the gap
  double totalMesh = 0.0;
  int eulerCharacteristic = 0;
  bool watertight = false;
  std::vector<ComponentCurvature> audit;
};

std::string toJson(const FishbowlSummary& summary);

std::string toJson(const ProbeConfig& config, const ProbeResult& result);

}  // namespace curvball
