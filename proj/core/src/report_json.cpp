#include "curvball/report_json.hpp"

#include <cmath>

#include "json.hpp"

namespace curvball {

namespace {

using nlohmann::ordered_json;

ordered_json number(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json point(const Vec3& p) { return ordered_json::array({number(p.x), number(p.y), number(p.z)}); }

ordered_json check(const CheckResult& c) {
  ordered_json j;
  j["name"] = c.name;
  j["verdict"] = toString(c.verdict);
  j["value"] = number(c.value);
  j["witness"] = c.witness ? point(*c.witness) : ordered_json(nullptr);
  j["tolerance"] = number(c.tolerance);
  j["note"] = c.note;
  return j;
}

ordered_json components(const std::vector<ComponentCurvature>& table) {
  ordered_json out = ordered_json::array();
  for (const ComponentCurvature& c : table) {
    out.push_back({{"component", c.component},
                   {"patches", c.patches},
                   {"maxAbsCurvature", number(c.maxAbsCurvature)},
                   {"witness", point(c.witness)},
                   {"withinUnitBound", c.withinUnitBound}});
  }
  return out;
}

const char* modeName(DerivativeMode m) {
  return m == DerivativeMode::kAnalytic ? "analytic" : "finite-difference";
}

ordered_json options(const VerifierOptions& o) {
  return {{"grid", o.grid},
          {"meshDensity", o.meshDensity},
          {"derivatives", modeName(o.derivatives)},
          {"curvatureBound", o.curvatureBound},
          {"curvatureSlack", o.curvatureSlack()},
          {"boundingRadius", o.boundingRadius},
          {"containmentSlack", o.containmentSlack},
          {"starShapeSlack", o.starShapeSlack},
          {"directionsPerPoint", o.directionsPerPoint},
          {"shortnessTolerance", o.shortnessTolerance},
          {"ballTolerance", o.ballTolerance},
          {"translationGap", o.translationGap},
          {"conclusionTolerance", o.conclusionTolerance}};
}

ordered_json reportJson(const VerificationReport& r) {
  ordered_json j;
  j["surface"] = r.surface;
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : r.checks()) checks.push_back(check(c));
  j["checks"] = std::move(checks);
  j["translation"] = point(r.translation);
  j["translationSteps"] = r.translationSteps;
  if (r.finalBall) {
    j["finalBall"] = {{"center", point(r.finalBall->ball.center)},
                      {"radius", number(r.finalBall->ball.radius)},
                      {"margin", number(r.finalBall->margin)},
                      {"meshMargin", number(r.finalBall->meshMargin)}};
  } else {
    j["finalBall"] = nullptr;
  }
  j["conclusion"] = toString(r.conclusion.verdict);
  j["options"] = options(r.options);
  return j;
}

}  // namespace

std::string toJson(const VerificationReport& report) { return reportJson(report).dump(2) + "\n"; }

std::string toJson(const CurvatureSummary& s) {
  ordered_json j;
  j["surface"] = s.surface;
  j["grid"] = s.grid;
  j["derivatives"] = modeName(s.mode);
  j["samples"] = s.samples;
  j["maxAbsCurvature"] = number(s.maximum.value);
  j["witness"] = point(s.maximum.at.position);
  j["witnessPatch"] = s.maximum.at.patch;
  j["witnessParam"] = {number(s.maximum.at.param.u), number(s.maximum.at.param.v)};
  j["components"] = components(s.components);
  return j.dump(2) + "\n";
}

std::string toJson(const FishbowlSummary& s) {
  ordered_json j;
  j["surface"] = s.surface;
  j["params"] = {{"plateLength", s.params.plateLength},
                 {"plateGap", s.params.plateGap},
                 {"halfCircleRadius", s.params.halfCircleRadius},
                 {"tunnelDelta", s.params.tunnelDelta},
                 {"meshDensity", s.params.meshDensity}};
  j["mainBody"] = {{"closedForm", number(s.mainBodyClosedForm)},
                   {"quadrature", number(s.mainBodyQuadrature)},
                   {"mesh", number(s.mainBodyMesh)}};
  j["bodyVolume"] = number(s.bodyVolume);
  j["totalVolume"] = number(s.totalMesh);
  j["thinVolume"] = number(s.totalMesh - s.mainBodyClosedForm);
  j["eulerCharacteristic"] = s.eulerCharacteristic;
  j["genus"] = (2 - s.eulerCharacteristic) / 2;
  j["watertight"] = s.watertight;
  j["curvatureAudit"] = components(s.audit);
  return j.dump(2) + "\n";
}

std::string toJson(const ProbeConfig& config, const ProbeResult& result) {
  ordered_json j;
  j["config"] = {{"dimension", config.dimension},
                 {"budget", config.budget},
                 {"seed", config.seed},
                 {"initialStep", config.initialStep},
                 {"curvatureGrid", config.curvatureGrid},
                 {"volumeDensity", config.volumeDensity},
                 {"curvatureWeight", config.curvatureWeight},
                 {"boundingWeight", config.boundingWeight}};
  j["evaluations"] = result.evaluations;
  j["feasibleEvaluations"] = result.feasibleEvaluations;
  j["bestVolume"] = number(result.bestVolume);
  ordered_json coeffs = ordered_json::array();
  for (double c : result.bestCoefficients) coeffs.push_back(number(c));
  j["bestCoefficients"] = std::move(coeffs);
  j["recheckPassed"] = result.recheckPassed;
  j["verification"] = reportJson(result.report);
  return j.dump(2) + "\n";
}

}  // namespace curvball
