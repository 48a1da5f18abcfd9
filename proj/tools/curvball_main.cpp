// curvball: command-line front end. Subcommands analyze, verify, fishbowl,
// probe; each writes its artifacts into --out and a one-line summary to stdout.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "curvball/catalog.hpp"
#include "curvball/errors.hpp"
#include "curvball/fishbowl.hpp"
#include "curvball/mesh.hpp"
#include "curvball/obj_io.hpp"
#include "curvball/probe.hpp"
#include "curvball/report_json.hpp"
#include "curvball/sampling.hpp"
#include "curvball/surface_config.hpp"
#include "curvball/verifier.hpp"

namespace fs = std::filesystem;
using namespace curvball;

namespace {

enum ExitCode { kOk = 0, kError = 1, kHypothesisFailed = 2, kConclusionFailed = 3 };

struct Common {
  std::string surface;
  std::string config;
  std::string out = ".";
  std::uint64_t seed = 1;
};

struct Tolerances {
  std::optional<double> curvature;
  std::optional<double> containment;
};

void addSurfaceFlags(CLI::App* cmd, Common& c) {
  cmd->add_option("--surface", c.surface, "inline spec, e.g. sphere:r=1.5,cx=0.4");
  cmd->add_option("--config", c.config, "surface config file");
}

void addOutputFlags(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "output directory")->capture_default_str();
  cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
}

SurfaceSpec loadSpec(const Common& c) {
  if (!c.surface.empty() && !c.config.empty()) throw CLI::ValidationError("give --surface or --config, not both");
  if (!c.config.empty()) return loadSpecFile(c.config);
  if (c.surface.empty()) throw CLI::ValidationError("--surface or --config is required");
  return parseInlineSpec(c.surface);
}

fs::path outputDir(const Common& c) {
  fs::path dir(c.out);
  fs::create_directories(dir);
  return dir;
}

void writeText(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

void applyTolerances(VerifierOptions& o, const Tolerances& t) {
  if (t.curvature) {
    o.curvatureSlackAnalytic = *t.curvature;
    o.curvatureSlackFiniteDifference = *t.curvature;
  }
  if (t.containment) {
    o.containmentSlack = *t.containment;
    o.ballTolerance = *t.containment;
  }
}

int runAnalyze(const Common& c, int density, bool finiteDifference, int meshDensity) {
  const SurfaceSpec spec = loadSpec(c);
  const Surface surface = buildSurface(spec);
  CurvatureSummary s;
  s.surface = surface.label();
  s.grid = density;
  s.mode = finiteDifference ? DerivativeMode::kFiniteDifference : DerivativeMode::kAnalytic;
  s.samples = gridPointCount(surface, density);
  s.maximum = maxAbsNormalCurvature(surface, density, s.mode);
  s.components = curvatureAudit(surface, density);
  const fs::path dir = outputDir(c);
  writeText(dir / "curvature.json", toJson(s));
  if (meshDensity > 0) writeObjFile((dir / "surface.obj").string(), tessellate(surface, meshDensity), surface.label());
  std::printf("%s: max |kappa_n| = %.12g at (%.6g, %.6g, %.6g)\n", surface.label().c_str(), s.maximum.value,
              s.maximum.at.position.x, s.maximum.at.position.y, s.maximum.at.position.z);
  return kOk;
}

int runVerify(const Common& c, int density, int meshDensity, const Tolerances& tol) {
  const Surface surface = buildSurface(loadSpec(c));
  VerifierOptions o;
  o.grid = density;
  o.meshDensity = meshDensity;
  applyTolerances(o, tol);
  const VerificationReport r = verifyTheorem(surface, o);
  writeText(outputDir(c) / "report.json", toJson(r));
  for (const CheckResult& check : r.checks()) {
    std::printf("%-22s %-7s %.12g\n", check.name.c_str(), toString(check.verdict), check.value);
  }
  if (!r.hypothesesHold()) return kHypothesisFailed;
  return r.conclusion.passed() ? kOk : kConclusionFailed;
}

int runFishbowl(const Common& c, FishbowlParams p, bool components) {
  if (!c.config.empty() || !c.surface.empty()) {
    const SurfaceSpec spec = loadSpec(c);
    if (spec.type != "fishbowl") throw ConfigError("expected a fishbowl spec", spec.line, spec.column);
    const int density = p.meshDensity;
    p = fishbowlParams(spec);
    p.meshDensity = density;
  }
  const Surface surface = buildFishbowl(p);
  const TriMesh mesh = tessellate(surface, p.meshDensity);
  FishbowlSummary s;
  s.params = p;
  s.surface = surface.label();
  s.mainBodyClosedForm = mainBodyVolumeClosedForm();
  s.mainBodyQuadrature = mainBodyVolumeQuadrature();
  s.mainBodyMesh = enclosedVolume(tessellate(makeRevolution(mainBodyProfile(), "main body"), p.meshDensity));
  s.bodyVolume = fishbowlBodyVolume(p);
  s.totalMesh = enclosedVolume(mesh);
  s.eulerCharacteristic = eulerCharacteristic(mesh);
  s.watertight = mesh.isWatertight();
  s.audit = curvatureAudit(surface);

  const fs::path dir = outputDir(c);
  writeText(dir / "fishbowl.json", toJson(s));
  writeObjFile((dir / "fishbowl.obj").string(), mesh, surface.label());
  if (components) {
    for (const std::string& name : surface.components()) {
      const TriMesh part =
          tessellatePatches(surface, p.meshDensity,
                            [&](const SurfacePatch& patch) { return patch.component() == name; });
      writeObjFile((dir / ("fishbowl-" + name + ".obj")).string(), part, name);
    }
  }
  std::printf("main body volume %.12g (closed form), %.12g (quadrature), %.12g (mesh)\n", s.mainBodyClosedForm,
              s.mainBodyQuadrature, s.mainBodyMesh);
  std::printf("fishbowl volume %.12g, euler characteristic %d, watertight %s\n", s.totalMesh,
              s.eulerCharacteristic, s.watertight ? "yes" : "no");
  for (const ComponentCurvature& a : s.audit) {
    std::printf("  %-14s max |kappa_n| = %.9g%s\n", a.component.c_str(), a.maxAbsCurvature,
                a.withinUnitBound ? "" : "  (exceeds 1)");
  }
  return kOk;
}

int runProbe(const Common& c, ProbeConfig cfg) {
  cfg.seed = c.seed;
  const ProbeResult r = probeMinVolume(cfg);
  const fs::path dir = outputDir(c);
  {
    std::ofstream csv(dir / "probe.csv", std::ios::binary);
    writeTrajectoryCsv(csv, r);
  }
  writeText(dir / "probe.json", toJson(cfg, r));
  std::printf("best feasible volume %.12g after %d evaluations (%d feasible); verification %s\n", r.bestVolume,
              r.evaluations, r.feasibleEvaluations, toString(r.report.conclusion.verdict));
  if (!r.report.hypothesesHold()) return kHypothesisFailed;
  return r.report.conclusion.passed() ? kOk : kConclusionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature-bounded surfaces: checks, constructions and a volume probe"};
  app.require_subcommand(1);

  Common common;
  int density = 128;
  int meshDensity = 128;
  int objDensity = 0;
  bool finiteDifference = false;
  Tolerances tol;

  auto* analyze = app.add_subcommand("analyze", "max |normal curvature| and per-component table");
  addSurfaceFlags(analyze, common);
  addOutputFlags(analyze, common);
  analyze->add_option("--density", density, "lattice points per patch edge")->check(CLI::Range(2, 1 << 14));
  analyze->add_flag("--fd", finiteDifference, "use finite-difference partials");
  analyze->add_option("--obj", objDensity, "also write surface.obj at this density");

  auto* verify = app.add_subcommand("verify", "run the hypothesis checks and certify the enclosed unit ball");
  addSurfaceFlags(verify, common);
  addOutputFlags(verify, common);
  verify->add_option("--density", density, "lattice points per patch edge")->check(CLI::Range(2, 1 << 14));
  verify->add_option("--mesh-density", meshDensity, "tessellation density")->check(CLI::Range(2, 1 << 14));
  verify->add_option("--tol-curvature", tol.curvature, "slack on the curvature bound");
  verify->add_option("--tol-containment", tol.containment, "slack on containment checks");

  FishbowlParams fishbowl;
  bool components = true;
  auto* fish = app.add_subcommand("fishbowl", "build the genus-2 fishbowl, report volumes, genus and curvatures");
  addSurfaceFlags(fish, common);
  addOutputFlags(fish, common);
  fish->add_option("--plate-length", fishbowl.plateLength, "side of each square plate")->capture_default_str();
  fish->add_option("--plate-gap", fishbowl.plateGap, "distance between the two plates")->capture_default_str();
  fish->add_option("--half-circle-radius", fishbowl.halfCircleRadius, "collar arc radius")->capture_default_str();
  fish->add_option("--tunnel-delta", fishbowl.tunnelDelta, "extra hole radius minus 1")->capture_default_str();
  fish->add_option("--density", fishbowl.meshDensity, "tessellation density")
      ->capture_default_str()
      ->check(CLI::Range(2, 1 << 14));
  fish->add_flag("!--no-components", components, "skip per-component OBJ files");

  ProbeConfig probe;
  auto* prb = app.add_subcommand("probe", "search perturbed spheres for a feasible volume below 4 pi / 3");
  addOutputFlags(prb, common);
  prb->add_option("--dim", probe.dimension, "number of perturbation coefficients")
      ->capture_default_str()
      ->check(CLI::Range(0, 32));
  prb->add_option("--budget", probe.budget, "objective evaluations after the start")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  prb->add_option("--step", probe.initialStep, "initial simplex step")->capture_default_str();
  prb->add_option("--density", probe.curvatureGrid, "curvature lattice")->capture_default_str();
  common.seed = probe.seed;

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return runAnalyze(common, density, finiteDifference, objDensity);
    if (*verify) return runVerify(common, density, meshDensity, tol);
    if (*fish) return runFishbowl(common, fishbowl, components);
    return runProbe(common, probe);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
