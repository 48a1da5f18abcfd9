#include "curvball/probe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>

#include "curvball/catalog.hpp"
#include "curvball/errors.hpp"
#include "curvball/mesh.hpp"

namespace curvball {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Vertex {
  std::vector<double> x;
  double f = kInf;
};

class Evaluator {
 public:
  Evaluator(const ProbeConfig& config, const VerifierOptions& options, ProbeResult& result)
      : config_(config), options_(options), result_(result) {}

  bool exhausted() const { return result_.evaluations >= config_.budget; }

  // Objective value: volume if feasible, +inf otherwise. The initial start
  // is not charged to the budget.
  double operator()(const std::vector<double>& c, bool charged = true) {
    ProbeRecord rec;
    rec.evaluation = static_cast<int>(result_.trajectory.size());
    rec.coefficients = c;
    rec.volume = std::numeric_limits<double>::quiet_NaN();
    if (charged) ++result_.evaluations;
    try {
      const Surface s = makePerturbedSphere(RadialPerturbation::monomials(c), 1.0);
      rec.maxCurvature = maxAbsNormalCurvature(s, config_.curvatureGrid).value;
      rec.maxNorm = norm(farthestPointFromOrigin(s, config_.curvatureGrid).position);
      rec.feasible = isFeasible(rec.maxCurvature, rec.maxNorm);
      if (rec.feasible) rec.volume = extrapolatedVolume(s, config_.volumeDensity);
    } catch (const NonpositiveRadius&) {
      rec.maxCurvature = kInf;
      rec.maxNorm = kInf;
    }
    rec.violation = config_.curvatureWeight * std::max(0.0, rec.maxCurvature - options_.curvatureBound) +
                    config_.boundingWeight * std::max(0.0, rec.maxNorm - options_.boundingRadius);
    if (rec.feasible) ++result_.feasibleEvaluations;
    result_.trajectory.push_back(rec);
    return rec.feasible ? rec.volume : kInf;
  }

  bool isFeasible(double curvature, double maxNorm) const {
    return curvature <= options_.curvatureBound + options_.curvatureSlack() &&
           maxNorm < options_.boundingRadius - options_.containmentSlack;
  }

 private:
  const ProbeConfig& config_;
  const VerifierOptions& options_;
  ProbeResult& result_;
};

double diameter(const std::vector<Vertex>& simplex) {
  double d = 0.0;
  for (const Vertex& v : simplex) {
    for (std::size_t i = 0; i < v.x.size(); ++i) d = std::max(d, std::abs(v.x[i] - simplex.front().x[i]));
  }
  return d;
}

std::vector<double> affine(const std::vector<double>& a, const std::vector<double>& b, double t) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

void nelderMead(Vertex start, double step, Evaluator& eval) {
  const std::size_t n = start.x.size();
  std::vector<Vertex> simplex{start};
  for (std::size_t i = 0; i < n && !eval.exhausted(); ++i) {
    Vertex v{start.x, kInf};
    v.x[i] += step;
    v.f = eval(v.x);
    simplex.push_back(std::move(v));
  }
  if (simplex.size() != n + 1) return;
  auto byValue = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };

  while (!eval.exhausted()) {
    std::stable_sort(simplex.begin(), simplex.end(), byValue);
    const double spread = simplex.back().f - simplex.front().f;
    if (diameter(simplex) < 1e-9 || (std::isfinite(spread) && spread < 1e-13 && diameter(simplex) < 1e-6)) return;

    std::vector<double> centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k].x[i] / static_cast<double>(n);
    }
    Vertex& worst = simplex.back();
    const std::vector<double> xr = affine(centroid, worst.x, -1.0);
    const double fr = eval(xr);
    if (fr < simplex.front().f) {
      if (eval.exhausted()) {
        worst = {xr, fr};
        continue;
      }
      const std::vector<double> xe = affine(centroid, worst.x, -2.0);
      const double fe = eval(xe);
      worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      continue;
    }
    if (fr < simplex[n - 1].f) {
      worst = {xr, fr};
      continue;
    }
    if (eval.exhausted()) return;
    const bool outside = fr < worst.f;
    const std::vector<double> xc = outside ? affine(centroid, xr, 0.5) : affine(centroid, worst.x, 0.5);
    const double fc = eval(xc);
    if (fc < std::min(fr, worst.f) || (!outside && fc < worst.f)) {
      worst = {xc, fc};
      continue;
    }
    for (std::size_t k = 1; k <= n && !eval.exhausted(); ++k) {
      simplex[k].x = affine(simplex.front().x, simplex[k].x, 0.5);
      simplex[k].f = eval(simplex[k].x);
    }
  }
}

}  // namespace

void ProbeConfig::validate() const {
  if (dimension < 0 || dimension > 32) throw InvalidParameter("probe dimension must lie in [0, 32]");
  if (!(curvatureWeight > 0.0) || !(boundingWeight > 0.0)) throw InvalidParameter("probe weights must be positive");
  if (budget < 0) throw InvalidParameter("probe budget must be non-negative");
  if (!(initialStep > 0.0)) throw InvalidParameter("probe initial step must be positive");
  if (curvatureGrid < 2 || volumeDensity < 2) throw InvalidParameter("probe grids must be at least 2");
}

double extrapolatedVolume(const Surface& surface, int density) {
  const double coarse = enclosedVolume(tessellate(surface, density));
  const double fine = enclosedVolume(tessellate(surface, 2 * density - 1));
  return (4.0 * fine - coarse) / 3.0;
}

ProbeResult probeMinVolume(const ProbeConfig& config, const VerifierOptions& verifyOptions) {
  config.validate();
  ProbeResult result;
  Evaluator eval(config, verifyOptions, result);
  const std::size_t n = static_cast<std::size_t>(config.dimension);

  Vertex start{std::vector<double>(n, 0.0), kInf};
  start.f = eval(start.x, false);
  if (!std::isfinite(start.f)) throw NoFeasibleStart("the unperturbed unit sphere was rejected");

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> noise(-config.initialStep, config.initialStep);
  if (n > 0) {
    nelderMead(start, config.initialStep, eval);
    while (!eval.exhausted()) {
      // Restart around the incumbent.
      const auto best = std::min_element(result.trajectory.begin(), result.trajectory.end(),
                                         [](const ProbeRecord& a, const ProbeRecord& b) {
                                           if (a.feasible != b.feasible) return a.feasible;
                                           return a.feasible && a.volume < b.volume;
                                         });
      Vertex next{best->coefficients, kInf};
      for (double& c : next.x) c += noise(rng);
      next.f = eval(next.x);
      if (std::isfinite(next.f)) nelderMead(next, config.initialStep, eval);
    }
  }

  // Feasible points by volume; return the first that survives a recheck at
  // doubled sampling density.
  std::vector<const ProbeRecord*> feasible;
  for (const ProbeRecord& r : result.trajectory) {
    if (r.feasible) feasible.push_back(&r);
  }
  std::stable_sort(feasible.begin(), feasible.end(),
                   [](const ProbeRecord* a, const ProbeRecord* b) { return a->volume < b->volume; });
  const ProbeRecord* chosen = &result.trajectory.front();
  for (const ProbeRecord* r : feasible) {
    const Surface s = makePerturbedSphere(RadialPerturbation::monomials(r->coefficients), 1.0);
    const double k = maxAbsNormalCurvature(s, 2 * config.curvatureGrid).value;
    const double m = norm(farthestPointFromOrigin(s, 2 * config.curvatureGrid).position);
    if (eval.isFeasible(k, m)) {
      chosen = r;
      result.recheckPassed = true;
      break;
    }
  }
  result.bestCoefficients = chosen->coefficients;
  result.bestVolume = chosen->volume;
  result.report = verifyTheorem(makePerturbedSphere(RadialPerturbation::monomials(chosen->coefficients), 1.0)
                                    .relabeled("probe minimizer"),
                                verifyOptions);
  return result;
}

void writeTrajectoryCsv(std::ostream& out, const ProbeResult& result) {
  const std::size_t n = result.trajectory.empty() ? 0 : result.trajectory.front().coefficients.size();
  out << "evaluation,feasible,volume,max_curvature,max_norm,violation";
  for (std::size_t i = 0; i < n; ++i) out << ",c" << i;
  out << '\n';
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  };
  for (const ProbeRecord& r : result.trajectory) {
    out << r.evaluation << ',' << (r.feasible ? 1 : 0) << ',' << num(r.volume) << ',';
    out << num(r.maxCurvature) << ',';
    out << num(r.maxNorm) << ',';
    out << num(r.violation);
    for (double c : r.coefficients) out << ',' << num(c);
    out << '\n';
  }
}

}  // namespace curvball
