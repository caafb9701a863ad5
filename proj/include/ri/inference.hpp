#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ri/engine.hpp"
#include "ri/models.hpp"
#include "ri/network.hpp"
#include "ri/teststats.hpp"

namespace ri {

inline constexpr std::uint64_t kDefaultExactCap = 10'000'000;

// A testable hypothesis: a causal model together with parameter values.
struct Hypothesis {
  const UniformityModel* model;
  std::vector<double> params;
};

enum class MethodKind { Exact, MonteCarlo, Asymptotic };

struct Method {
  MethodKind kind = MethodKind::MonteCarlo;
  std::uint64_t exact_cap = kDefaultExactCap;
  int draws = 1000;
  std::uint64_t seed = 0;

  static Method exact(std::uint64_t cap = kDefaultExactCap) {
    Method m;
    m.kind = MethodKind::Exact;
    m.exact_cap = cap;
    return m;
  }
  static Method monte_carlo(int draws, std::uint64_t seed) {
    Method m;
    m.kind = MethodKind::MonteCarlo;
    m.draws = draws;
    m.seed = seed;
    return m;
  }
  static Method asymptotic() {
    Method m;
    m.kind = MethodKind::Asymptotic;
    return m;
  }
};

const char* method_kind_name(MethodKind kind);
MethodKind method_kind_from_name(const std::string& name);

struct NullSummary {
  double min, q25, median, q75, max;
};

struct TestResult {
  double observed_stat = 0.0;
  double p_value = 1.0;
  MethodKind method = MethodKind::Exact;
  // |Omega| for exact, draw count for Monte Carlo, 0 for asymptotic.
  std::uint64_t reference_count = 0;
  // #{t_k >= t_obs} among the reference assignments (the Monte Carlo p-value
  // adds one to numerator and denominator for the observed assignment).
  std::uint64_t tail_count = 0;
  std::string model;
  std::string statistic;
  std::vector<double> params;
  std::optional<NullSummary> null_summary;
};

// The Fisherian test: adjust observed data to the hypothesized uniformity
// trial, score the observed assignment, and place that score in the
// randomization distribution of the statistic.
//
// p-value conventions (upper tail; large statistic = evidence against):
//   exact        #{Z in Omega : t(Z) >= t_obs} / |Omega|
//   monte carlo  (1 + #{t_k >= t_obs}) / (draws + 1)
//   asymptotic   registered limit-law tail at t_obs
// Both finite forms land in (0, 1]: the observed assignment is in Omega, and
// the Monte Carlo form counts it once.
TestResult test(std::span<const double> y_obs, std::span<const std::uint8_t> z_obs,
                const Network* net, const Hypothesis& hyp, const TestStatistic& stat,
                const Method& method, ExecPolicy policy = ExecPolicy::Parallel,
                bool collect_null_summary = false);

// Tail of the limiting Kolmogorov distribution for the two-sample KS
// statistic: p = Q(sqrt(n1*n0/(n1+n0)) * d).
double asymptotic_ks_pvalue(double d, int n_treated, int n_control);

struct GridAxis {
  std::string name;
  std::vector<double> values;
};

struct SurfaceProvenance {
  std::string model;
  std::string statistic;
  MethodKind method = MethodKind::MonteCarlo;
  int draws = 0;                    // Monte Carlo only
  std::uint64_t seed = 0;           // Monte Carlo only
  std::uint64_t omega_size = 0;     // exact only
};

// p-values over the cartesian product of parameter grids. Cells are stored
// row-major with the last axis fastest.
struct PValueSurface {
  std::vector<GridAxis> axes;
  std::vector<double> p;
  SurfaceProvenance provenance;

  std::size_t size() const;
  // Parameter values of a cell by flat index.
  std::vector<double> params_at(std::size_t flat) const;
  std::size_t flat_index(std::span<const std::size_t> coords) const;
};

// Runs test() at every grid point. With the Monte Carlo method the same
// seeded draws are reused for every cell, so differences across the surface
// reflect the hypotheses rather than sampling noise.
PValueSurface grid_test(std::span<const double> y_obs, std::span<const std::uint8_t> z_obs,
                        const Network* net, const UniformityModel& model,
                        std::vector<GridAxis> axes, const TestStatistic& stat,
                        const Method& method, ExecPolicy policy = ExecPolicy::Parallel);

struct RegionPoint {
  std::vector<double> params;
  double p;
};

// Grid points not rejected at level alpha (p > alpha).
std::vector<RegionPoint> confidence_region(const PValueSurface& surface, double alpha);

struct ProfileCurve {
  GridAxis axis;
  std::vector<double> p;  // max over all other axes, per kept value
};

// Barnard-style profiling: for each value on the kept axis, the largest
// p-value over the other axes. Conservative marginal intervals follow.
ProfileCurve profile_pvalues(const PValueSurface& surface, const std::string& keep_axis);

}  // namespace ri
