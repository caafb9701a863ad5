#include "ri/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ri/errors.hpp"

namespace ri {

namespace {

int treated_count(std::span<const std::uint8_t> z) {
  int m = 0;
  for (std::uint8_t zi : z) m += zi;
  return m;
}

NullSummary summarize(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const auto at = [&](double q) {
    const std::size_t i =
        static_cast<std::size_t>(q * static_cast<double>(values.size() - 1) + 0.5);
    return values[i];
  };
  return NullSummary{values.front(), at(0.25), at(0.5), at(0.75), values.back()};
}

}  // namespace

const char* method_kind_name(MethodKind kind) {
  switch (kind) {
    case MethodKind::Exact: return "exact";
    case MethodKind::MonteCarlo: return "montecarlo";
    case MethodKind::Asymptotic: return "asymptotic";
  }
  return "?";
}

MethodKind method_kind_from_name(const std::string& name) {
  if (name == "exact") return MethodKind::Exact;
  if (name == "montecarlo") return MethodKind::MonteCarlo;
  if (name == "asymptotic") return MethodKind::Asymptotic;
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected exact, montecarlo, asymptotic)");
}

namespace {

// Shared by test() and grid_test(). When `shared_draws` is provided the Monte
// Carlo method scores those assignments instead of regenerating them; the
// counter-based draw seeding makes the two routes identical.
TestResult run_method(const PreparedStatistic& prepared, double observed, const Design& design,
                      const TestStatistic& stat, const Method& method, ExecPolicy policy,
                      bool collect_null_summary, std::span<const Assignment> shared_draws) {
  TestResult result;
  result.observed_stat = observed;
  result.method = method.kind;

  switch (method.kind) {
    case MethodKind::Exact: {
      const auto omega = count_assignments_u64(design);
      if (!omega || *omega > method.exact_cap) {
        throw MethodConstraintError(
            "exact method: |Omega| = " + scientific_form(count_assignments(design)) +
            " exceeds cap " + std::to_string(method.exact_cap) + "; use Monte Carlo");
      }
      TailCount tc = exact_tail(prepared, design, observed, policy, collect_null_summary);
      result.reference_count = tc.total;
      result.tail_count = tc.at_or_above;
      result.p_value = static_cast<double>(tc.at_or_above) / static_cast<double>(tc.total);
      if (collect_null_summary) result.null_summary = summarize(std::move(tc.values));
      break;
    }
    case MethodKind::MonteCarlo: {
      TailCount tc = shared_draws.empty()
                         ? mc_tail(prepared, design, method.draws, method.seed, observed, policy,
                                   collect_null_summary)
                         : assignments_tail(prepared, shared_draws, observed, policy,
                                            collect_null_summary);
      result.reference_count = tc.total;
      result.tail_count = tc.at_or_above;
      result.p_value =
          (1.0 + static_cast<double>(tc.at_or_above)) / (static_cast<double>(tc.total) + 1.0);
      if (collect_null_summary) result.null_summary = summarize(std::move(tc.values));
      break;
    }
    case MethodKind::Asymptotic: {
      if (!stat.has_limit_law()) {
        throw MethodConstraintError("statistic '" + stat.name() +
                                    "' has no registered limit law; use exact or Monte Carlo");
      }
      result.reference_count = 0;
      result.tail_count = 0;
      result.p_value = stat.limit_law_pvalue(observed, design.m, design.n - design.m);
      break;
    }
  }
  return result;
}

}  // namespace

TestResult test(std::span<const double> y_obs, std::span<const std::uint8_t> z_obs,
                const Network* net, const Hypothesis& hyp, const TestStatistic& stat,
                const Method& method, ExecPolicy policy, bool collect_null_summary) {
  if (y_obs.size() != z_obs.size())
    throw std::invalid_argument("test: outcome/assignment length mismatch");

  const std::vector<double> y0 = hyp.model->to_uniformity(y_obs, z_obs, net, hyp.params);
  const auto prepared = stat.prepare(y0);
  const double observed = prepared->evaluate(z_obs);
  const Design design(static_cast<int>(z_obs.size()), treated_count(z_obs));

  TestResult result =
      run_method(*prepared, observed, design, stat, method, policy, collect_null_summary, {});
  result.model = hyp.model->name();
  result.statistic = stat.name();
  result.params.assign(hyp.params.begin(), hyp.params.end());
  return result;
}

double asymptotic_ks_pvalue(double d, int n_treated, int n_control) {
  if (d < 0.0 || d > 1.0) throw std::invalid_argument("asymptotic_ks_pvalue: d must be in [0,1]");
  return ks_test().limit_law_pvalue(d, n_treated, n_control);
}

std::size_t PValueSurface::size() const {
  std::size_t total = 1;
  for (const auto& axis : axes) total *= axis.values.size();
  return total;
}

std::vector<double> PValueSurface::params_at(std::size_t flat) const {
  std::vector<double> out(axes.size());
  for (std::size_t a = axes.size(); a-- > 0;) {
    const std::size_t len = axes[a].values.size();
    out[a] = axes[a].values[flat % len];
    flat /= len;
  }
  return out;
}

std::size_t PValueSurface::flat_index(std::span<const std::size_t> coords) const {
  std::size_t flat = 0;
  for (std::size_t a = 0; a < axes.size(); ++a) flat = flat * axes[a].values.size() + coords[a];
  return flat;
}

PValueSurface grid_test(std::span<const double> y_obs, std::span<const std::uint8_t> z_obs,
                        const Network* net, const UniformityModel& model,
                        std::vector<GridAxis> axes, const TestStatistic& stat,
                        const Method& method, ExecPolicy policy) {
  if (axes.empty()) throw std::invalid_argument("grid_test: no parameter axes");
  for (const auto& axis : axes) {
    if (axis.values.empty())
      throw std::invalid_argument("grid_test: axis '" + axis.name + "' is empty");
  }
  if (axes.size() != model.param_spec().size())
    throw std::invalid_argument("grid_test: axis count does not match model '" + model.name() +
                                "' parameters");

  PValueSurface surface;
  surface.axes = std::move(axes);
  surface.p.resize(surface.size());
  surface.provenance.model = model.name();
  surface.provenance.statistic = stat.name();
  surface.provenance.method = method.kind;
  if (method.kind == MethodKind::MonteCarlo) {
    surface.provenance.draws = method.draws;
    surface.provenance.seed = method.seed;
  }
  if (method.kind == MethodKind::Exact) {
    const Design design(static_cast<int>(z_obs.size()), treated_count(z_obs));
    surface.provenance.omega_size = count_assignments_u64(design).value_or(0);
  }

  const Design design(static_cast<int>(z_obs.size()), treated_count(z_obs));

  // Cells are independent tests sharing one reference set: Monte Carlo draws
  // are materialized once from the method seed, so differences across the
  // surface reflect the hypotheses rather than sampling noise.
  std::vector<Assignment> shared_draws;
  if (method.kind == MethodKind::MonteCarlo) {
    shared_draws = sample_assignments(design, method.draws, method.seed);
  }

  for (std::size_t flat = 0; flat < surface.p.size(); ++flat) {
    const std::vector<double> params = surface.params_at(flat);
    const std::vector<double> y0 = model.to_uniformity(y_obs, z_obs, net, params);
    const auto prepared = stat.prepare(y0);
    const double observed = prepared->evaluate(z_obs);
    surface.p[flat] =
        run_method(*prepared, observed, design, stat, method, policy, false, shared_draws)
            .p_value;
  }
  return surface;
}

std::vector<RegionPoint> confidence_region(const PValueSurface& surface, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("confidence_region: alpha must be in (0,1)");
  std::vector<RegionPoint> region;
  for (std::size_t flat = 0; flat < surface.p.size(); ++flat) {
    if (surface.p[flat] > alpha) region.push_back({surface.params_at(flat), surface.p[flat]});
  }
  return region;
}

ProfileCurve profile_pvalues(const PValueSurface& surface, const std::string& keep_axis) {
  std::size_t keep = surface.axes.size();
  for (std::size_t a = 0; a < surface.axes.size(); ++a) {
    if (surface.axes[a].name == keep_axis) keep = a;
  }
  if (keep == surface.axes.size())
    throw std::invalid_argument("profile_pvalues: no axis named '" + keep_axis + "'");

  ProfileCurve curve;
  curve.axis = surface.axes[keep];
  curve.p.assign(curve.axis.values.size(), 0.0);

  // Stride arithmetic: recover the kept axis coordinate of each flat cell.
  std::size_t stride = 1;
  for (std::size_t a = surface.axes.size(); a-- > keep + 1;) stride *= surface.axes[a].values.size();
  const std::size_t len = curve.axis.values.size();
  for (std::size_t flat = 0; flat < surface.p.size(); ++flat) {
    const std::size_t coord = (flat / stride) % len;
    curve.p[coord] = std::max(curve.p[coord], surface.p[flat]);
  }
  return curve;
}

}  // namespace ri
