#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ri/network.hpp"

namespace ri {

// Multiplicative spillover model parameters. beta > 0 is required: the
// back-transform divides by factors that could otherwise hit zero or flip
// sign. Only tau^2 enters the growth curve, so tau is canonicalized to |tau|
// in reports.
struct SpilloverParams {
  double beta;
  double tau;
};

struct AdditiveParams {
  double alpha;
};

// Control-unit multiplier as the treated-neighbor count x grows:
//   beta + (1 - beta) * exp(-tau^2 * x)
// Equals 1 at x = 0 and approaches beta as x grows.
double growth_curve(double beta, double tau, double x);

// Per-unit multiplier: beta for treated units, growth_curve at the unit's
// treated-neighbor count for controls.
std::vector<double> spillover_factor(const Network& net, std::span<const std::uint8_t> z,
                                     const SpilloverParams& params);

// Observed outcomes from the uniformity trial: y = factor(z) * y0, elementwise.
std::vector<double> spillover_from_uniformity(std::span<const double> y0,
                                              std::span<const std::uint8_t> z, const Network& net,
                                              const SpilloverParams& params);

// Uniformity trial from observed outcomes: y0 = y / factor(z). Exact inverse
// of spillover_from_uniformity.
std::vector<double> spillover_to_uniformity(std::span<const double> y,
                                            std::span<const std::uint8_t> z, const Network& net,
                                            const SpilloverParams& params);

// General transform between assignments: what would have been observed under
// w given that y was observed under z. Composition of the two maps above.
std::vector<double> spillover_transform(std::span<const double> y,
                                        std::span<const std::uint8_t> z,
                                        std::span<const std::uint8_t> w, const Network& net,
                                        const SpilloverParams& params);

// Additive shift model, no network dependence: entry i = y_i - alpha*(z_i - w_i).
std::vector<double> additive_transform(std::span<const double> y,
                                       std::span<const std::uint8_t> z,
                                       std::span<const std::uint8_t> w,
                                       const AdditiveParams& params);

// Allowed range for one model parameter.
struct ParamSpec {
  std::string name;
  double min = -std::numeric_limits<double>::infinity();
  double max = std::numeric_limits<double>::infinity();
  bool min_exclusive = false;

  bool contains(double v) const;
};

// A causal model as an invertible transform pair between observed outcomes
// and the uniformity trial. The two maps are mutual inverses at equal
// (z, params). Models are immutable values; the transforms are pure, so a
// single instance may be shared across threads.
class UniformityModel {
 public:
  using Transform = std::function<std::vector<double>(
      std::span<const double>, std::span<const std::uint8_t>, const Network*,
      std::span<const double>)>;

  UniformityModel(std::string name, std::vector<ParamSpec> params, bool uses_network,
                  Transform to_uniformity, Transform from_uniformity)
      : name_(std::move(name)),
        params_(std::move(params)),
        uses_network_(uses_network),
        to_(std::move(to_uniformity)),
        from_(std::move(from_uniformity)) {}

  const std::string& name() const { return name_; }
  const std::vector<ParamSpec>& param_spec() const { return params_; }
  bool uses_network() const { return uses_network_; }

  // Throws std::invalid_argument on a parameter outside its domain.
  void validate_params(std::span<const double> params) const;

  std::vector<double> to_uniformity(std::span<const double> y, std::span<const std::uint8_t> z,
                                    const Network* net, std::span<const double> params) const;
  std::vector<double> from_uniformity(std::span<const double> y0, std::span<const std::uint8_t> z,
                                      const Network* net, std::span<const double> params) const;

 private:
  std::string name_;
  std::vector<ParamSpec> params_;
  bool uses_network_;
  Transform to_;
  Transform from_;
};

// Registered models: "sharp-null" (no params), "spillover" (beta, tau),
// "additive" (alpha).
const UniformityModel& sharp_null_model();
const UniformityModel& spillover_model();
const UniformityModel& additive_model();
const UniformityModel& model_by_name(const std::string& name);
std::vector<std::string> model_names();

}  // namespace ri
