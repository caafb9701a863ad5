#include "ri/models.hpp"

#include <cmath>
#include <stdexcept>

namespace ri {

namespace {

void check_dims(std::size_t y, std::size_t z, const Network* net) {
  if (y != z) throw std::invalid_argument("model transform: outcome/assignment length mismatch");
  if (net && static_cast<std::size_t>(net->size()) != y)
    throw std::invalid_argument("model transform: network size mismatch");
}

void check_beta(double beta) {
  if (!(beta > 0.0))
    throw std::invalid_argument("spillover model: beta must be > 0 for invertibility");
}

}  // namespace

double growth_curve(double beta, double tau, double x) {
  return beta + (1.0 - beta) * std::exp(-(tau * tau) * x);
}

std::vector<double> spillover_factor(const Network& net, std::span<const std::uint8_t> z,
                                     const SpilloverParams& params) {
  check_dims(z.size(), z.size(), &net);
  check_beta(params.beta);
  const std::vector<int> counts = treated_neighbor_counts(net, z);
  std::vector<double> factor(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    factor[i] = z[i] ? params.beta
                     : growth_curve(params.beta, params.tau, static_cast<double>(counts[i]));
  }
  return factor;
}

std::vector<double> spillover_from_uniformity(std::span<const double> y0,
                                              std::span<const std::uint8_t> z, const Network& net,
                                              const SpilloverParams& params) {
  check_dims(y0.size(), z.size(), &net);
  const std::vector<double> factor = spillover_factor(net, z, params);
  std::vector<double> y(y0.size());
  for (std::size_t i = 0; i < y0.size(); ++i) y[i] = y0[i] * factor[i];
  return y;
}

std::vector<double> spillover_to_uniformity(std::span<const double> y,
                                            std::span<const std::uint8_t> z, const Network& net,
                                            const SpilloverParams& params) {
  check_dims(y.size(), z.size(), &net);
  const std::vector<double> factor = spillover_factor(net, z, params);
  std::vector<double> y0(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) y0[i] = y[i] / factor[i];
  return y0;
}

std::vector<double> spillover_transform(std::span<const double> y,
                                        std::span<const std::uint8_t> z,
                                        std::span<const std::uint8_t> w, const Network& net,
                                        const SpilloverParams& params) {
  return spillover_from_uniformity(spillover_to_uniformity(y, z, net, params), w, net, params);
}

std::vector<double> additive_transform(std::span<const double> y,
                                       std::span<const std::uint8_t> z,
                                       std::span<const std::uint8_t> w,
                                       const AdditiveParams& params) {
  if (y.size() != z.size() || y.size() != w.size())
    throw std::invalid_argument("additive_transform: length mismatch");
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    out[i] = y[i] - params.alpha * (static_cast<double>(z[i]) - static_cast<double>(w[i]));
  }
  return out;
}

bool ParamSpec::contains(double v) const {
  if (!std::isfinite(v)) return false;
  if (min_exclusive ? !(v > min) : !(v >= min)) return false;
  return v <= max;
}

void UniformityModel::validate_params(std::span<const double> params) const {
  if (params.size() != params_.size())
    throw std::invalid_argument("model '" + name_ + "': expected " +
                                std::to_string(params_.size()) + " parameter(s), got " +
                                std::to_string(params.size()));
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!params_[i].contains(params[i]))
      throw std::invalid_argument("model '" + name_ + "': parameter '" + params_[i].name +
                                  "' out of domain");
  }
}

std::vector<double> UniformityModel::to_uniformity(std::span<const double> y,
                                                   std::span<const std::uint8_t> z,
                                                   const Network* net,
                                                   std::span<const double> params) const {
  validate_params(params);
  if (uses_network_ && net == nullptr)
    throw std::invalid_argument("model '" + name_ + "' requires a network");
  return to_(y, z, net, params);
}

std::vector<double> UniformityModel::from_uniformity(std::span<const double> y0,
                                                     std::span<const std::uint8_t> z,
                                                     const Network* net,
                                                     std::span<const double> params) const {
  validate_params(params);
  if (uses_network_ && net == nullptr)
    throw std::invalid_argument("model '" + name_ + "' requires a network");
  return from_(y0, z, net, params);
}

const UniformityModel& sharp_null_model() {
  static const UniformityModel model(
      "sharp-null", {}, false,
      [](std::span<const double> y, std::span<const std::uint8_t> z, const Network*,
         std::span<const double>) {
        check_dims(y.size(), z.size(), nullptr);
        return std::vector<double>(y.begin(), y.end());
      },
      [](std::span<const double> y0, std::span<const std::uint8_t> z, const Network*,
         std::span<const double>) {
        check_dims(y0.size(), z.size(), nullptr);
        return std::vector<double>(y0.begin(), y0.end());
      });
  return model;
}

const UniformityModel& spillover_model() {
  static const UniformityModel model(
      "spillover",
      {ParamSpec{.name = "beta", .min = 0.0, .min_exclusive = true}, ParamSpec{.name = "tau"}},
      true,
      [](std::span<const double> y, std::span<const std::uint8_t> z, const Network* net,
         std::span<const double> p) {
        return spillover_to_uniformity(y, z, *net, SpilloverParams{p[0], p[1]});
      },
      [](std::span<const double> y0, std::span<const std::uint8_t> z, const Network* net,
         std::span<const double> p) {
        return spillover_from_uniformity(y0, z, *net, SpilloverParams{p[0], p[1]});
      });
  return model;
}

const UniformityModel& additive_model() {
  static const UniformityModel model(
      "additive", {ParamSpec{.name = "alpha"}}, false,
      [](std::span<const double> y, std::span<const std::uint8_t> z, const Network*,
         std::span<const double> p) {
        const std::vector<std::uint8_t> zeros(y.size(), 0);
        return additive_transform(y, z, zeros, AdditiveParams{p[0]});
      },
      [](std::span<const double> y0, std::span<const std::uint8_t> z, const Network*,
         std::span<const double> p) {
        const std::vector<std::uint8_t> zeros(y0.size(), 0);
        return additive_transform(y0, zeros, z, AdditiveParams{p[0]});
      });
  return model;
}

const UniformityModel& model_by_name(const std::string& name) {
  if (name == "sharp-null") return sharp_null_model();
  if (name == "spillover") return spillover_model();
  if (name == "additive") return additive_model();
  throw std::invalid_argument("unknown model '" + name + "' (expected sharp-null, spillover, additive)");
}

std::vector<std::string> model_names() {
  return {"sharp-null", "spillover", "additive"};
}

}  // namespace ri
