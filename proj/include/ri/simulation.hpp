#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ri/inference.hpp"
#include "ri/network.hpp"

namespace ri {

enum class UniformityKind { Base, NetworkPlus, NetworkMinus };

const char* uniformity_kind_name(UniformityKind kind);
UniformityKind uniformity_kind_from_name(const std::string& name);

// Baseline ("uniformity trial") outcome generator. Base draws i.i.d.
// Uniform(low, high); the network variants pre-dose each unit by the maximum
// possible spillover at its degree: plus multiplies by the growth curve,
// minus divides by it.
struct UniformityTrialSpec {
  UniformityKind kind = UniformityKind::NetworkPlus;
  double low = 30.0;
  double high = 70.0;
  double dose_beta = 2.0;
  double dose_tau = 0.5;
  std::uint64_t seed = 0;
};

std::vector<double> make_uniformity(const UniformityTrialSpec& spec, const Network& net);

// One operating-characteristics study: a fixed network and uniformity trial,
// R replicated experiments generated under the true model, each tested over
// the hypothesis grid.
struct SimulationConfig {
  int n = 64;
  int edges = 128;
  double treated_fraction = 0.5;
  int replications = 500;

  std::string true_model = "spillover";
  std::vector<double> true_params = {2.0, 0.5};

  UniformityKind uniformity = UniformityKind::NetworkPlus;
  double uniformity_low = 30.0;
  double uniformity_high = 70.0;
  double dose_beta = 2.0;
  double dose_tau = 0.5;

  std::string grid_model = "spillover";
  std::vector<GridAxis> grid;

  std::string statistic = "ks";
  Method method = Method::monte_carlo(1000, 0);  // per-replicate seeds derived from `seed`

  std::vector<double> alpha_grid;  // defaulted in validate() when empty
  double power_alpha = 0.05;

  std::uint64_t seed = 0;  // master seed; all other randomness derives from it

  int treated_count() const;
  // Throws std::invalid_argument on an inconsistent configuration and fills
  // defaults (alpha grid, uniformity dose parameters from true params).
  void validate();
};

std::vector<double> default_alpha_grid();

struct SizeReport {
  std::vector<double> alpha;
  std::vector<double> rejection;  // empirical size of the true-parameter cell
  std::vector<double> se_sim;     // sqrt(p(1-p)/R)
  int replications = 0;
  std::vector<double> true_params;
};

struct PowerReport {
  std::vector<GridAxis> axes;
  std::vector<double> rejection;  // rejection rate at `alpha` per cell, row-major
  std::vector<double> se_sim;
  double alpha = 0.05;
  int replications = 0;
  std::size_t least_rejected = 0;  // flat index of the least-rejected cell
};

struct SimulationReport {
  SizeReport size;
  PowerReport power;
};

// The sweep driver: per replicate, draw an assignment, generate observed
// outcomes from the fixed uniformity trial under the true model, and test the
// whole hypothesis grid. Size reads the true-parameter cell across the alpha
// grid (the grid model must equal the true model and contain the true point);
// power reads every cell at power_alpha. Deterministic in the master seed
// regardless of worker count.
SimulationReport run_size_power(const SimulationConfig& config,
                                ExecPolicy policy = ExecPolicy::Parallel);

// Same driver without the true-cell bookkeeping: the hypothesis grid may use
// a different functional form than the truth. Reports the rejection-rate map
// and the least-rejected cell.
PowerReport run_misspecification(const SimulationConfig& config,
                                 ExecPolicy policy = ExecPolicy::Parallel);

struct CoverageReport {
  double coverage = 0.0;  // fraction of replicates whose region caught the truth
  double se_sim = 0.0;
  double alpha = 0.05;
  int replications = 0;
};

// Fraction of replicates whose (1 - alpha) confidence region contains the
// true parameters.
CoverageReport coverage_study(const SimulationConfig& config,
                              ExecPolicy policy = ExecPolicy::Parallel);

struct StudyVariant {
  std::string label;
  SimulationConfig config;
};

struct StudyPreset {
  std::string name;
  std::string description;
  std::vector<StudyVariant> variants;
};

// The five operating-characteristics sweeps: test statistics, uniformity
// trials, sample size, network density, and percent treated. `scale`
// multiplies the base sample size (desk scale n=64, R=500 at scale 1).
std::vector<StudyPreset> study_presets(double scale = 1.0, int replications = 500,
                                       std::uint64_t seed = 0);

const StudyVariant& find_preset_variant(const std::vector<StudyPreset>& presets,
                                        const std::string& preset, const std::string& variant);

}  // namespace ri
