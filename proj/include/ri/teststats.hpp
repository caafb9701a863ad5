#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ri {

// Empirical CDF: x -> proportion of the sample <= x. Right-continuous step
// function with F(max) = 1.
class Ecdf {
 public:
  explicit Ecdf(std::span<const double> sample);

  double operator()(double x) const;
  std::span<const double> sorted() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

// Outcome-dependent state precomputed once so that many assignments can be
// scored in O(n) each. The randomization engine prepares once per adjusted
// outcome vector and evaluates across the whole reference set.
class PreparedStatistic {
 public:
  virtual ~PreparedStatistic() = default;
  virtual double evaluate(std::span<const std::uint8_t> z) const = 0;
};

// Effect-increasing score of treated/control dissimilarity. Nonnegative;
// folded around the null center so large values signal misalignment in
// either direction. Pure and reentrant.
class TestStatistic {
 public:
  virtual ~TestStatistic() = default;

  virtual const std::string& name() const = 0;
  virtual std::unique_ptr<PreparedStatistic> prepare(std::span<const double> y) const = 0;

  double evaluate(std::span<const double> y, std::span<const std::uint8_t> z) const {
    return prepare(y)->evaluate(z);
  }

  // Large-sample reference distribution, when one is registered.
  virtual bool has_limit_law() const { return false; }
  virtual double limit_law_pvalue(double observed, int n_treated, int n_control) const;
};

// Max absolute ECDF difference between treated and control groups over the
// pooled sample points. Value in [0, 1].
double ks_statistic(std::span<const double> y, std::span<const std::uint8_t> z);

// |mean(treated) - mean(control)|.
double mean_difference(std::span<const double> y, std::span<const std::uint8_t> z);

// Mann-Whitney rank sum, folded: |R1 - m(n+1)/2| with mid-ranks for ties.
double mann_whitney(std::span<const double> y, std::span<const std::uint8_t> z);

// Registered statistics: "ks", "meandiff", "rank".
const TestStatistic& ks_test();
const TestStatistic& mean_difference_test();
const TestStatistic& rank_sum_test();
const TestStatistic& statistic_by_name(const std::string& name);
std::vector<std::string> statistic_names();

}  // namespace ri
