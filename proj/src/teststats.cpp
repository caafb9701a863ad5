#include "ri/teststats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ri/errors.hpp"

namespace ri {

namespace {

// Both groups must be nonempty for any of the statistics. Returns (m, n0).
std::pair<int, int> group_sizes(std::span<const std::uint8_t> z, std::size_t n) {
  if (z.size() != n)
    throw std::invalid_argument("test statistic: assignment length does not match outcomes");
  int m = 0;
  for (std::uint8_t zi : z) m += zi;
  const int n0 = static_cast<int>(z.size()) - m;
  if (m == 0 || n0 == 0)
    throw std::invalid_argument("test statistic: treated and control groups must be nonempty");
  return {m, n0};
}

// Units ordered by outcome, with tie runs marked. Shared by the KS and rank
// statistics.
struct SortedOutcomes {
  std::vector<int> order;     // unit indices, ascending y
  std::vector<int> run_ends;  // exclusive end position of each tie run

  explicit SortedOutcomes(std::span<const double> y) {
    order.resize(y.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return y[a] < y[b]; });
    for (std::size_t pos = 0; pos < order.size();) {
      std::size_t end = pos + 1;
      while (end < order.size() && y[order[end]] == y[order[pos]]) ++end;
      run_ends.push_back(static_cast<int>(end));
      pos = end;
    }
  }
};

class KsPrepared final : public PreparedStatistic {
 public:
  explicit KsPrepared(std::span<const double> y) : sorted_(y) {}

  double evaluate(std::span<const std::uint8_t> z) const override {
    const auto [m, n0] = group_sizes(z, sorted_.order.size());
    double best = 0.0;
    int c1 = 0;
    int c0 = 0;
    int pos = 0;
    for (int end : sorted_.run_ends) {
      for (; pos < end; ++pos) {
        if (z[sorted_.order[pos]]) {
          ++c1;
        } else {
          ++c0;
        }
      }
      const double d = std::fabs(static_cast<double>(c1) / m - static_cast<double>(c0) / n0);
      best = std::max(best, d);
    }
    return best;
  }

 private:
  SortedOutcomes sorted_;
};

class MeanDiffPrepared final : public PreparedStatistic {
 public:
  explicit MeanDiffPrepared(std::span<const double> y) : y_(y.begin(), y.end()) {}

  double evaluate(std::span<const std::uint8_t> z) const override {
    const auto [m, n0] = group_sizes(z, y_.size());
    // Both group sums accumulate in unit order so that an assignment and its
    // complement score identically, bit for bit.
    double s1 = 0.0;
    double s0 = 0.0;
    for (std::size_t i = 0; i < y_.size(); ++i) {
      if (z[i]) {
        s1 += y_[i];
      } else {
        s0 += y_[i];
      }
    }
    return std::fabs(s1 / m - s0 / n0);
  }

 private:
  std::vector<double> y_;
};

class RankPrepared final : public PreparedStatistic {
 public:
  explicit RankPrepared(std::span<const double> y) : midrank_(y.size()) {
    const SortedOutcomes sorted(y);
    int pos = 0;
    for (int end : sorted.run_ends) {
      // Ranks are 1-based; ties share the average rank of their run.
      const double shared = (static_cast<double>(pos + 1) + static_cast<double>(end)) / 2.0;
      for (; pos < end; ++pos) midrank_[sorted.order[pos]] = shared;
    }
  }

  double evaluate(std::span<const std::uint8_t> z) const override {
    const auto [m, n0] = group_sizes(z, midrank_.size());
    (void)n0;
    double rank_sum = 0.0;
    for (std::size_t i = 0; i < midrank_.size(); ++i) {
      if (z[i]) rank_sum += midrank_[i];
    }
    const double null_center = static_cast<double>(m) * (static_cast<double>(midrank_.size()) + 1.0) / 2.0;
    return std::fabs(rank_sum - null_center);
  }

 private:
  std::vector<double> midrank_;
};

// Kolmogorov tail Q(lambda) = 2 * sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2),
// truncated once terms drop below 1e-16, clamped into (0, 1].
double kolmogorov_tail(double lambda) {
  if (lambda < 1e-8) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1;; ++j) {
    const double term = 2.0 * std::exp(-2.0 * static_cast<double>(j) * j * lambda * lambda);
    if (term < 1e-16) break;
    sum += sign * term;
    sign = -sign;
  }
  return std::clamp(sum, std::numeric_limits<double>::min(), 1.0);
}

class KsStatistic final : public TestStatistic {
 public:
  const std::string& name() const override {
    static const std::string n = "ks";
    return n;
  }
  std::unique_ptr<PreparedStatistic> prepare(std::span<const double> y) const override {
    return std::make_unique<KsPrepared>(y);
  }
  bool has_limit_law() const override { return true; }
  double limit_law_pvalue(double observed, int n_treated, int n_control) const override {
    if (n_treated < 1 || n_control < 1)
      throw std::invalid_argument("ks limit law: both groups must be nonempty");
    const double n1 = n_treated;
    const double n0 = n_control;
    return kolmogorov_tail(std::sqrt(n1 * n0 / (n1 + n0)) * observed);
  }
};

class MeanDiffStatistic final : public TestStatistic {
 public:
  const std::string& name() const override {
    static const std::string n = "meandiff";
    return n;
  }
  std::unique_ptr<PreparedStatistic> prepare(std::span<const double> y) const override {
    return std::make_unique<MeanDiffPrepared>(y);
  }
};

class RankStatistic final : public TestStatistic {
 public:
  const std::string& name() const override {
    static const std::string n = "rank";
    return n;
  }
  std::unique_ptr<PreparedStatistic> prepare(std::span<const double> y) const override {
    return std::make_unique<RankPrepared>(y);
  }
};

}  // namespace

Ecdf::Ecdf(std::span<const double> sample) : sorted_(sample.begin(), sample.end()) {
  if (sorted_.empty()) throw std::invalid_argument("ecdf: empty sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double Ecdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double TestStatistic::limit_law_pvalue(double, int, int) const {
  throw MethodConstraintError("statistic '" + name() +
                              "' has no registered limit law; use exact or Monte Carlo");
}

double ks_statistic(std::span<const double> y, std::span<const std::uint8_t> z) {
  return ks_test().evaluate(y, z);
}

double mean_difference(std::span<const double> y, std::span<const std::uint8_t> z) {
  return mean_difference_test().evaluate(y, z);
}

double mann_whitney(std::span<const double> y, std::span<const std::uint8_t> z) {
  return rank_sum_test().evaluate(y, z);
}

const TestStatistic& ks_test() {
  static const KsStatistic s;
  return s;
}

const TestStatistic& mean_difference_test() {
  static const MeanDiffStatistic s;
  return s;
}

const TestStatistic& rank_sum_test() {
  static const RankStatistic s;
  return s;
}

const TestStatistic& statistic_by_name(const std::string& name) {
  if (name == "ks") return ks_test();
  if (name == "meandiff") return mean_difference_test();
  if (name == "rank") return rank_sum_test();
  throw std::invalid_argument("unknown statistic '" + name + "' (expected ks, meandiff, rank)");
}

std::vector<std::string> statistic_names() {
  return {"ks", "meandiff", "rank"};
}

}  // namespace ri
