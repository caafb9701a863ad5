// Reference implementations of the randomization kernels. Single-threaded,
// written for clarity; the OpenMP versions in engine_omp.cpp must match these
// bit for bit and the test suite holds them to that.

#include <numeric>
#include <stdexcept>

#include "ri/engine.hpp"

namespace ri {

TailCount exact_tail_serial(const PreparedStatistic& stat, const Design& d, double observed,
                            bool collect) {
  const auto total = count_assignments_u64(d);
  if (!total) throw std::invalid_argument("exact_tail: assignment space exceeds 64 bits");

  TailCount out;
  out.total = *total;
  if (collect) out.values.resize(*total);

  std::vector<int> treated(d.m);
  std::iota(treated.begin(), treated.end(), 0);
  std::vector<std::uint8_t> z(d.n, 0);
  std::uint64_t idx = 0;
  do {
    for (int i : treated) z[i] = 1;
    const double t = stat.evaluate(z);
    if (t >= observed) ++out.at_or_above;
    if (collect) out.values[idx] = t;
    for (int i : treated) z[i] = 0;
    ++idx;
  } while (next_treated_set(treated, d.n));
  return out;
}

TailCount mc_tail_serial(const PreparedStatistic& stat, const Design& d, int draws,
                         std::uint64_t seed, double observed, bool collect) {
  if (draws < 1) throw std::invalid_argument("mc_tail: draws must be >= 1");

  TailCount out;
  out.total = static_cast<std::uint64_t>(draws);
  if (collect) out.values.resize(out.total);

  for (int j = 0; j < draws; ++j) {
    SplitMix64 gen(derive_seed(seed, streams::kAssignmentDraw, static_cast<std::uint64_t>(j)));
    const Assignment a = sample_one(d, gen);
    const double t = stat.evaluate(a.z);
    if (t >= observed) ++out.at_or_above;
    if (collect) out.values[j] = t;
  }
  return out;
}

TailCount assignments_tail_serial(const PreparedStatistic& stat,
                                  std::span<const Assignment> assignments, double observed,
                                  bool collect) {
  TailCount out;
  out.total = assignments.size();
  if (collect) out.values.resize(out.total);

  for (std::size_t j = 0; j < assignments.size(); ++j) {
    const double t = stat.evaluate(assignments[j].z);
    if (t >= observed) ++out.at_or_above;
    if (collect) out.values[j] = t;
  }
  return out;
}

TailCount exact_tail(const PreparedStatistic& stat, const Design& d, double observed,
                     ExecPolicy policy, bool collect) {
  return policy == ExecPolicy::Serial ? exact_tail_serial(stat, d, observed, collect)
                                      : exact_tail_parallel(stat, d, observed, collect);
}

TailCount mc_tail(const PreparedStatistic& stat, const Design& d, int draws, std::uint64_t seed,
                  double observed, ExecPolicy policy, bool collect) {
  return policy == ExecPolicy::Serial ? mc_tail_serial(stat, d, draws, seed, observed, collect)
                                      : mc_tail_parallel(stat, d, draws, seed, observed, collect);
}

TailCount assignments_tail(const PreparedStatistic& stat, std::span<const Assignment> assignments,
                           double observed, ExecPolicy policy, bool collect) {
  return policy == ExecPolicy::Serial
             ? assignments_tail_serial(stat, assignments, observed, collect)
             : assignments_tail_parallel(stat, assignments, observed, collect);
}

}  // namespace ri
