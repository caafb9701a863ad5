// OpenMP randomization kernels. Tail counts are integer reductions and every
// unit of work is keyed by its enumeration index or draw index, so results
// are identical to the serial reference for any thread count or schedule.

#include <algorithm>
#include <stdexcept>

#include "ri/engine.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ri {

namespace {

std::vector<int> treated_indices(const Assignment& a) {
  std::vector<int> treated;
  treated.reserve(a.treated_count());
  for (int i = 0; i < a.size(); ++i) {
    if (a.z[i]) treated.push_back(i);
  }
  return treated;
}

}  // namespace

TailCount exact_tail_parallel(const PreparedStatistic& stat, const Design& d, double observed,
                              bool collect) {
  const auto total_opt = count_assignments_u64(d);
  if (!total_opt) throw std::invalid_argument("exact_tail: assignment space exceeds 64 bits");
  const std::uint64_t total = *total_opt;

  TailCount out;
  out.total = total;
  if (collect) out.values.resize(total);
  double* values = collect ? out.values.data() : nullptr;

  std::uint64_t at_or_above = 0;

#pragma omp parallel reduction(+ : at_or_above)
  {
#ifdef _OPENMP
    const int worker = omp_get_thread_num();
    const int workers = omp_get_num_threads();
#else
    const int worker = 0;
    const int workers = 1;
#endif
    const std::uint64_t chunk = (total + workers - 1) / workers;
    const std::uint64_t begin = std::min(static_cast<std::uint64_t>(worker) * chunk, total);
    const std::uint64_t end = std::min(begin + chunk, total);

    if (begin < end) {
      // Jump to the block start, then walk the enumeration order.
      std::vector<int> treated = treated_indices(unrank_assignment(d, begin));
      std::vector<std::uint8_t> z(d.n, 0);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        for (int i : treated) z[i] = 1;
        const double t = stat.evaluate(z);
        if (t >= observed) ++at_or_above;
        if (values) values[idx] = t;
        for (int i : treated) z[i] = 0;
        if (idx + 1 < end) next_treated_set(treated, d.n);
      }
    }
  }

  out.at_or_above = at_or_above;
  return out;
}

TailCount assignments_tail_parallel(const PreparedStatistic& stat,
                                    std::span<const Assignment> assignments, double observed,
                                    bool collect) {
  TailCount out;
  out.total = assignments.size();
  if (collect) out.values.resize(out.total);
  double* values = collect ? out.values.data() : nullptr;

  std::uint64_t at_or_above = 0;
  const std::int64_t k = static_cast<std::int64_t>(assignments.size());

#pragma omp parallel for reduction(+ : at_or_above) schedule(static)
  for (std::int64_t j = 0; j < k; ++j) {
    const double t = stat.evaluate(assignments[j].z);
    if (t >= observed) ++at_or_above;
    if (values) values[j] = t;
  }

  out.at_or_above = at_or_above;
  return out;
}

TailCount mc_tail_parallel(const PreparedStatistic& stat, const Design& d, int draws,
                           std::uint64_t seed, double observed, bool collect) {
  if (draws < 1) throw std::invalid_argument("mc_tail: draws must be >= 1");

  TailCount out;
  out.total = static_cast<std::uint64_t>(draws);
  if (collect) out.values.resize(out.total);
  double* values = collect ? out.values.data() : nullptr;

  std::uint64_t at_or_above = 0;

#pragma omp parallel for reduction(+ : at_or_above) schedule(static)
  for (int j = 0; j < draws; ++j) {
    SplitMix64 gen(derive_seed(seed, streams::kAssignmentDraw, static_cast<std::uint64_t>(j)));
    const Assignment a = sample_one(d, gen);
    const double t = stat.evaluate(a.z);
    if (t >= observed) ++at_or_above;
    if (values) values[j] = t;
  }

  out.at_or_above = at_or_above;
  return out;
}

}  // namespace ri
