#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ri/assignment.hpp"
#include "ri/teststats.hpp"

namespace ri {

enum class ExecPolicy { Serial, Parallel };

// Outcome of scoring a reference set of assignments against an observed
// statistic value.
struct TailCount {
  std::uint64_t total = 0;        // reference assignments scored
  std::uint64_t at_or_above = 0;  // scores >= observed
  std::vector<double> values;     // per-assignment scores, empty unless collected
};

// Exact kernel: score every assignment in Omega, in lexicographic order.
// The caller is responsible for checking C(n, m) against its cap first.
//
// The serial version is the reference implementation; the parallel version
// splits the enumeration by unranking block starts and must return identical
// results for any thread count (integer tail counts commute, and collected
// values are written by enumeration index).
TailCount exact_tail_serial(const PreparedStatistic& stat, const Design& d, double observed,
                            bool collect = false);
TailCount exact_tail_parallel(const PreparedStatistic& stat, const Design& d, double observed,
                              bool collect = false);
TailCount exact_tail(const PreparedStatistic& stat, const Design& d, double observed,
                     ExecPolicy policy, bool collect = false);

// Monte Carlo kernel: score k i.i.d. uniform draws from Omega. Draw j is
// derived from (seed, j) alone, so serial and parallel runs see the same
// draws and a fixed seed reproduces the same draws across calls (this is
// what lets a p-value surface reuse one draw set across grid cells).
TailCount mc_tail_serial(const PreparedStatistic& stat, const Design& d, int draws,
                         std::uint64_t seed, double observed, bool collect = false);
TailCount mc_tail_parallel(const PreparedStatistic& stat, const Design& d, int draws,
                           std::uint64_t seed, double observed, bool collect = false);
TailCount mc_tail(const PreparedStatistic& stat, const Design& d, int draws, std::uint64_t seed,
                  double observed, ExecPolicy policy, bool collect = false);

// Score an already-materialized reference set. mc_tail(d, k, seed, ...) and
// assignments_tail(sample_assignments(d, k, seed), ...) count identically;
// materializing pays off when many adjusted outcome vectors are scored
// against the same draws.
TailCount assignments_tail_serial(const PreparedStatistic& stat,
                                  std::span<const Assignment> assignments, double observed,
                                  bool collect = false);
TailCount assignments_tail_parallel(const PreparedStatistic& stat,
                                    std::span<const Assignment> assignments, double observed,
                                    bool collect = false);
TailCount assignments_tail(const PreparedStatistic& stat, std::span<const Assignment> assignments,
                           double observed, ExecPolicy policy, bool collect = false);

}  // namespace ri
