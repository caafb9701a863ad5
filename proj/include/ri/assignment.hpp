#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ri/rng.hpp"

namespace ri {

// Complete randomization: exactly m of n units treated.
struct Design {
  int n;
  int m;

  Design(int n_, int m_) : n(n_), m(m_) {
    if (n < 0 || m < 0 || m > n) throw_invalid();
  }

 private:
  [[noreturn]] static void throw_invalid();
};

struct Assignment {
  std::vector<std::uint8_t> z;

  int size() const { return static_cast<int>(z.size()); }
  int treated_count() const;
};

// |Omega| = C(n, m), exact, as a decimal string (the value overflows every
// built-in integer well before the paper's n = 256).
std::string count_assignments(const Design& d);

// C(n, m) when it fits in 64 bits, nullopt otherwise. Cap checks and
// enumeration bookkeeping live in this range.
std::optional<std::uint64_t> count_assignments_u64(const Design& d);

// "123456..." -> "1.23e20"; used to report |Omega| sizes.
std::string scientific_form(const std::string& decimal, int significant_digits = 3);

// All C(n, m) assignments, each exactly once, ordered lexicographically by
// treated-index set. Throws MethodConstraintError when C(n, m) > cap,
// recommending Monte Carlo instead.
std::vector<Assignment> enumerate_assignments(const Design& d, std::uint64_t cap = 10'000'000);

// The index-th assignment in that lexicographic order (combinatorial number
// system unranking). Lets parallel workers jump into the enumeration.
Assignment unrank_assignment(const Design& d, std::uint64_t index);

// Advance treated-index set to its lexicographic successor in place.
// Returns false after the last combination.
bool next_treated_set(std::vector<int>& treated, int n);

// One uniform draw from Omega via a partial Fisher-Yates shuffle, O(n).
Assignment sample_one(const Design& d, SplitMix64& gen);

// k i.i.d. uniform draws (with replacement). Draw j depends only on
// (seed, j): evaluation order and thread count never change the sequence.
std::vector<Assignment> sample_assignments(const Design& d, int k, std::uint64_t seed);

}  // namespace ri
