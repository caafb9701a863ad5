#include "ri/assignment.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ri/errors.hpp"

namespace ri {

void Design::throw_invalid() {
  throw std::invalid_argument("design: need 0 <= m <= n");
}

int Assignment::treated_count() const {
  return static_cast<int>(std::count(z.begin(), z.end(), std::uint8_t{1}));
}

namespace {

mpz_class binomial(const Design& d) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(d.n), static_cast<unsigned long>(d.m));
  return r;
}

Assignment from_treated_set(const std::vector<int>& treated, int n) {
  Assignment a;
  a.z.assign(n, 0);
  for (int i : treated) a.z[i] = 1;
  return a;
}

std::string format_scientific(const std::string& mantissa, int exponent) {
  std::string out;
  out += mantissa[0];
  if (mantissa.size() > 1) {
    out += '.';
    out += mantissa.substr(1);
  }
  out += 'e';
  out += std::to_string(exponent);
  return out;
}

}  // namespace

std::string count_assignments(const Design& d) {
  return binomial(d).get_str();
}

std::optional<std::uint64_t> count_assignments_u64(const Design& d) {
  mpz_class r = binomial(d);
  if (mpz_sizeinbase(r.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  std::size_t words = 0;
  mpz_export(&out, &words, -1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

std::string scientific_form(const std::string& decimal, int significant_digits) {
  if (decimal.empty() || decimal == "0") return "0";
  int exponent = static_cast<int>(decimal.size()) - 1;
  if (static_cast<int>(decimal.size()) <= significant_digits) {
    return format_scientific(decimal, exponent);
  }
  // Round half up on the first dropped digit.
  long long kept = std::stoll(decimal.substr(0, static_cast<std::size_t>(significant_digits) + 1));
  kept = (kept + 5) / 10;
  std::string mantissa = std::to_string(kept);
  if (static_cast<int>(mantissa.size()) > significant_digits) {
    // Carry out of the top digit (e.g. 999.6 -> 1000).
    mantissa = mantissa.substr(0, significant_digits);
    ++exponent;
  }
  return format_scientific(mantissa, exponent);
}

std::vector<Assignment> enumerate_assignments(const Design& d, std::uint64_t cap) {
  const auto total = count_assignments_u64(d);
  if (!total || *total > cap) {
    throw MethodConstraintError("assignment space C(" + std::to_string(d.n) + "," +
                                std::to_string(d.m) + ") = " +
                                scientific_form(count_assignments(d)) + " exceeds cap " +
                                std::to_string(cap) + "; use Monte Carlo sampling instead");
  }
  std::vector<Assignment> out;
  out.reserve(*total);
  std::vector<int> treated(d.m);
  std::iota(treated.begin(), treated.end(), 0);
  do {
    out.push_back(from_treated_set(treated, d.n));
  } while (next_treated_set(treated, d.n));
  return out;
}

bool next_treated_set(std::vector<int>& treated, int n) {
  const int m = static_cast<int>(treated.size());
  int i = m - 1;
  while (i >= 0 && treated[i] == n - m + i) --i;
  if (i < 0) return false;
  ++treated[i];
  for (int j = i + 1; j < m; ++j) treated[j] = treated[j - 1] + 1;
  return true;
}

Assignment unrank_assignment(const Design& d, std::uint64_t index) {
  // Lexicographic unranking: at each position choose the smallest admissible
  // unit, skipping C(remaining-1, slots-1) ranks per rejected unit.
  std::vector<int> treated(d.m);
  std::uint64_t rank = index;
  int unit = 0;
  for (int slot = 0; slot < d.m; ++slot) {
    for (;;) {
      const auto below = count_assignments_u64(Design(d.n - unit - 1, d.m - slot - 1));
      if (!below) throw std::invalid_argument("unrank_assignment: space too large");
      if (rank < *below) break;
      rank -= *below;
      ++unit;
      if (unit >= d.n) throw std::invalid_argument("unrank_assignment: index out of range");
    }
    treated[slot] = unit++;
  }
  return from_treated_set(treated, d.n);
}

Assignment sample_one(const Design& d, SplitMix64& gen) {
  std::vector<int> idx(d.n);
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < d.m; ++i) {
    const auto j = i + static_cast<int>(gen.below(static_cast<std::uint64_t>(d.n - i)));
    std::swap(idx[i], idx[j]);
  }
  Assignment a;
  a.z.assign(d.n, 0);
  for (int i = 0; i < d.m; ++i) a.z[idx[i]] = 1;
  return a;
}

std::vector<Assignment> sample_assignments(const Design& d, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("sample_assignments: k must be >= 1");
  std::vector<Assignment> out(k);
  for (int j = 0; j < k; ++j) {
    SplitMix64 gen(derive_seed(seed, streams::kAssignmentDraw, static_cast<std::uint64_t>(j)));
    out[j] = sample_one(d, gen);
  }
  return out;
}

}  // namespace ri
