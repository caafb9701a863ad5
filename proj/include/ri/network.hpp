#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ri {

// Undirected simple graph on n units. Edges are stored as canonical (u < v)
// pairs plus a CSR adjacency built at construction; values are immutable
// afterwards and safe to share across threads.
class Network {
 public:
  Network(int n, std::vector<std::pair<int, int>> edges);

  int size() const { return n_; }
  std::span<const std::pair<int, int>> edges() const { return edges_; }
  std::span<const int> neighbors(int u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  int degree(int u) const { return offsets_[u + 1] - offsets_[u]; }
  std::vector<int> degrees() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> offsets_;
  std::vector<int> adjacency_;
};

struct UnitPositions {
  std::vector<std::array<double, 2>> coords;
  std::uint64_t seed;

  int size() const { return static_cast<int>(coords.size()); }
};

// n points uniform in the unit square. Point i depends only on (seed, i), so
// generate_positions(n, s) is a prefix of generate_positions(n', s) for n' > n:
// sweeps over sample size reuse the same units.
UnitPositions generate_positions(int n, std::uint64_t seed);

// Greedy closest-pairs graph: add the m_edges shortest pairs, distances
// compared squared, ties broken by lexicographic (u, v).
Network generate_network(const UnitPositions& positions, int m_edges);

// Entry i = number of neighbors j of i with z_j = 1. A unit's own z_i never
// counts; there are no self-loops.
std::vector<int> treated_neighbor_counts(const Network& net, std::span<const std::uint8_t> z);

}  // namespace ri
