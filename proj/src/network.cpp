#include "ri/network.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ri/rng.hpp"

namespace ri {

Network::Network(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("network: negative unit count");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("network: self-loop at unit " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("network: endpoint out of range: (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("network: duplicate edge");
  edges_ = std::move(edges);

  offsets_.assign(n_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(edges_.size() * 2);
  std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }
}

std::vector<int> Network::degrees() const {
  std::vector<int> d(n_);
  for (int i = 0; i < n_; ++i) d[i] = degree(i);
  return d;
}

UnitPositions generate_positions(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_positions: n must be >= 1");
  UnitPositions pos;
  pos.seed = seed;
  pos.coords.resize(n);
  for (int i = 0; i < n; ++i) {
    SplitMix64 g(derive_seed(seed, streams::kPositions, static_cast<std::uint64_t>(i)));
    pos.coords[i] = {g.next_double(), g.next_double()};
  }
  return pos;
}

Network generate_network(const UnitPositions& positions, int m_edges) {
  const int n = positions.size();
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m_edges < 0 || m_edges > max_edges)
    throw std::invalid_argument("generate_network: m_edges exceeds n(n-1)/2");

  struct Candidate {
    double d2;
    int u, v;
  };
  std::vector<Candidate> pairs;
  pairs.reserve(static_cast<std::size_t>(max_edges));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double dx = positions.coords[u][0] - positions.coords[v][0];
      const double dy = positions.coords[u][1] - positions.coords[v][1];
      pairs.push_back({dx * dx + dy * dy, u, v});
    }
  }
  const auto closer = [](const Candidate& a, const Candidate& b) {
    if (a.d2 != b.d2) return a.d2 < b.d2;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  };
  std::partial_sort(pairs.begin(), pairs.begin() + m_edges, pairs.end(), closer);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(m_edges);
  for (int k = 0; k < m_edges; ++k) edges.emplace_back(pairs[k].u, pairs[k].v);
  return Network(n, std::move(edges));
}

std::vector<int> treated_neighbor_counts(const Network& net, std::span<const std::uint8_t> z) {
  if (static_cast<int>(z.size()) != net.size())
    throw std::invalid_argument("treated_neighbor_counts: assignment length mismatch");
  std::vector<int> counts(net.size(), 0);
  for (int i = 0; i < net.size(); ++i) {
    int c = 0;
    for (int j : net.neighbors(i)) c += z[j];
    counts[i] = c;
  }
  return counts;
}

}  // namespace ri
