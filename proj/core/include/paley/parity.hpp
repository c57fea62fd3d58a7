#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "paley/gf2.hpp"
#include "paley/paley_graph.hpp"

namespace paley {

// Undirected simple graph (symmetric adjacency, zero diagonal).
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n) : adj_(n, n) {}
  static SimpleGraph from_edges(std::size_t n,
                                std::span<const std::pair<uint32_t, uint32_t>> edges);
  // Requires kind == graph.
  static SimpleGraph from_paley(const PaleyStructure& p);
  // G(n, num/den) with counter-based randomness (deterministic in seed).
  static SimpleGraph random(std::size_t n, uint64_t num, uint64_t den,
                            uint64_t seed, uint64_t stream = 0);

  std::size_t order() const { return adj_.rows(); }
  bool adjacent(uint32_t u, uint32_t v) const { return adj_.get(u, v); }
  void add_edge(uint32_t u, uint32_t v);
  uint32_t degree(uint32_t v) const;
  const Gf2Matrix& adjacency() const { return adj_; }

  SimpleGraph complement() const;
  // Subgraph induced on s, relabeled to 0..|s|-1 in index order.
  SimpleGraph induced(const BitVec& s) const;
  // True iff every degree of G[s] is even.
  bool is_even_subset(const BitVec& s) const;

 private:
  Gf2Matrix adj_;
};

// G with a pendant neighbor v' attached to every even-degree vertex v.
// Pendants are indexed n + (rank of v among even-degree vertices), so a
// host with all degrees even gets the block layout [[A, I], [I, 0]].
struct OddExtension {
  SimpleGraph graph;
  std::size_t host_order;
  // pendant[v] = index of v' in the extension, or nullopt if deg(v) odd.
  std::vector<std::optional<uint32_t>> pendant;
};

OddExtension odd_extension(const SimpleGraph& g);

// Solution space of (A_ext + I) X = 1 over GF(2), where A_ext is the
// odd-extension adjacency. Always consistent: a solution is an
// odd-parity cover, a set Q with |N[v] AND Q| odd for every vertex of
// the extension.
AffineSolutionSpace odd_parity_covers(const SimpleGraph& g);

struct EvenEvenPartition {
  BitVec part1, part2;  // disjoint, union = V(G), both induce even subgraphs
};

// Cover of the odd-extension -> (Q AND V(G), rest). InvalidCover if the
// parity condition fails anywhere.
EvenEvenPartition cover_to_partition(const BitVec& cover, const SimpleGraph& g);

// Even-even part V1 -> the cover V1 + {v' : v even-degree, v not in V1}.
// NotCoEven unless both parts induce even subgraphs.
BitVec partition_to_cover(const BitVec& part1, const SimpleGraph& g);

// One valid even-even partition (the particular solution of the cover
// system, kernel coefficients all zero).
EvenEvenPartition gallai_partition(const SimpleGraph& g);

struct CoevenCount {
  mpz_class count;        // 2^dimension, exact
  std::size_t dimension;  // kernel dimension of (A_ext + I)
};

// Number of co-even induced subgraphs (= subsets V1 whose partition
// (V1, V \ V1) is even-even), via the cover-space kernel dimension.
CoevenCount count_coeven(const SimpleGraph& g);

// Independent oracle: direct 2^n scan. TooLarge for n > 24.
uint64_t brute_force_coeven(const SimpleGraph& g);

}  // namespace paley
