#include "paley/parity.hpp"

#include <bit>
#include <string>

#include "paley/error.hpp"
#include "paley/rng.hpp"

namespace paley {

SimpleGraph SimpleGraph::from_edges(
    std::size_t n, std::span<const std::pair<uint32_t, uint32_t>> edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::from_paley(const PaleyStructure& p) {
  if (p.kind() != PaleyKind::graph)
    fail(ErrorKind::DomainError, "Paley tournament is not an undirected graph");
  SimpleGraph g(p.order());
  g.adj_ = p.adjacency();
  return g;
}

SimpleGraph SimpleGraph::random(std::size_t n, uint64_t num, uint64_t den,
                                uint64_t seed, uint64_t stream) {
  if (num > den || den == 0)
    fail(ErrorKind::DomainError, "edge probability must be in [0, 1]");
  CounterRng rng(seed, stream);
  SimpleGraph g(n);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(num, den)) g.add_edge(u, v);
  return g;
}

void SimpleGraph::add_edge(uint32_t u, uint32_t v) {
  if (u == v) fail(ErrorKind::DomainError, "loops are not allowed");
  adj_.set(u, v);
  adj_.set(v, u);
}

uint32_t SimpleGraph::degree(uint32_t v) const {
  auto row = adj_.row_words(v);
  uint32_t d = 0;
  for (uint64_t w : row) d += uint32_t(std::popcount(w));
  return d;
}

SimpleGraph SimpleGraph::complement() const {
  const std::size_t n = order();
  SimpleGraph c(n);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (!adj_.get(u, v)) c.add_edge(u, v);
  return c;
}

SimpleGraph SimpleGraph::induced(const BitVec& s) const {
  auto verts = s.ones();
  SimpleGraph g(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (adj_.get(verts[i], verts[j])) g.add_edge(uint32_t(i), uint32_t(j));
  return g;
}

bool SimpleGraph::is_even_subset(const BitVec& s) const {
  auto sw = s.words();
  for (uint32_t v : s.ones()) {
    auto row = adj_.row_words(v);
    std::size_t d = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
      d += std::popcount(row[i] & sw[i]);
    if (d & 1) return false;
  }
  return true;
}

OddExtension odd_extension(const SimpleGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::optional<uint32_t>> pendant(n);
  uint32_t next = uint32_t(n);
  for (uint32_t v = 0; v < n; ++v)
    if (g.degree(v) % 2 == 0) pendant[v] = next++;
  SimpleGraph ext(next);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) ext.add_edge(u, v);
  for (uint32_t v = 0; v < n; ++v)
    if (pendant[v]) ext.add_edge(v, *pendant[v]);
  return OddExtension{std::move(ext), n, std::move(pendant)};
}

AffineSolutionSpace odd_parity_covers(const SimpleGraph& g) {
  OddExtension ext = odd_extension(g);
  const std::size_t m = ext.graph.order();
  Gf2Matrix system = ext.graph.adjacency();
  for (std::size_t v = 0; v < m; ++v) system.set(v, v, !system.get(v, v));
  BitVec ones(m);
  for (std::size_t v = 0; v < m; ++v) ones.set(v);
  AffineSolutionSpace space = solve_affine(system, ones);
  // Gallai's theorem guarantees a cover exists.
  if (!space.consistent())
    fail(ErrorKind::DomainError, "cover system unexpectedly inconsistent");
  return space;
}

namespace {

bool is_cover(const BitVec& cover, const SimpleGraph& ext) {
  const std::size_t m = ext.order();
  if (cover.size() != m) return false;
  auto cw = cover.words();
  for (std::size_t v = 0; v < m; ++v) {
    auto row = ext.adjacency().row_words(v);
    std::size_t d = cover.get(v) ? 1 : 0;  // closed neighborhood
    for (std::size_t i = 0; i < row.size(); ++i)
      d += std::popcount(row[i] & cw[i]);
    if (d % 2 == 0) return false;
  }
  return true;
}

}  // namespace

EvenEvenPartition cover_to_partition(const BitVec& cover, const SimpleGraph& g) {
  OddExtension ext = odd_extension(g);
  if (!is_cover(cover, ext.graph))
    fail(ErrorKind::InvalidCover, "not an odd-parity cover of the odd-extension");
  const std::size_t n = g.order();
  EvenEvenPartition part{BitVec(n), BitVec(n)};
  for (uint32_t v = 0; v < n; ++v)
    (cover.get(v) ? part.part1 : part.part2).set(v);
  return part;
}

BitVec partition_to_cover(const BitVec& part1, const SimpleGraph& g) {
  const std::size_t n = g.order();
  BitVec rest(n);
  for (uint32_t v = 0; v < n; ++v)
    if (!part1.get(v)) rest.set(v);
  if (!g.is_even_subset(part1) || !g.is_even_subset(rest))
    fail(ErrorKind::NotCoEven, "parts do not both induce even subgraphs");
  OddExtension ext = odd_extension(g);
  BitVec cover(ext.graph.order());
  for (uint32_t v = 0; v < n; ++v) {
    if (part1.get(v)) cover.set(v);
    else if (ext.pendant[v]) cover.set(*ext.pendant[v]);
  }
  return cover;
}

EvenEvenPartition gallai_partition(const SimpleGraph& g) {
  AffineSolutionSpace space = odd_parity_covers(g);
  return cover_to_partition(*space.particular, g);
}

CoevenCount count_coeven(const SimpleGraph& g) {
  AffineSolutionSpace space = odd_parity_covers(g);
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), 2, space.dimension());
  return CoevenCount{std::move(count), space.dimension()};
}

uint64_t brute_force_coeven(const SimpleGraph& g) {
  const std::size_t n = g.order();
  if (n > 24)
    fail(ErrorKind::TooLarge, "2^n scan capped at n = 24, got n = " +
                                  std::to_string(n));
  // Single-word rows; par holds the degree parity of every vertex with
  // respect to the current subset, updated one vertex flip at a time
  // along the Gray walk.
  std::vector<uint32_t> rows(n, 0);
  uint32_t deg_parity = 0;
  for (uint32_t v = 0; v < n; ++v) {
    auto w = g.adjacency().row_words(v);
    rows[v] = uint32_t(w[0] & 0xffffffffu);
    if (g.degree(v) & 1) deg_parity |= uint32_t(1) << v;
  }
  const uint32_t full = n == 32 ? 0xffffffffu : (uint32_t(1) << n) - 1;
  uint32_t subset = 0, par = 0;
  uint64_t count = 0;
  const uint64_t end = uint64_t(1) << n;
  for (uint64_t i = 0;; ++i) {
    // G[S] even iff no member has odd parity; G[V\S] even iff no
    // non-member has odd parity w.r.t. the complement, whose parity
    // vector is par XOR deg_parity.
    if ((par & subset) == 0 && ((par ^ deg_parity) & ~subset & full) == 0)
      ++count;
    if (i + 1 == end) break;
    const uint32_t v = uint32_t(std::countr_zero(i + 1));
    subset ^= uint32_t(1) << v;
    par ^= rows[v];
  }
  return count;
}

}  // namespace paley
