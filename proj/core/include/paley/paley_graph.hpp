#pragma once

#include <cstdint>
#include <iosfwd>

#include "paley/ffield.hpp"
#include "paley/gf2.hpp"

namespace paley {

enum class PaleyKind { graph, tournament };
enum class ParityClass { even, odd, mixed };

const char* to_string(PaleyKind k);
const char* to_string(ParityClass c);

// Adjacency over F_q: bit (x, y) is set iff x - y is a nonzero square.
// q = 1 mod 4 gives the (undirected, symmetric) Paley graph; q = 3 mod 4
// gives the Paley tournament, where exactly one of (x, y), (y, x) is set.
// Vertices are canonical field element indices. Immutable once built.
class PaleyStructure {
 public:
  explicit PaleyStructure(FiniteField field);

  const FiniteField& field() const { return field_; }
  PaleyKind kind() const { return kind_; }
  uint32_t order() const { return field_.q(); }
  const Gf2Matrix& adjacency() const { return adj_; }

  Gf2Matrix adjacency_gf2() const { return adj_; }

  // Parity class of the sub(di)graph induced on s, by degrees (graph)
  // or out-degrees (tournament). The empty set is even.
  ParityClass classify_induced(const BitVec& s) const;

  // Graph: number of edges {u, w} with u in U, w in W (each qualifying
  // edge counted once). Tournament: number of arcs u -> w, u in U, w in W.
  uint64_t cut_arc_count(const BitVec& u, const BitVec& w) const;

  // One "u v" pair per line; graphs list u < v once, tournaments list
  // every arc as an ordered pair.
  void write_edge_list(std::ostream& os) const;

 private:
  FiniteField field_;
  PaleyKind kind_;
  Gf2Matrix adj_;
};

}  // namespace paley
