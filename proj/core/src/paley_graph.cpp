#include "paley/paley_graph.hpp"

#include <bit>
#include <ostream>

#include "paley/error.hpp"

namespace paley {

const char* to_string(PaleyKind k) {
  return k == PaleyKind::graph ? "graph" : "tournament";
}

const char* to_string(ParityClass c) {
  switch (c) {
    case ParityClass::even: return "even";
    case ParityClass::odd: return "odd";
    default: return "mixed";
  }
}

PaleyStructure::PaleyStructure(FiniteField field)
    : field_(std::move(field)),
      kind_(field_.q() % 4 == 1 ? PaleyKind::graph : PaleyKind::tournament),
      adj_(field_.q(), field_.q()) {
  const uint32_t q = field_.q();
  for (uint32_t x = 0; x < q; ++x)
    for (uint32_t y = 0; y < q; ++y)
      if (x != y && field_.eta(field_.sub(x, y)) == 1) adj_.set(x, y);
}

ParityClass PaleyStructure::classify_induced(const BitVec& s) const {
  bool any_even = false, any_odd = false;
  for (uint32_t v : s.ones()) {
    // Degree (graph) or out-degree (tournament) of v inside s.
    std::size_t d = 0;
    auto row = adj_.row_words(v);
    auto sw = s.words();
    for (std::size_t i = 0; i < row.size(); ++i)
      d += std::popcount(row[i] & sw[i]);
    (d & 1 ? any_odd : any_even) = true;
    if (any_even && any_odd) return ParityClass::mixed;
  }
  if (any_odd) return ParityClass::odd;
  return ParityClass::even;  // includes the empty set
}

uint64_t PaleyStructure::cut_arc_count(const BitVec& u, const BitVec& w) const {
  // Ordered incidences u -> w.
  uint64_t ordered = 0;
  for (uint32_t x : u.ones()) {
    auto row = adj_.row_words(x);
    auto ww = w.words();
    for (std::size_t i = 0; i < row.size(); ++i)
      ordered += std::popcount(row[i] & ww[i]);
  }
  if (kind_ == PaleyKind::tournament) return ordered;
  // Undirected: each edge inside the intersection was counted twice.
  BitVec both = u;
  both &= w;
  uint64_t inner = 0;
  for (uint32_t x : both.ones()) {
    auto row = adj_.row_words(x);
    auto bw = both.words();
    for (std::size_t i = 0; i < row.size(); ++i)
      inner += std::popcount(row[i] & bw[i]);
  }
  return ordered - inner / 2;
}

void PaleyStructure::write_edge_list(std::ostream& os) const {
  const uint32_t q = order();
  for (uint32_t x = 0; x < q; ++x)
    for (uint32_t y = 0; y < q; ++y)
      if (adj_.get(x, y) && (kind_ == PaleyKind::tournament || x < y))
        os << x << ' ' << y << '\n';
}

}  // namespace paley
