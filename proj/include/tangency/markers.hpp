#pragma once

// Markers: one per shaded component of {witness polynomial <= 0}.
//
// A marker is the lowest point of its component. The component of marker
// k_p is the block Upsilon_p, a maximal run of consecutive support points
// on which the witness polynomial stays <= 0; the blocks coincide with
// the strings and atoms of decompose(). Elementary operations move
// markers block-wise: merging inside a block or inserting a 2 keeps every
// marker at the lowest point of its (re-indexed) block, and merging the
// top of block p with the bottom of block p+1 fuses the two blocks, so a
// marker of block p+1 drops to the bottom of block p.

#include <map>
#include <vector>

#include "tangency/composition.hpp"
#include "tangency/poset.hpp"

namespace tangency {

struct MarkedComposition {
  Composition omega;
  int marker = 0;  // 1-based support position

  friend bool operator==(const MarkedComposition&, const MarkedComposition&) = default;
  friend auto operator<=>(const MarkedComposition& a, const MarkedComposition& b) {
    if (auto c = a.omega <=> b.omega; c != 0) return c;
    return a.marker <=> b.marker;
  }
};

/// Validating constructor; Error(InvalidMarker) if marker is not in Upsilon(omega).
MarkedComposition make_marked(Composition omega, int marker);

/// Upsilon(w), ascending. Requires even norm.
std::vector<int> marker_set(const Composition& w);
bool is_marker(const Composition& w, int k);

struct MarkerBlock {
  int marker = 0;
  std::vector<int> members;  // consecutive positions, members.front() == marker

  friend bool operator==(const MarkerBlock&, const MarkerBlock&) = default;
};

struct BlockStructure {
  std::vector<MarkerBlock> blocks;

  /// 0-based index of the block holding position `pos`.
  int block_of(int pos) const;
};

BlockStructure blocks(const Composition& w);

MarkedComposition marked_merge(const MarkedComposition& m, int j);
MarkedComposition marked_insert(const MarkedComposition& m, int j);

/// Transport the marker of `big` down to `target` along every shortest
/// chain of elementary operations. Error(Order) if big.omega is not >=
/// target, Error(Ambiguous) if two chains disagree.
int transport(const MarkedComposition& big, const Composition& target);

/// Every marker reachable from `big` at `target` over all chains. A
/// single element when transport is path independent.
std::vector<int> transport_all(const MarkedComposition& big, const Composition& target);

/// Transport restricted to the chains whose composed support map is
/// alpha. Error(Domain) if alpha is not a morphism from big.omega,
/// Error(Ambiguous) if those chains still disagree.
int transport_along(const MarkedComposition& big, const Morphism& alpha);

/// k ~> k': big.omega >= small.omega and the marker of big lands on small.marker.
bool leads_to(const MarkedComposition& big, const MarkedComposition& small);

/// The string or atom holding the marker, re-indexed from 1.
Composition xi_at_marker(const MarkedComposition& m);

}  // namespace tangency
