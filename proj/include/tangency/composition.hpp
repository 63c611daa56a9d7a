#pragma once

// Compositions: finite ordered lists of positive multiplicities, the
// combinatorial type of a real divisor read along an oriented line.
//
// Positions are 1-based throughout the public API (position 1 is the
// lowest point of the support). Gap i sits between positions i and i+1;
// gap 0 lies below the support and gap q above it.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tangency/error.hpp"

namespace tangency {

class Composition {
 public:
  Composition() = default;
  /// Throws Error(Reject) unless every entry is >= 1.
  explicit Composition(std::vector<int> entries);
  Composition(std::initializer_list<int> entries) : Composition(std::vector<int>(entries)) {}

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }
  /// Value at 1-based position `pos`.
  int at(int pos) const;
  const std::vector<int>& entries() const noexcept { return entries_; }
  std::span<const int> view() const noexcept { return entries_; }

  /// |w| = sum of entries.
  int norm() const noexcept;
  /// |w|' = sum of (entry - 1).
  int reduced_norm() const noexcept;
  /// mu(w) = sum of floor(entry / 2).
  int virtual_multiplicity() const noexcept;
  int count_of(int value) const noexcept;

  /// Entries in positions [first, last], re-indexed from 1.
  Composition slice(int first, int last) const;
  Composition reversed() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  /// Canonical order: shorter first, then entries lexicographically.
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

 private:
  std::vector<int> entries_;
};

Composition make_composition(std::vector<int> entries);

/// Text form: "1,4,1", or "e" for the empty composition.
std::string to_string(const Composition& w);
Composition parse_composition(std::string_view text);

/// M_j: fuse positions j and j+1. Requires 1 <= j <= q-1.
Composition merge(const Composition& w, int j);
/// I_j: insert a 2 right after position j (j = 0 prepends). Requires 0 <= j <= q.
Composition insert(const Composition& w, int j);

/// Every single merge or insert of `w` whose norm stays <= norm_cap;
/// sorted, deduplicated.
std::vector<Composition> successors(const Composition& w, int norm_cap);

/// One result per inverse elementary operation on `w`: each split of an
/// entry into an ordered pair, and each deletion of an entry equal to 2.
/// Coincident results (adjacent 2s) are listed once per operation, so the
/// size is always |w|' + #{i : w(i) = 2}. Sorted.
std::vector<Composition> predecessors_one_step(const Composition& w);

/// Membership in Omega-bullet: a string (q >= 2, odd ends, even interior)
/// or an atom (one even entry).
bool is_bullet(const Composition& w);

/// Sign of prod (u - i)^w(i) at u = i + 0.5, for gap 0 <= i <= q.
int gap_sign(const Composition& w, int gap);

enum class BlockKind { String, Atom };

struct Block {
  int start = 0;  // 1-based, inclusive
  int end = 0;
  BlockKind kind = BlockKind::Atom;
  Composition element;

  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;

  friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

/// The ordered strings and atoms of an even-norm composition: the maximal
/// runs of support on which the witness polynomial is <= 0.
/// Throws Error(Parity) on odd norm.
BlockDecomposition decompose(const Composition& w);

void require_even_norm(const Composition& w, std::string_view what);

}  // namespace tangency
