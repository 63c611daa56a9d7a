#pragma once

// Order relations on compositions.
//
// The degeneration order w1 >= w2 (w2 reachable from w1 by merges and
// inserts) is decided through morphisms: weakly monotone total maps from
// the support of w1 to that of w2. Every such map sends a contiguous,
// possibly empty run of source positions to each target position, which
// turns existence into a small dynamic program over (source, target)
// prefixes. The breadth-first and string/atom oracles below decide the
// same relations straight from their operational definitions; they are
// exponential and exist to cross-check the fast path.

#include <utility>
#include <vector>

#include "tangency/composition.hpp"

namespace tangency {

enum class OrderKind { Omega, Bullet };

struct Morphism {
  Composition source;
  Composition target;
  /// map[i] is the 1-based target position of source position i+1.
  std::vector<int> map;
  /// Per target position: block sum over the preimage has the parity of
  /// the target entry. All true for Omega-morphisms.
  std::vector<bool> parity_ok;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

bool mor_exists(const Composition& source, const Composition& target);
std::vector<Morphism> mor_enumerate(const Composition& source, const Composition& target);

/// w1 >= w2 in (Omega, >).
bool geq(const Composition& w1, const Composition& w2);
/// Breadth-first search over single merges/inserts, capped at norm(w2).
bool reachable_bfs(const Composition& w1, const Composition& w2);

/// Mor-bullet: monotone maps with block sums bounded, no parity rule.
/// Both arguments must be in Omega-bullet (Error(Domain) otherwise).
bool bullet_mor_exists(const Composition& w1, const Composition& w2);
std::vector<Morphism> bullet_mor_enumerate(const Composition& w1, const Composition& w2);
/// w1 >=_bullet w2 straight from the definition: w1 occurs as a string or
/// an atom of some w >= w2.
bool bullet_geq_oracle(const Composition& w1, const Composition& w2);
/// The bullet order itself, as used by hasse() and the CLI. A Mor-bullet
/// map is necessary for it but not sufficient: (2) -> (1,2,1) has one, yet
/// no resolution of (1,2,1) leaves room for an atom between its odd ends.
bool bullet_geq(const Composition& w1, const Composition& w2);

enum class GenMode { Exact, UpTo };

/// Compositions of d (Exact) or of every norm <= d with the parity of d (UpTo).
std::vector<Composition> generate_omega(int d, GenMode mode);
/// Omega-bullet elements with reduced norm <= n.
std::vector<Composition> generate_bullet(int n);

struct FinitePoset {
  OrderKind kind = OrderKind::Omega;
  std::vector<Composition> elements;
  /// (bigger, smaller) index pairs.
  std::vector<std::pair<int, int>> covers;

  int index_of(const Composition& w) const;  // -1 if absent
};

/// Dense order matrix: rel[a][b] == (elements[a] >= elements[b]).
std::vector<std::vector<bool>> order_matrix(const std::vector<Composition>& elements, OrderKind kind);
FinitePoset hasse(std::vector<Composition> elements, OrderKind kind);

/// All w~ in `universe` with w~ >= w and |w|' - |w~|' == k.
std::vector<Composition> pred_at_distance(const Composition& w, int k, const std::vector<Composition>& universe);

}  // namespace tangency
