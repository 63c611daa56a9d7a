#pragma once

// Local model of the trajectory space near a trajectory of type w.
//
// Nearby trajectories are labelled by a product label: one composition
// per tangency point of w, each of norm <= w(i) and of the same parity,
// recording how that point has resolved. Concatenating the components
// (kappa) gives the nearby trajectory's global pattern; each of its
// markers picks one connected piece of that trajectory inside the
// manifold, and each (label, marker) pair is an open cell of dimension
// |w|' - sum |component|'.

#include <string>
#include <utility>
#include <vector>

#include "tangency/composition.hpp"
#include "tangency/markers.hpp"

namespace tangency {

struct ProductLabel {
  std::vector<Composition> components;
  Composition capacities;  // the base w

  friend bool operator==(const ProductLabel&, const ProductLabel&) = default;
  friend auto operator<=>(const ProductLabel& a, const ProductLabel& b) {
    return a.components <=> b.components;
  }
};

/// Validating constructor: one component per base position, each with
/// norm <= capacity and matching parity. Error(Domain) otherwise.
ProductLabel make_label(std::vector<Composition> components, Composition capacities);

/// Concatenation of the components in order.
Composition kappa(const ProductLabel& label);
/// sum over components of |component|'.
int label_reduced_norm(const ProductLabel& label);
std::string to_string(const ProductLabel& label);

/// Full product of Omega_<w(i)] over the base positions. Error(Empty) on empty w.
std::vector<ProductLabel> enumerate_labels(const Composition& w);

struct TrajectoryCell {
  ProductLabel label;
  int marker = 0;  // position in kappa(label)
  int dim = 0;
  Composition stratum;
};

/// Graded cells with (bigger, smaller) cover pairs, as used for exports.
struct CellComplex {
  struct Cell {
    std::string label;
    int dim = 0;
  };
  std::vector<Cell> cells;
  std::vector<std::pair<int, int>> covers;

  std::vector<long long> f_vector() const;
};

struct TrajectoryComplex {
  Composition base;
  std::vector<TrajectoryCell> cells;  // dim descending, then label, then marker
  std::vector<std::pair<int, int>> covers;

  int index_of(const ProductLabel& label, int marker) const;  // -1 if absent
  std::vector<long long> f_vector() const;
  CellComplex as_cell_complex() const;
};

/// Requires w in Omega-bullet (Error(Domain)).
TrajectoryComplex build_t_model(const Composition& w);
std::vector<long long> t_f_vector(const Composition& w);
/// Cells away from the apex, one dimension lower.
CellComplex link_complex(const Composition& w);

/// Xi(kappa(label), marker).
Composition stratum_label(const ProductLabel& label, int marker);

/// Per label: #Upsilon(kappa(label)); 0 for the all-empty label.
std::vector<std::pair<ProductLabel, int>> fiber_report(const Composition& w);

}  // namespace tangency
