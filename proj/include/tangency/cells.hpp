#pragma once

// Cell structure of the space of real monic degree-d polynomials,
// stratified by the multiplicity pattern of their real roots.

#include <string_view>
#include <utility>
#include <vector>

#include "tangency/composition.hpp"

namespace tangency {

enum class Ambient {
  Full,            // R^d of monic polynomials
  Balanced,        // R^{d-1}: z^{d-1}-coefficient pinned
  Sphere,          // S^{d-1} around the origin of Full
  BalancedSphere,  // S^{d-2} around the origin of Balanced
};

std::string_view to_string(Ambient a);
Ambient parse_ambient(std::string_view text);

/// Dimension of the ambient space itself.
int ambient_dimension(int d, Ambient a);

/// Dimension of the stratum of type w. Throws Degree / Parity for labels
/// outside Omega_<d], and Apex for (d) in the balanced sphere, where that
/// stratum is the cone point.
int cell_dimension(const Composition& w, int d, Ambient a);

/// Number of cells carrying label w: 1, except for (d), which meets the
/// unbalanced sphere in two points (the rays of (z - a)^d, a > 0 and a < 0)
/// and is absent from the balanced sphere.
int cell_count(const Composition& w, int d, Ambient a);

struct FVector {
  Ambient ambient = Ambient::Full;
  int d = 0;
  std::vector<long long> counts;  // indexed by cell dimension
};

FVector f_vector(int d, Ambient a);
long long euler_characteristic(const std::vector<long long>& counts);
inline long long euler_characteristic(const FVector& f) { return euler_characteristic(f.counts); }

/// Is `candidate` a coarsening of w by merges alone?
bool merge_closure_contains(const Composition& w, const Composition& candidate);

/// o(w, w~): the number of ways to read w~ as w with some real double
/// points (2w'') folded in. Requires geq(w, w~), else Error(Order).
int ramification_o(const Composition& w, const Composition& w_tilde);

struct StarCell {
  Composition label;
  int dim = 0;
};

struct StarComplex {
  Composition center;
  int ambient_dim = 0;  // = |center|'
  std::vector<StarCell> cells;
  std::vector<std::pair<int, int>> covers;  // (bigger, smaller)
};

/// Normal star of the stratum of w inside Omega_<d].
StarComplex normal_star(const Composition& w, int d);

/// |w~|' + #{entries equal to 2}: number of next-dimension cells around w~.
int star_multiplicity(const Composition& w_tilde);

}  // namespace tangency
