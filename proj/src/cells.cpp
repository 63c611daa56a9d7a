#include "tangency/cells.hpp"

#include <algorithm>

#include "tangency/poset.hpp"

namespace tangency {

std::string_view to_string(Ambient a) {
  switch (a) {
    case Ambient::Full: return "full";
    case Ambient::Balanced: return "balanced";
    case Ambient::Sphere: return "sphere";
    case Ambient::BalancedSphere: return "balanced_sphere";
  }
  return "full";
}

Ambient parse_ambient(std::string_view text) {
  if (text == "full") return Ambient::Full;
  if (text == "balanced") return Ambient::Balanced;
  if (text == "sphere") return Ambient::Sphere;
  if (text == "balanced_sphere") return Ambient::BalancedSphere;
  throw Error(ErrorCode::Parse, "unknown ambient '" + std::string(text) + "'");
}

int ambient_dimension(int d, Ambient a) {
  switch (a) {
    case Ambient::Full: return d;
    case Ambient::Balanced: return d - 1;
    case Ambient::Sphere: return d - 1;
    case Ambient::BalancedSphere: return d - 2;
  }
  return d;
}

namespace {
void check_label(const Composition& w, int d) {
  if (w.norm() > d) {
    throw Error(ErrorCode::Degree, to_string(w) + " has norm above degree " + std::to_string(d));
  }
  if ((d - w.norm()) % 2 != 0) {
    throw Error(ErrorCode::Parity, to_string(w) + " and degree " + std::to_string(d) + " differ in parity");
  }
}

bool is_apex(const Composition& w, int d) { return w.size() == 1 && w.at(1) == d; }
}  // namespace

int cell_dimension(const Composition& w, int d, Ambient a) {
  check_label(w, d);
  if (a == Ambient::BalancedSphere && is_apex(w, d)) {
    throw Error(ErrorCode::Apex, "(" + to_string(w) + ") is the cone point of the balanced space");
  }
  if (a == Ambient::Sphere && is_apex(w, d)) return 0;
  return ambient_dimension(d, a) - w.reduced_norm();
}

int cell_count(const Composition& w, int d, Ambient a) {
  check_label(w, d);
  if (!is_apex(w, d)) return 1;
  switch (a) {
    case Ambient::Sphere: return 2;
    case Ambient::BalancedSphere: return 0;
    default: return 1;
  }
}

FVector f_vector(int d, Ambient a) {
  if (d < 1) throw Error(ErrorCode::Negative, "f_vector needs d >= 1");
  FVector f{a, d, {}};
  const int top = ambient_dimension(d, a);
  f.counts.assign(static_cast<std::size_t>(std::max(top + 1, 0)), 0);
  for (const auto& w : generate_omega(d, GenMode::UpTo)) {
    const int n = cell_count(w, d, a);
    if (n == 0) continue;
    f.counts[static_cast<std::size_t>(cell_dimension(w, d, a))] += n;
  }
  return f;
}

long long euler_characteristic(const std::vector<long long>& counts) {
  long long chi = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * counts[i];
  return chi;
}

bool merge_closure_contains(const Composition& w, const Composition& candidate) {
  if (w.norm() != candidate.norm()) return false;
  // Every partial sum of the candidate must be a partial sum of w.
  int i = 0, wsum = 0, csum = 0;
  for (int v : candidate.entries()) {
    csum += v;
    while (wsum < csum && i < w.size()) wsum += w.entries()[static_cast<std::size_t>(i++)];
    if (wsum != csum) return false;
  }
  return i == w.size();
}

int ramification_o(const Composition& w, const Composition& w_tilde) {
  if (!geq(w, w_tilde)) {
    throw Error(ErrorCode::Order, to_string(w) + " is not >= " + to_string(w_tilde));
  }
  // Odometer over w''(i) in [0, w~(i)/2].
  const auto& t = w_tilde.entries();
  std::vector<int> half(t.size(), 0);
  int count = 0;
  while (true) {
    std::vector<int> rest;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (int r = t[i] - 2 * half[i]; r > 0) rest.push_back(r);
    }
    if (merge_closure_contains(w, Composition(std::move(rest)))) ++count;
    std::size_t i = 0;
    while (i < t.size() && half[i] == t[i] / 2) half[i++] = 0;
    if (i == t.size()) break;
    ++half[i];
  }
  return count;
}

StarComplex normal_star(const Composition& w, int d) {
  check_label(w, d);
  StarComplex star;
  star.center = w;
  star.ambient_dim = w.reduced_norm();
  std::vector<Composition> labels;
  for (auto& cand : generate_omega(d, GenMode::UpTo)) {
    if (geq(cand, w)) labels.push_back(std::move(cand));
  }
  auto poset = hasse(labels, OrderKind::Omega);
  for (auto& label : poset.elements) {
    const int dim = w.reduced_norm() - label.reduced_norm();
    star.cells.push_back({std::move(label), dim});
  }
  star.covers = std::move(poset.covers);
  return star;
}

int star_multiplicity(const Composition& w_tilde) { return w_tilde.reduced_norm() + w_tilde.count_of(2); }

}  // namespace tangency
