#include "tangency/trajectory.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tangency/poset.hpp"

namespace tangency {

ProductLabel make_label(std::vector<Composition> components, Composition capacities) {
  if (static_cast<int>(components.size()) != capacities.size()) {
    throw Error(ErrorCode::Domain, "label needs one component per base position");
  }
  for (int i = 1; i <= capacities.size(); ++i) {
    const auto& c = components[static_cast<std::size_t>(i - 1)];
    const int cap = capacities.at(i);
    if (c.norm() > cap || (cap - c.norm()) % 2 != 0) {
      throw Error(ErrorCode::Domain, "component (" + to_string(c) + ") does not fit capacity " + std::to_string(cap));
    }
  }
  return ProductLabel{std::move(components), std::move(capacities)};
}

Composition kappa(const ProductLabel& label) {
  std::vector<int> all;
  for (const auto& c : label.components) all.insert(all.end(), c.entries().begin(), c.entries().end());
  return Composition(std::move(all));
}

int label_reduced_norm(const ProductLabel& label) {
  int r = 0;
  for (const auto& c : label.components) r += c.reduced_norm();
  return r;
}

std::string to_string(const ProductLabel& label) {
  std::string out;
  for (const auto& c : label.components) out += "(" + (c.empty() ? std::string() : to_string(c)) + ")";
  return out;
}

std::vector<ProductLabel> enumerate_labels(const Composition& w) {
  if (w.empty()) throw Error(ErrorCode::Empty, "enumerate_labels needs a nonempty base");
  std::vector<std::vector<Composition>> factors;
  for (int v : w.entries()) factors.push_back(generate_omega(v, GenMode::UpTo));

  std::vector<ProductLabel> out;
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    ProductLabel label{{}, w};
    for (std::size_t i = 0; i < factors.size(); ++i) label.components.push_back(factors[i][idx[i]]);
    out.push_back(std::move(label));
    std::size_t i = factors.size();
    while (i > 0 && ++idx[i - 1] == factors[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Composition stratum_label(const ProductLabel& label, int marker) {
  return xi_at_marker(make_marked(kappa(label), marker));
}

namespace {

void require_bullet_base(const Composition& w) {
  if (!is_bullet(w)) throw Error(ErrorCode::Domain, "(" + to_string(w) + ") is not a trajectory type in Omega-bullet");
}

// Images of one elementary operation applied inside a single component,
// carried to kappa with the component's offset.
template <typename Visit>
void for_each_component_step(const ProductLabel& label, int marker, Visit&& visit) {
  const MarkedComposition marked{kappa(label), marker};
  int offset = 0;
  for (std::size_t i = 0; i < label.components.size(); ++i) {
    const auto& comp = label.components[i];
    const int cap = label.capacities.entries()[i];
    for (int j = 1; j < comp.size(); ++j) {
      ProductLabel next = label;
      next.components[i] = merge(comp, j);
      visit(next, marked_merge(marked, offset + j).marker);
    }
    if (comp.norm() + 2 <= cap) {
      for (int j = 0; j <= comp.size(); ++j) {
        ProductLabel next = label;
        next.components[i] = insert(comp, j);
        visit(next, marked_insert(marked, offset + j).marker);
      }
    }
    offset += comp.size();
  }
}

}  // namespace

int TrajectoryComplex::index_of(const ProductLabel& label, int marker) const {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].marker == marker && cells[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

std::vector<long long> TrajectoryComplex::f_vector() const { return as_cell_complex().f_vector(); }

std::vector<long long> CellComplex::f_vector() const {
  int top = -1;
  for (const auto& c : cells) top = std::max(top, c.dim);
  std::vector<long long> counts(static_cast<std::size_t>(top + 1), 0);
  for (const auto& c : cells) ++counts[static_cast<std::size_t>(c.dim)];
  return counts;
}

CellComplex TrajectoryComplex::as_cell_complex() const {
  CellComplex out;
  for (const auto& c : cells) {
    std::string name = to_string(c.label) + "_" + std::to_string(c.marker);
    out.cells.push_back({std::move(name), c.dim});
  }
  out.covers = covers;
  return out;
}

TrajectoryComplex build_t_model(const Composition& w) {
  require_bullet_base(w);
  TrajectoryComplex tc;
  tc.base = w;
  for (auto& label : enumerate_labels(w)) {
    const Composition k = kappa(label);
    if (k.empty()) continue;
    const int dim = w.reduced_norm() - label_reduced_norm(label);
    for (int marker : marker_set(k)) {
      tc.cells.push_back({label, marker, dim, xi_at_marker(MarkedComposition{k, marker})});
    }
  }
  std::stable_sort(tc.cells.begin(), tc.cells.end(), [](const TrajectoryCell& a, const TrajectoryCell& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    if (a.label != b.label) return a.label < b.label;
    return a.marker < b.marker;
  });

  std::map<std::pair<ProductLabel, int>, int> index;
  for (std::size_t i = 0; i < tc.cells.size(); ++i) index[{tc.cells[i].label, tc.cells[i].marker}] = static_cast<int>(i);

  for (std::size_t i = 0; i < tc.cells.size(); ++i) {
    for_each_component_step(tc.cells[i].label, tc.cells[i].marker, [&](const ProductLabel& next, int marker) {
      auto it = index.find({next, marker});
      if (it == index.end()) throw std::logic_error("marker transport left the complex at " + to_string(next));
      tc.covers.emplace_back(static_cast<int>(i), it->second);
    });
  }
  std::sort(tc.covers.begin(), tc.covers.end());
  tc.covers.erase(std::unique(tc.covers.begin(), tc.covers.end()), tc.covers.end());
  return tc;
}

std::vector<long long> t_f_vector(const Composition& w) { return build_t_model(w).f_vector(); }

CellComplex link_complex(const Composition& w) {
  const auto tc = build_t_model(w);
  CellComplex out;
  std::vector<int> remap(tc.cells.size(), -1);
  for (std::size_t i = 0; i < tc.cells.size(); ++i) {
    const auto& c = tc.cells[i];
    if (kappa(c.label) == w) continue;
    remap[i] = static_cast<int>(out.cells.size());
    out.cells.push_back({to_string(c.label) + "_" + std::to_string(c.marker), c.dim - 1});
  }
  for (auto [a, b] : tc.covers) {
    const int ra = remap[static_cast<std::size_t>(a)], rb = remap[static_cast<std::size_t>(b)];
    if (ra >= 0 && rb >= 0) out.covers.emplace_back(ra, rb);
  }
  return out;
}

std::vector<std::pair<ProductLabel, int>> fiber_report(const Composition& w) {
  require_bullet_base(w);
  std::vector<std::pair<ProductLabel, int>> out;
  for (auto& label : enumerate_labels(w)) {
    const Composition k = kappa(label);
    const int n = k.empty() ? 0 : static_cast<int>(marker_set(k).size());
    out.emplace_back(std::move(label), n);
  }
  return out;
}

}  // namespace tangency
