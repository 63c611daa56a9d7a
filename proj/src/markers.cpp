#include "tangency/markers.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tangency/poset.hpp"

namespace tangency {

std::vector<int> marker_set(const Composition& w) {
  require_even_norm(w, "marker_set");
  std::vector<int> out;
  for (int k = 1; k <= w.size(); ++k) {
    if (is_marker(w, k)) out.push_back(k);
  }
  return out;
}

bool is_marker(const Composition& w, int k) {
  if (k < 1 || k > w.size() || w.norm() % 2 != 0) return false;
  const int below = gap_sign(w, k - 1);
  const int above = gap_sign(w, k);
  if (w.at(k) % 2 == 0) return below > 0 && above > 0;
  return below > 0 && above < 0;
}

MarkedComposition make_marked(Composition omega, int marker) {
  if (!is_marker(omega, marker)) {
    throw Error(ErrorCode::InvalidMarker,
                std::to_string(marker) + " is not a marker of (" + to_string(omega) + ")");
  }
  return MarkedComposition{std::move(omega), marker};
}

int BlockStructure::block_of(int pos) const {
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    const auto& m = blocks[p].members;
    if (pos >= m.front() && pos <= m.back()) return static_cast<int>(p);
  }
  throw Error(ErrorCode::Index, "position " + std::to_string(pos) + " is in no block");
}

BlockStructure blocks(const Composition& w) {
  require_even_norm(w, "blocks");
  BlockStructure out;
  for (int k : marker_set(w)) {
    MarkerBlock b{k, {k}};
    // Extend while the witness stays <= 0 on [k, j], i.e. the gap above j is negative.
    for (int j = k; j < w.size() && gap_sign(w, j) < 0; ++j) b.members.push_back(j + 1);
    out.blocks.push_back(std::move(b));
  }
  return out;
}

namespace {

void require_marker(const MarkedComposition& m) {
  if (!is_marker(m.omega, m.marker)) {
    throw Error(ErrorCode::InvalidMarker,
                std::to_string(m.marker) + " is not a marker of (" + to_string(m.omega) + ")");
  }
}

MarkedComposition land_in_block(Composition omega, std::size_t expected_blocks, int block_index) {
  const auto after = blocks(omega);
  if (after.blocks.size() != expected_blocks) {
    throw std::logic_error("marker transport: unexpected block count for " + to_string(omega));
  }
  const int marker = after.blocks[static_cast<std::size_t>(block_index)].marker;
  return MarkedComposition{std::move(omega), marker};
}

}  // namespace

MarkedComposition marked_merge(const MarkedComposition& m, int j) {
  require_marker(m);
  const auto before = blocks(m.omega);
  Composition merged = merge(m.omega, j);  // validates j
  const int lower = before.block_of(j);
  const int upper = before.block_of(j + 1);
  const int own = before.block_of(m.marker);
  if (lower == upper) {
    return land_in_block(std::move(merged), before.blocks.size(), own);
  }
  // Blocks lower and lower+1 fuse; everything above moves down one slot.
  const int landed = own <= lower ? own : own - 1;
  return land_in_block(std::move(merged), before.blocks.size() - 1, landed);
}

MarkedComposition marked_insert(const MarkedComposition& m, int j) {
  require_marker(m);
  const auto before = blocks(m.omega);
  Composition inserted = insert(m.omega, j);  // validates j
  const int own = before.block_of(m.marker);
  if (gap_sign(m.omega, j) < 0) {
    // The new 2 lands inside a shaded string.
    return land_in_block(std::move(inserted), before.blocks.size(), own);
  }
  // A new atom appears in a positive gap, above every block ending at or below j.
  int new_index = 0;
  while (static_cast<std::size_t>(new_index) < before.blocks.size() &&
         before.blocks[static_cast<std::size_t>(new_index)].members.back() <= j) {
    ++new_index;
  }
  const int landed = own >= new_index ? own + 1 : own;
  return land_in_block(std::move(inserted), before.blocks.size() + 1, landed);
}

namespace {

class Transporter {
 public:
  explicit Transporter(Composition target) : target_(std::move(target)) {}

  const std::set<int>& run(const MarkedComposition& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    std::set<int> result;
    if (m.omega == target_) {
      result.insert(m.marker);
    } else {
      for (int j = 1; j < m.omega.size(); ++j) {
        if (geq(merge(m.omega, j), target_)) absorb(result, marked_merge(m, j));
      }
      if (m.omega.norm() + 2 <= target_.norm()) {
        for (int j = 0; j <= m.omega.size(); ++j) {
          if (geq(insert(m.omega, j), target_)) absorb(result, marked_insert(m, j));
        }
      }
    }
    return memo_.emplace(m, std::move(result)).first->second;
  }

 private:
  void absorb(std::set<int>& into, const MarkedComposition& next) {
    const auto& sub = run(next);
    into.insert(sub.begin(), sub.end());
  }

  Composition target_;
  std::map<MarkedComposition, std::set<int>> memo_;
};

}  // namespace

std::vector<int> transport_all(const MarkedComposition& big, const Composition& target) {
  require_marker(big);
  if (!geq(big.omega, target)) {
    throw Error(ErrorCode::Order, to_string(big.omega) + " is not >= " + to_string(target));
  }
  Transporter t(target);
  const auto& found = t.run(big);
  return {found.begin(), found.end()};
}

int transport(const MarkedComposition& big, const Composition& target) {
  const auto all = transport_all(big, target);
  if (all.size() != 1) {
    std::string list;
    for (int k : all) list += (list.empty() ? "" : ",") + std::to_string(k);
    throw Error(ErrorCode::Ambiguous, "(" + to_string(big.omega) + ", " + std::to_string(big.marker) +
                                          ") reaches markers {" + list + "} of (" + to_string(target) + ")");
  }
  return all.front();
}

namespace {

// Same walk as Transporter, but each state also carries where the original
// support positions currently sit, so chains can be grouped by morphism.
class MorphismTransporter {
 public:
  MorphismTransporter(Composition target, std::vector<int> wanted)
      : target_(std::move(target)), wanted_(std::move(wanted)) {}

  const std::set<int>& run(const MarkedComposition& m, const std::vector<int>& pos) {
    auto key = std::make_pair(m, pos);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<int> result;
    if (m.omega == target_) {
      if (pos == wanted_) result.insert(m.marker);
    } else {
      for (int j = 1; j < m.omega.size(); ++j) {
        if (!geq(merge(m.omega, j), target_)) continue;
        std::vector<int> next = pos;
        for (int& x : next) x -= x > j;
        absorb(result, marked_merge(m, j), next);
      }
      if (m.omega.norm() + 2 <= target_.norm()) {
        for (int j = 0; j <= m.omega.size(); ++j) {
          if (!geq(insert(m.omega, j), target_)) continue;
          std::vector<int> next = pos;
          for (int& x : next) x += x > j;
          absorb(result, marked_insert(m, j), next);
        }
      }
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  void absorb(std::set<int>& into, const MarkedComposition& next, const std::vector<int>& pos) {
    const auto& sub = run(next, pos);
    into.insert(sub.begin(), sub.end());
  }

  Composition target_;
  std::vector<int> wanted_;
  std::map<std::pair<MarkedComposition, std::vector<int>>, std::set<int>> memo_;
};

}  // namespace

int transport_along(const MarkedComposition& big, const Morphism& alpha) {
  require_marker(big);
  if (alpha.source != big.omega) throw Error(ErrorCode::Domain, "morphism source differs from the marked composition");
  const auto all = mor_enumerate(alpha.source, alpha.target);
  if (std::find_if(all.begin(), all.end(), [&](const Morphism& m) { return m.map == alpha.map; }) == all.end()) {
    throw Error(ErrorCode::Domain, "map is not a morphism (" + to_string(alpha.source) + ") -> (" + to_string(alpha.target) + ")");
  }
  std::vector<int> identity;
  for (int i = 1; i <= big.omega.size(); ++i) identity.push_back(i);
  MorphismTransporter t(alpha.target, alpha.map);
  const auto& found = t.run(big, identity);
  if (found.size() != 1) {
    throw Error(ErrorCode::Ambiguous, "chains realizing one morphism from (" + to_string(big.omega) + ", " +
                                          std::to_string(big.marker) + ") land on " + std::to_string(found.size()) + " markers");
  }
  return *found.begin();
}

bool leads_to(const MarkedComposition& big, const MarkedComposition& small) {
  if (!geq(big.omega, small.omega)) return false;
  return transport(big, small.omega) == small.marker;
}

Composition xi_at_marker(const MarkedComposition& m) {
  require_marker(m);
  const auto bs = blocks(m.omega);
  const auto& block = bs.blocks[static_cast<std::size_t>(bs.block_of(m.marker))];
  return m.omega.slice(block.members.front(), block.members.back());
}

}  // namespace tangency
