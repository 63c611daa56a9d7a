#include "tangency/poset.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace tangency {

namespace {

// Feasibility table for monotone maps: feasible[a][b] says source
// positions a.. (0-based) can be mapped onto target positions b.. so that
// every later target receives a legal contiguous run.
class MorphismSearch {
 public:
  MorphismSearch(const Composition& source, const Composition& target, bool with_parity)
      : src_(source.entries()), tgt_(target.entries()), parity_(with_parity) {
    const std::size_t p = src_.size(), q = tgt_.size();
    feasible_.assign(p + 1, std::vector<char>(q + 1, 0));
    feasible_[p][q] = 1;
    for (std::size_t b = q; b-- > 0;) {
      for (std::size_t a = p + 1; a-- > 0;) {
        int sum = 0;
        for (std::size_t end = a;; ++end) {
          if (run_ok(sum, tgt_[b]) && feasible_[end][b + 1]) {
            feasible_[a][b] = 1;
            break;
          }
          if (end == p) break;
          sum += src_[end];
          if (sum > tgt_[b]) break;
        }
      }
    }
  }

  bool exists() const { return feasible_[0][0] != 0; }

  void enumerate(std::vector<std::vector<int>>& maps) const {
    std::vector<int> current;
    walk(0, 0, current, maps);
  }

 private:
  bool run_ok(int sum, int target) const {
    if (sum > target) return false;
    return !parity_ || (target - sum) % 2 == 0;
  }

  void walk(std::size_t a, std::size_t b, std::vector<int>& current, std::vector<std::vector<int>>& maps) const {
    if (b == tgt_.size()) {
      if (a == src_.size()) maps.push_back(current);
      return;
    }
    int sum = 0;
    for (std::size_t end = a;; ++end) {
      if (run_ok(sum, tgt_[b]) && feasible_[end][b + 1]) {
        for (std::size_t i = a; i < end; ++i) current.push_back(static_cast<int>(b) + 1);
        walk(end, b + 1, current, maps);
        current.resize(a);
      }
      if (end == src_.size()) break;
      sum += src_[end];
      if (sum > tgt_[b]) break;
    }
  }

  const std::vector<int>& src_;
  const std::vector<int>& tgt_;
  bool parity_;
  std::vector<std::vector<char>> feasible_;
};

std::vector<Morphism> build_morphisms(const Composition& source, const Composition& target, bool with_parity) {
  MorphismSearch search(source, target, with_parity);
  std::vector<std::vector<int>> maps;
  if (search.exists()) search.enumerate(maps);
  std::sort(maps.begin(), maps.end());

  std::vector<Morphism> out;
  out.reserve(maps.size());
  for (auto& m : maps) {
    Morphism mor{source, target, m, {}};
    std::vector<int> sums(static_cast<std::size_t>(target.size()), 0);
    for (std::size_t i = 0; i < m.size(); ++i) sums[static_cast<std::size_t>(m[i] - 1)] += source.entries()[i];
    for (int i = 0; i < target.size(); ++i) {
      mor.parity_ok.push_back((target.entries()[static_cast<std::size_t>(i)] - sums[static_cast<std::size_t>(i)]) % 2 == 0);
    }
    out.push_back(std::move(mor));
  }
  return out;
}

void require_bullet(const Composition& w, const char* what) {
  if (!is_bullet(w)) throw Error(ErrorCode::Domain, std::string(what) + ": " + to_string(w) + " is not in Omega-bullet");
}

void compositions_of(int n, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (n == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= n; ++first) {
    prefix.push_back(first);
    compositions_of(n - first, prefix, out);
    prefix.pop_back();
  }
}

// Strings: odd first entry, even interior entries, odd last entry.
void strings_within(int budget, std::vector<int>& prefix, std::vector<Composition>& out) {
  // prefix already holds the odd first entry and any even interior entries.
  for (int last = 1; last - 1 <= budget; last += 2) {
    prefix.push_back(last);
    out.emplace_back(prefix);
    prefix.pop_back();
  }
  for (int even = 2; even - 1 <= budget; even += 2) {
    prefix.push_back(even);
    strings_within(budget - (even - 1), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

bool mor_exists(const Composition& source, const Composition& target) {
  return MorphismSearch(source, target, true).exists();
}

std::vector<Morphism> mor_enumerate(const Composition& source, const Composition& target) {
  return build_morphisms(source, target, true);
}

bool geq(const Composition& w1, const Composition& w2) { return mor_exists(w1, w2); }

bool reachable_bfs(const Composition& w1, const Composition& w2) {
  const int cap = w2.norm();
  if (w1.norm() > cap) return false;
  std::set<Composition> seen{w1};
  std::deque<Composition> frontier{w1};
  while (!frontier.empty()) {
    Composition cur = std::move(frontier.front());
    frontier.pop_front();
    if (cur == w2) return true;
    for (auto& next : successors(cur, cap)) {
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return false;
}

bool bullet_mor_exists(const Composition& w1, const Composition& w2) {
  require_bullet(w1, "bullet_mor_exists");
  require_bullet(w2, "bullet_mor_exists");
  return MorphismSearch(w1, w2, false).exists();
}

std::vector<Morphism> bullet_mor_enumerate(const Composition& w1, const Composition& w2) {
  require_bullet(w1, "bullet_mor_enumerate");
  require_bullet(w2, "bullet_mor_enumerate");
  return build_morphisms(w1, w2, false);
}

bool bullet_geq_oracle(const Composition& w1, const Composition& w2) {
  require_bullet(w1, "bullet_geq_oracle");
  require_bullet(w2, "bullet_geq_oracle");
  // Walk the up-set of w2 backwards through inverse elementary operations,
  // so the oracle never touches the morphism search.
  std::set<Composition> seen{w2};
  std::deque<Composition> frontier{w2};
  while (!frontier.empty()) {
    Composition cur = std::move(frontier.front());
    frontier.pop_front();
    if (!cur.empty()) {
      for (const auto& block : decompose(cur).blocks) {
        if (block.element == w1) return true;
      }
    }
    for (auto& prev : predecessors_one_step(cur)) {
      if (seen.insert(prev).second) frontier.push_back(std::move(prev));
    }
  }
  return false;
}

bool bullet_geq(const Composition& w1, const Composition& w2) { return bullet_geq_oracle(w1, w2); }

std::vector<Composition> generate_omega(int d, GenMode mode) {
  if (d < 0) throw Error(ErrorCode::Negative, "generate_omega: d = " + std::to_string(d));
  std::vector<Composition> out;
  std::vector<int> prefix;
  if (mode == GenMode::Exact) {
    compositions_of(d, prefix, out);
  } else {
    for (int n = d; n >= 0; n -= 2) compositions_of(n, prefix, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> generate_bullet(int n) {
  if (n < 0) throw Error(ErrorCode::Negative, "generate_bullet: n = " + std::to_string(n));
  std::vector<Composition> out;
  for (int atom = 2; atom - 1 <= n; atom += 2) out.push_back(Composition{atom});
  std::vector<int> prefix;
  for (int first = 1; first - 1 <= n; first += 2) {
    prefix.assign(1, first);
    strings_within(n - (first - 1), prefix, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int FinitePoset::index_of(const Composition& w) const {
  auto it = std::find(elements.begin(), elements.end(), w);
  return it == elements.end() ? -1 : static_cast<int>(it - elements.begin());
}

std::vector<std::vector<bool>> order_matrix(const std::vector<Composition>& elements, OrderKind kind) {
  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      rel[a][b] = kind == OrderKind::Omega ? geq(elements[a], elements[b])
                                           : bullet_geq(elements[a], elements[b]);
    }
  }
  return rel;
}

FinitePoset hasse(std::vector<Composition> elements, OrderKind kind) {
  FinitePoset poset;
  poset.kind = kind;
  poset.elements = std::move(elements);
  const auto rel = order_matrix(poset.elements, kind);
  const std::size_t n = poset.elements.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !rel[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c) {
        if (c != a && c != b && rel[a][c] && rel[c][b]) covered = false;
      }
      if (covered) poset.covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return poset;
}

std::vector<Composition> pred_at_distance(const Composition& w, int k, const std::vector<Composition>& universe) {
  std::vector<Composition> out;
  const int target = w.reduced_norm() - k;
  for (const auto& cand : universe) {
    if (cand.reduced_norm() == target && geq(cand, w)) out.push_back(cand);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace tangency
