#include "tangency/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace tangency {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Reject: return "REJECT";
    case ErrorCode::Index: return "INDEX";
    case ErrorCode::Parity: return "PARITY";
    case ErrorCode::Degree: return "DEGREE";
    case ErrorCode::Domain: return "DOMAIN";
    case ErrorCode::Order: return "ORDER";
    case ErrorCode::Apex: return "APEX";
    case ErrorCode::Negative: return "NEGATIVE";
    case ErrorCode::Empty: return "EMPTY";
    case ErrorCode::InvalidMarker: return "INVALID_MARKER";
    case ErrorCode::Ambiguous: return "AMBIGUOUS";
    case ErrorCode::ZeroPoly: return "ZERO_POLY";
    case ErrorCode::NotSquarefree: return "NOT_SQUAREFREE";
    case ErrorCode::UnboundedNegative: return "UNBOUNDED_NEGATIVE";
    case ErrorCode::Parse: return "PARSE";
  }
  return "UNKNOWN";
}

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 1) throw Error(ErrorCode::Reject, "composition entries must be >= 1, got " + std::to_string(e));
  }
}

int Composition::at(int pos) const {
  if (pos < 1 || pos > size()) {
    throw Error(ErrorCode::Index, "position " + std::to_string(pos) + " outside 1.." + std::to_string(size()));
  }
  return entries_[static_cast<std::size_t>(pos - 1)];
}

int Composition::norm() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int Composition::reduced_norm() const noexcept { return norm() - size(); }

int Composition::virtual_multiplicity() const noexcept {
  int mu = 0;
  for (int e : entries_) mu += e / 2;
  return mu;
}

int Composition::count_of(int value) const noexcept {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), value));
}

Composition Composition::slice(int first, int last) const {
  if (first < 1 || last > size() || first > last + 1) {
    throw Error(ErrorCode::Index, "slice [" + std::to_string(first) + "," + std::to_string(last) + "]");
  }
  return Composition(std::vector<int>(entries_.begin() + (first - 1), entries_.begin() + last));
}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(entries_.rbegin(), entries_.rend()));
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                b.entries_.end());
}

Composition make_composition(std::vector<int> entries) { return Composition(std::move(entries)); }

std::string to_string(const Composition& w) {
  if (w.empty()) return "e";
  std::string out;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(w.at(i));
  }
  return out;
}

Composition parse_composition(std::string_view text) {
  if (text == "e" || text.empty()) return {};
  std::vector<int> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::Parse, "bad composition text '" + std::string(text) + "'");
    }
    entries.push_back(value);
    pos = comma + 1;
  }
  return Composition(std::move(entries));
}

Composition merge(const Composition& w, int j) {
  if (j < 1 || j > w.size() - 1) {
    throw Error(ErrorCode::Index, "merge index " + std::to_string(j) + " needs 1 <= j <= " + std::to_string(w.size() - 1));
  }
  std::vector<int> out = w.entries();
  out[static_cast<std::size_t>(j - 1)] += out[static_cast<std::size_t>(j)];
  out.erase(out.begin() + j);
  return Composition(std::move(out));
}

Composition insert(const Composition& w, int j) {
  if (j < 0 || j > w.size()) {
    throw Error(ErrorCode::Index, "insert index " + std::to_string(j) + " needs 0 <= j <= " + std::to_string(w.size()));
  }
  std::vector<int> out = w.entries();
  out.insert(out.begin() + j, 2);
  return Composition(std::move(out));
}

namespace {
void sort_unique(std::vector<Composition>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}
}  // namespace

std::vector<Composition> successors(const Composition& w, int norm_cap) {
  std::vector<Composition> out;
  for (int j = 1; j < w.size(); ++j) out.push_back(merge(w, j));
  if (w.norm() + 2 <= norm_cap) {
    for (int j = 0; j <= w.size(); ++j) out.push_back(insert(w, j));
  }
  sort_unique(out);
  return out;
}

std::vector<Composition> predecessors_one_step(const Composition& w) {
  std::vector<Composition> out;
  const auto& e = w.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (int left = 1; left < e[i]; ++left) {
      std::vector<int> split(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(i));
      split.push_back(left);
      split.push_back(e[i] - left);
      split.insert(split.end(), e.begin() + static_cast<std::ptrdiff_t>(i) + 1, e.end());
      out.emplace_back(std::move(split));
    }
    if (e[i] == 2) {
      std::vector<int> cut = e;
      cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(i));
      out.emplace_back(std::move(cut));
    }
  }
  // One entry per inverse operation. Deleting either of two adjacent 2s
  // yields the same composition; both are kept, since they are distinct
  // local branches of the stratum.
  std::sort(out.begin(), out.end());
  return out;
}

bool is_bullet(const Composition& w) {
  const int q = w.size();
  if (q == 0) return false;
  if (q == 1) return w.at(1) % 2 == 0;
  if (w.at(1) % 2 == 0 || w.at(q) % 2 == 0) return false;
  for (int i = 2; i < q; ++i) {
    if (w.at(i) % 2 != 0) return false;
  }
  return true;
}

int gap_sign(const Composition& w, int gap) {
  if (gap < 0 || gap > w.size()) {
    throw Error(ErrorCode::Index, "gap " + std::to_string(gap) + " outside 0.." + std::to_string(w.size()));
  }
  int suffix = 0;
  for (int j = gap + 1; j <= w.size(); ++j) suffix += w.at(j);
  return suffix % 2 == 0 ? 1 : -1;
}

void require_even_norm(const Composition& w, std::string_view what) {
  if (w.norm() % 2 != 0) {
    throw Error(ErrorCode::Parity, std::string(what) + " needs an even norm, got " + to_string(w));
  }
}

BlockDecomposition decompose(const Composition& w) {
  require_even_norm(w, "decompose");
  const int q = w.size();
  std::vector<int> signs(static_cast<std::size_t>(q) + 1);
  for (int g = 0; g <= q; ++g) signs[static_cast<std::size_t>(g)] = gap_sign(w, g);

  BlockDecomposition out;
  int start = 1;
  while (start <= q) {
    int end = start;
    while (signs[static_cast<std::size_t>(end)] < 0) ++end;
    Block b;
    b.start = start;
    b.end = end;
    b.kind = end > start ? BlockKind::String : BlockKind::Atom;
    b.element = w.slice(start, end);
    out.blocks.push_back(std::move(b));
    start = end + 1;
  }
  return out;
}

}  // namespace tangency
