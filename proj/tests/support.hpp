#pragma once

#include <random>
#include <vector>

#include "tangency/composition.hpp"
#include "tangency/polynomial.hpp"

namespace testsupport {

using tangency::Composition;

inline std::mt19937& rng() {
  static std::mt19937 gen(7181);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Every composition of norm exactly n, built by cutting 1..n.
inline std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) return {Composition{}};
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(parts);
  }
  return out;
}

inline std::vector<Composition> compositions_upto(int n, bool even_only = false) {
  std::vector<Composition> out;
  for (int k = 0; k <= n; ++k) {
    if (even_only && k % 2) continue;
    for (auto& w : compositions_of(k)) out.push_back(std::move(w));
  }
  return out;
}

inline Composition random_composition(int max_len, int max_entry) {
  std::vector<int> v(static_cast<std::size_t>(uniform(0, max_len)));
  for (int& e : v) e = uniform(1, max_entry);
  return Composition(v);
}

}  // namespace testsupport
