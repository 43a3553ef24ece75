#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace magnus::detail {

template <class L>
void push_reduced(std::vector<L>& out, const L& letter) {
  if (!out.empty() && out.back().cancels(letter)) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

// Number of letters stripped from each end by cyclic reduction of an already
// freely reduced word.
template <class L>
std::size_t cyclic_trim(std::span<const L> w) {
  std::size_t t = 0;
  while (w.size() >= 2 * t + 2 && w[t].cancels(w[w.size() - 1 - t])) {
    ++t;
  }
  return t;
}

// Start of the lexicographically least rotation (two-pointer minimum
// expression), O(n).
template <class L>
std::size_t least_rotation(std::span<const L> s) {
  std::size_t const n = s.size();
  if (n < 2) {
    return 0;
  }
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    L const& a = s[(i + k) % n];
    L const& b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (b < a) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) {
      ++j;
    }
    k = 0;
  }
  return std::min(i, j);
}

// Smallest t with b == a[t..] a[..t], if any.
template <class L>
std::optional<std::size_t> rotation_offset(std::span<const L> a,
                                           std::span<const L> b) {
  if (a.size() != b.size()) {
    return std::nullopt;
  }
  if (a.empty()) {
    return 0;
  }
  std::vector<L> doubled(a.begin(), a.end());
  doubled.insert(doubled.end(), a.begin(), a.end());
  auto it = std::search(doubled.begin(), doubled.end() - 1, b.begin(), b.end());
  if (it == doubled.end() - 1) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - doubled.begin());
}

}  // namespace magnus::detail
