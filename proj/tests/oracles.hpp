#pragma once

// Slow, independent reference implementations used only by tests. None of
// them call into the window scan, the basis rewriting or the power-of-b test
// they are compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "magnus/decide.hpp"
#include "magnus/kernel.hpp"
#include "magnus/presentation.hpp"
#include "magnus/special.hpp"
#include "magnus/words.hpp"

namespace oracle {

using namespace magnus;

// ---------------------------------------------------------------- random input

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
  }
  bool coin() { return uniform(0, 1) == 1; }
  int sign() { return coin() ? 1 : -1; }
};

// Reduced word of exactly `len` letters.
inline Word random_word(Rng& rng, std::vector<std::string> const& alphabet, std::size_t len) {
  Word::Builder b;
  std::vector<Letter> letters;
  while (letters.size() < len) {
    Letter l = gen(alphabet[rng.uniform(0, alphabet.size() - 1)], rng.sign());
    if (!letters.empty() && letters.back().cancels(l)) {
      continue;
    }
    letters.push_back(l);
  }
  return Word::reduce(letters);
}

inline Word random_cyclic_word(Rng& rng, std::vector<std::string> const& alphabet,
                               std::size_t len) {
  for (;;) {
    Word w = random_word(rng, alphabet, len);
    if (is_cyclically_reduced(w)) {
      return w;
    }
  }
}

inline std::vector<std::string> y_names(std::size_t e) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= e; ++i) {
    out.push_back("y" + std::to_string(i));
  }
  return out;
}

inline FamilyPresentation random_presentation(Rng& rng, std::int64_t k_max = 3) {
  auto const e = static_cast<std::size_t>(rng.uniform(2, 4));
  auto ys = y_names(e);
  std::shuffle(ys.begin(), ys.end(), rng.gen);
  auto const split = static_cast<std::size_t>(rng.uniform(1, e - 1));
  std::vector<std::string> const left(ys.begin(), ys.begin() + split);
  std::vector<std::string> const right(ys.begin() + split, ys.end());
  RawPresentation raw;
  raw.magnus_gen = "x";
  raw.b_gen = "b";
  raw.y_gens = y_names(e);
  raw.k = rng.uniform(1, k_max);
  raw.u = random_word(rng, left, rng.uniform(1, 6));
  raw.v = random_word(rng, right, rng.uniform(1, 6));
  return validate(raw);
}

// Uniform length in [0, max_len], zero exponent in the Magnus generator.
inline Word random_zero_x_word(Rng& rng, FamilyPresentation const& p, std::size_t max_len) {
  auto const names = p.generators();
  for (;;) {
    Word w = random_word(rng, names, rng.uniform(0, max_len));
    if (exponent_sum(w, p.magnus_gen()) == 0) {
      return w;
    }
  }
}

inline KernelWord random_kernel_word(Rng& rng, Kernel const& kernel, std::size_t len,
                                     std::int64_t lo, std::int64_t hi, bool with_b = true) {
  std::vector<KernelLetter> out;
  while (out.size() < len) {
    std::int32_t const g =
        static_cast<std::int32_t>(rng.uniform(with_b ? 0 : 1, kernel.y_count()));
    KernelLetter l{g, rng.uniform(lo, hi), rng.sign()};
    if (!out.empty() && out.back().cancels(l)) {
      continue;
    }
    out.push_back(l);
  }
  return KernelWord::reduce(out);
}

inline KernelWord random_nontrivial_kernel_word(Rng& rng, Kernel const& kernel, std::size_t len,
                                                std::int64_t lo, std::int64_t hi) {
  for (;;) {
    KernelWord kw = random_kernel_word(rng, kernel, len, lo, hi);
    if (!kernel.is_trivial(kw)) {
      return kw;
    }
  }
}

// ------------------------------------------------------ canonical form by hand

// Leftmost out-of-range b-letter first, one substitution at a time, full free
// reduction after every step.
inline KernelWord iterative_canonical(FamilyPresentation const& p, KernelWord const& kw) {
  std::int64_t const k = p.k();
  auto block = [&](Word const& w, std::int64_t i) {
    std::vector<KernelLetter> out;
    for (Letter const& l : w) {
      out.push_back({static_cast<std::int32_t>(*p.y_slot(l.sym.name)) + 1, i, l.sign});
    }
    return out;
  };
  std::vector<KernelLetter> cur(kw.begin(), kw.end());
  for (;;) {
    auto it = std::find_if(cur.begin(), cur.end(), [&](KernelLetter const& l) {
      return l.is_b() && (l.index < 1 || l.index > k);
    });
    if (it == cur.end()) {
      return KernelWord::reduce(cur);
    }
    KernelLetter const l = *it;
    // b[i] = b[i-k] u[i-k] v[i-k]  or  b[i] = b[i+k] v[i]^-1 u[i]^-1
    std::vector<KernelLetter> image;
    if (l.index > k) {
      std::int64_t const j = l.index - k;
      image.push_back(Kernel::b(j));
      for (auto const& x : block(p.u(), j)) image.push_back(x);
      for (auto const& x : block(p.v(), j)) image.push_back(x);
    } else {
      std::int64_t const j = l.index;
      image.push_back(Kernel::b(j + k));
      auto vi = block(p.v(), j);
      auto ui = block(p.u(), j);
      for (auto x = vi.rbegin(); x != vi.rend(); ++x) image.push_back(x->inverse());
      for (auto x = ui.rbegin(); x != ui.rend(); ++x) image.push_back(x->inverse());
    }
    if (l.sign < 0) {
      std::reverse(image.begin(), image.end());
      for (auto& x : image) x = x.inverse();
    }
    std::vector<KernelLetter> next(cur.begin(), it);
    next.insert(next.end(), image.begin(), image.end());
    next.insert(next.end(), it + 1, cur.end());
    KernelWord const reduced = KernelWord::reduce(next);
    cur.assign(reduced.begin(), reduced.end());
  }
}

// ------------------------------------------------- subgroup membership by folding

// Stallings graph of a finitely generated subgroup of a free group whose
// letters are KernelLetters.
class FoldedGraph {
 public:
  explicit FoldedGraph(std::vector<KernelWord> const& gens) {
    parent_.push_back(0);
    for (KernelWord const& g : gens) {
      if (g.empty()) {
        continue;
      }
      int v = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        int const w = i + 1 == g.size() ? 0 : add_vertex();
        add_edge(v, g[i], w);
        v = w;
      }
    }
    fold();
  }

  bool accepts(KernelWord const& w) const {
    int v = find(0);
    for (KernelLetter const& l : w) {
      Label const lab{l.gen, l.index};
      auto const& table = l.sign > 0 ? out_ : in_;
      auto it = table.find({v, lab});
      if (it == table.end()) {
        return false;
      }
      v = find(it->second);
    }
    return v == find(0);
  }

 private:
  using Label = std::pair<std::int32_t, std::int64_t>;
  struct Edge {
    int from;
    Label label;
    int to;
  };

  int add_vertex() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(parent_.size()) - 1;
  }
  void add_edge(int from, KernelLetter const& l, int to) {
    Label const lab{l.gen, l.index};
    if (l.sign > 0) {
      edges_.push_back({from, lab, to});
    } else {
      edges_.push_back({to, lab, from});
    }
  }
  int find(int v) const {
    while (parent_[v] != v) {
      v = parent_[v];
    }
    return v;
  }
  void fold() {
    bool changed = true;
    while (changed) {
      changed = false;
      out_.clear();
      in_.clear();
      for (Edge const& e : edges_) {
        int const f = find(e.from), t = find(e.to);
        auto [o, fresh_o] = out_.try_emplace({f, e.label}, t);
        if (!fresh_o && find(o->second) != t) {
          parent_[find(o->second)] = t;
          changed = true;
          break;
        }
        auto [i, fresh_i] = in_.try_emplace({t, e.label}, f);
        if (!fresh_i && find(i->second) != f) {
          parent_[find(i->second)] = f;
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<int> parent_;
  std::vector<Edge> edges_;
  std::map<std::pair<int, Label>, int> out_;
  std::map<std::pair<int, Label>, int> in_;
};

// Is g in G_{lo,hi} = < b[l], y_j[l] : lo <= l <= hi > ?
inline bool in_window(Kernel const& kernel, KernelWord const& g, std::int64_t lo,
                      std::int64_t hi) {
  std::vector<KernelWord> gens;
  for (std::int64_t l = lo; l <= hi; ++l) {
    gens.push_back(iterative_canonical(kernel.presentation(), KernelWord::letter(Kernel::b(l))));
    for (std::int32_t j = 1; j <= kernel.y_count(); ++j) {
      gens.push_back(KernelWord::letter(KernelLetter{j, l, 1}));
    }
  }
  return FoldedGraph(gens).accepts(iterative_canonical(kernel.presentation(), g));
}

// Smallest window by size, then by start, over a generous search region.
inline std::optional<WidthInfo> brute_alpha_omega(Kernel const& kernel, KernelWord const& g) {
  KernelWord const c = iterative_canonical(kernel.presentation(), g);
  if (c.empty()) {
    return std::nullopt;
  }
  auto const nb = std::count_if(c.begin(), c.end(), [](KernelLetter const& l) { return l.is_b(); });
  std::int64_t const slack = kernel.k() * (nb + 2);
  std::int64_t const lo = min_index(c) - slack;
  std::int64_t const hi = max_index(c) + slack;
  for (std::int64_t size = 1; size <= hi - lo + 1; ++size) {
    for (std::int64_t i = lo; i + size - 1 <= hi; ++i) {
      if (in_window(kernel, g, i, i + size - 1)) {
        return WidthInfo{i, i + size - 1, size};
      }
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------- power of b

inline bool brute_power_of_b(Kernel const& kernel, KernelWord const& z, std::int64_t index_slack,
                             std::int64_t max_power) {
  CyclicWord<KernelLetter> const target(iterative_canonical(kernel.presentation(), z));
  KernelWord const c = iterative_canonical(kernel.presentation(), z);
  if (c.empty()) {
    return false;
  }
  for (std::int64_t i = min_index(c) - index_slack; i <= max_index(c) + index_slack; ++i) {
    for (std::int64_t m = -max_power; m <= max_power; ++m) {
      if (m == 0) {
        continue;
      }
      KernelWord const bm = power(KernelWord::letter(Kernel::b(i)), m);
      if (CyclicWord<KernelLetter>(iterative_canonical(kernel.presentation(), bm)) == target) {
        return true;
      }
    }
  }
  return false;
}

// ------------------------------------------------------- width minimality

// All reduced words up to length `len` over the given letters.
inline std::vector<KernelWord> short_kernel_words(std::vector<KernelLetter> const& letters,
                                                  std::size_t len) {
  std::vector<KernelWord> out{KernelWord{}};
  std::vector<KernelWord> frontier{KernelWord{}};
  for (std::size_t l = 1; l <= len; ++l) {
    std::vector<KernelWord> next;
    for (auto const& w : frontier) {
      for (auto const& x : letters) {
        if (!w.empty() && w.back().cancels(x)) {
          continue;
        }
        next.push_back(w * KernelWord::letter(x));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Canonical-basis letters with indices in [lo, hi].
inline std::vector<KernelLetter> basis_letters(Kernel const& kernel, std::int64_t lo,
                                               std::int64_t hi) {
  std::vector<KernelLetter> out;
  for (std::int64_t i = lo; i <= hi; ++i) {
    for (std::int32_t j = 1; j <= kernel.y_count(); ++j) {
      out.push_back({j, i, 1});
      out.push_back({j, i, -1});
    }
    if (1 <= i && i <= kernel.k()) {
      out.push_back(Kernel::b(i));
      out.push_back(Kernel::b(i, -1));
    }
  }
  return out;
}

// Smallest width over c^-1 g c for the given conjugators.
inline std::int64_t brute_min_width(Kernel const& kernel, KernelWord const& g,
                                    std::vector<KernelWord> const& conjugators) {
  std::int64_t best = kernel.alpha_omega(g).width;
  for (auto const& c : conjugators) {
    best = std::min(best, kernel.alpha_omega(conjugate(g, c)).width);
  }
  return best;
}

}  // namespace oracle
