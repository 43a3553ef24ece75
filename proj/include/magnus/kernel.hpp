#pragma once

// The kernel N of the map H -> Z that counts the Magnus generator x.
//
// N is generated by the letters b[i], y_j[i] (g[i] stands for x^-i g x^i)
// subject to w_i = b[i] u_i v_i = b[i+k]. For every integer base the set
//
//   B_base = { y_j[i] : all i, j } u { b[base], ..., b[base+k-1] }
//
// is a free basis of N; base = 1 gives the canonical basis. Every subgroup
// G_{i,j} = <Y_i, ..., Y_j> is generated by a subset of B_i (its left basis)
// and by a subset of B_{j-k+1} (its right basis), so membership and window
// questions reduce to rewriting in the right free basis.

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "magnus/presentation.hpp"
#include "magnus/words.hpp"

namespace magnus {

struct KernelLetter {
  std::int32_t gen = 0;  // 0 is b; j >= 1 is the j-th y generator
  std::int64_t index = 0;
  std::int32_t sign = 1;

  bool is_b() const noexcept { return gen == 0; }
  KernelLetter inverse() const noexcept { return {gen, index, -sign}; }
  bool cancels(KernelLetter const& o) const noexcept {
    return gen == o.gen && index == o.index && sign == -o.sign;
  }

  friend bool operator==(KernelLetter const&, KernelLetter const&) = default;
  friend std::strong_ordering operator<=>(KernelLetter const&,
                                          KernelLetter const&) = default;
};

using KernelWord = ReducedWord<KernelLetter>;

inline constexpr std::int64_t kIndexGuard = 1'000'000;

struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t size() const noexcept { return hi - lo + 1; }
  bool contains(std::int64_t i) const noexcept { return lo <= i && i <= hi; }
  friend bool operator==(Window const&, Window const&) = default;
};

// Reduced word in the canonical basis B_1.
class CanonicalKernelWord {
 public:
  KernelWord const& word() const noexcept { return word_; }
  bool empty() const noexcept { return word_.empty(); }
  std::size_t size() const noexcept { return word_.size(); }
  friend bool operator==(CanonicalKernelWord const&,
                         CanonicalKernelWord const&) = default;

 private:
  friend class Kernel;
  explicit CanonicalKernelWord(KernelWord w) : word_(std::move(w)) {}
  KernelWord word_;
};

struct WidthInfo {
  std::int64_t alpha = 0;
  std::int64_t omega = 0;
  std::int64_t width = 0;
  friend bool operator==(WidthInfo const&, WidthInfo const&) = default;
};

// kw == conjugator^-1 * core * conjugator in N, where core is cyclically
// reduced in B_alpha, all its letters lie in [alpha, omega], and no conjugate
// of kw lies in a narrower window (ties broken by the smallest alpha).
struct MinimalConjugate {
  WidthInfo window;
  KernelWord core;
  KernelWord conjugator;
};

KernelWord shift(KernelWord const& kw, std::int64_t i);
std::int64_t min_index(KernelWord const& kw);
std::int64_t max_index(KernelWord const& kw);

class Kernel {
 public:
  explicit Kernel(FamilyPresentation p);

  FamilyPresentation const& presentation() const noexcept { return p_; }
  std::int64_t k() const noexcept { return p_.k(); }
  std::int32_t y_count() const noexcept {
    return static_cast<std::int32_t>(p_.y_gens().size());
  }

  static KernelLetter b(std::int64_t i, int sign = 1) { return {0, i, sign}; }
  KernelLetter y(std::int32_t j, std::int64_t i, int sign = 1) const;

  // Residue of an index in [1, k]; N splits as the free product of the
  // subgroups generated by letters of each residue.
  std::int64_t residue(std::int64_t index) const noexcept;

  // b[i] u_i v_i
  KernelWord w_word(std::int64_t i) const;
  // u_i v_i
  KernelWord uv_word(std::int64_t i) const;

  KernelWord rs_rewrite(Word const& w) const;
  Word expand(KernelWord const& kw) const;

  // kw rewritten in the free basis B_base.
  KernelWord rewrite_to_base(KernelWord const& kw, std::int64_t base) const;
  CanonicalKernelWord canonicalize(KernelWord const& kw) const;

  KernelWord to_left_basis(KernelWord const& kw, Window win) const;
  KernelWord to_right_basis(KernelWord const& kw, Window win) const;

  // Smallest window G_{alpha,omega} containing kw, smallest alpha on ties.
  WidthInfo alpha_omega(KernelWord const& kw) const;
  // Same question over all conjugates of kw in N.
  MinimalConjugate minimal_width_conjugate(KernelWord const& kw) const;

  bool is_trivial(KernelWord const& kw) const;
  bool is_trivial_in_H(Word const& w) const;

  // b[i] and y_j[i] spelled with the presentation's generator names.
  Word to_word(KernelWord const& kw) const;
  KernelWord from_word(Word const& w) const;

 private:
  void append_b_image(KernelWord::Builder& out, std::int64_t m, int sign,
                      std::int64_t base) const;
  template <bool Cyclic>
  WidthInfo scan_windows(KernelWord const& kw, MinimalConjugate* out) const;

  FamilyPresentation p_;
  std::vector<std::pair<std::int32_t, std::int32_t>> u_;  // (gen, sign)
  std::vector<std::pair<std::int32_t, std::int32_t>> v_;
};

}  // namespace magnus
