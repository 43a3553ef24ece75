#pragma once

// Presentations <x, b, y_1..y_e | [x^k, b] u v> and the moves between them.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magnus/words.hpp"

namespace magnus {

struct RawPresentation {
  std::string magnus_gen;
  std::string b_gen;
  std::vector<std::string> y_gens;
  std::int64_t k = 1;
  Word u;
  Word v;
};

class FamilyPresentation {
 public:
  std::string const& magnus_gen() const noexcept { return data_.magnus_gen; }
  std::string const& b_gen() const noexcept { return data_.b_gen; }
  std::vector<std::string> const& y_gens() const noexcept {
    return data_.y_gens;
  }
  std::int64_t k() const noexcept { return data_.k; }
  Word const& u() const noexcept { return data_.u; }
  Word const& v() const noexcept { return data_.v; }

  // x^-k b^-1 x^k b u v
  Word relator() const;
  // magnus_gen, b_gen, then y_gens in order.
  std::vector<std::string> generators() const;
  bool has_generator(std::string_view name) const;
  std::optional<std::size_t> y_slot(std::string_view name) const;

  RawPresentation const& raw() const noexcept { return data_; }

  friend bool operator==(FamilyPresentation const& a,
                         FamilyPresentation const& b) {
    return a.data_.magnus_gen == b.data_.magnus_gen &&
           a.data_.b_gen == b.data_.b_gen && a.data_.y_gens == b.data_.y_gens &&
           a.data_.k == b.data_.k && a.data_.u == b.data_.u &&
           a.data_.v == b.data_.v;
  }

 private:
  friend FamilyPresentation validate_impl(RawPresentation raw,
                                          bool allow_reserved);
  explicit FamilyPresentation(RawPresentation raw) : data_(std::move(raw)) {}
  RawPresentation data_;
};

// Rejects reserved generator names; see validate_internal for the fresh
// generators introduced by embed_into_H.
FamilyPresentation validate(RawPresentation raw);
FamilyPresentation validate_internal(RawPresentation raw);

// Generators a, b, y1..y_{g-2}; relator [a,b] y1^2 ... y_{g-2}^2 with
// u = y1^2..y_s^2 and v the remaining squares, s = u_squares.
FamilyPresentation from_surface_genus(std::int64_t genus,
                                      std::int64_t u_squares = 1);

// <a,b,y | [a,b]uv>  ->  <b,a,y | [b,a] v^-1 u^-1>; generators keep their
// names, so words need no rewriting.
FamilyPresentation swap_presentation(FamilyPresentation const& p);

struct Embedding {
  FamilyPresentation group;  // magnus `_x`, b-role `_bbar`, k = |r_b|
  HomMap lift;               // generators of p -> words of group
  std::int64_t r_a = 0;
  std::int64_t r_b = 0;
  // +1, or -1 when x was replaced by x^-1 to make k positive.
  int orientation = 1;
};

// G = <a,b,y | [a,b]uv> into G *_{a = x^{r_b}} <x> rewritten over
// x, bbar = x^{r_a} b.
Embedding embed_into_H(FamilyPresentation const& p, Word const& r);

struct PsiMap {
  HomMap forward;
  HomMap backward;
};

PsiMap psi(FamilyPresentation const& p);
Word psi_apply(FamilyPresentation const& p, Word const& w, std::int64_t n);
Word psi_apply(PsiMap const& map, Word const& w, std::int64_t n);

// `key = value` lines: magnus_gen, b_gen, y_gens (comma separated), k, u, v;
// or the single shorthand `surface_genus = N`. `#` starts a comment.
FamilyPresentation parse_presentation_config(std::string_view text);

std::string describe(FamilyPresentation const& p);

}  // namespace magnus
