#pragma once

// Decision procedures for "do r and s have the same normal closure?".

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "magnus/presentation.hpp"
#include "magnus/words.hpp"

namespace magnus {

enum class VerdictKind { SameClosure, DifferentClosure };

enum class Reason {
  XExponentMismatch,
  WidthMismatch,
  WindowMismatch,
  CyclicWordMismatch,
  TrivialityMismatch,
};

std::string_view reason_name(Reason r);

// Group in which the conjugator is a word.
enum class Ambient { Free, G, H };

struct Verdict {
  VerdictKind kind = VerdictKind::DifferentClosure;
  int sign = 0;  // SameClosure only: +1 means r ~ s, -1 means r ~ s^-1
  // SameClosure only: conjugator^-1 r conjugator == s^sign in the ambient group.
  Word conjugator;
  std::optional<Reason> reason;  // DifferentClosure only
  Ambient ambient = Ambient::G;
  // Ambient H only: a conjugator over the original generators, when one could
  // be read off and checked.
  std::optional<Word> g_conjugator;
  std::int64_t psi_power = 0;

  bool same() const noexcept { return kind == VerdictKind::SameClosure; }
};

Verdict free_magnus(Word const& r, Word const& s);
bool verify_free_certificate(Word const& r, Word const& s, Verdict const& v);

enum class Route {
  Auto,        // b-exponent of r decides: swap if zero, embed otherwise
  MagnusA,     // use the presentation's own Magnus generator (needs r_x = 0)
  Swap,        // force the swapped presentation (needs r_b = 0)
};

struct DecideOptions {
  Route route = Route::Auto;
  std::int64_t psi_cap = 64;
};

// p is the presentation of the group. For k = 1 (the relator [a,b]uv) any
// r, s are accepted; for k > 1 the element r must have zero x-exponent.
Verdict magnus_same_closure(FamilyPresentation const& p, Word const& r, Word const& s,
                            DecideOptions const& opts = {});

// Conjugators mentioning `_x` or `_bbar` are checked in the group H obtained
// by embed_into_H(p, r); anything else is checked in p's group directly.
bool verify_certificate(FamilyPresentation const& p, Word const& r, Word const& s,
                        Verdict const& v);

struct OracleBounds {
  std::int64_t depth = 2;
  std::int64_t conj_len = 2;
  std::size_t max_products = 2'000'000;
};

// Is target a product of at most depth conjugates of r^+-1, each conjugator a
// reduced word of length <= conj_len over `alphabet`? Equality is tested in
// p's group, or in the free group on `alphabet` when p is absent.
bool nc_member_bounded(Word const& target, Word const& r, FamilyPresentation const* p,
                       std::span<std::string const> alphabet, OracleBounds const& bounds);
bool nc_member_bounded(Word const& target, Word const& r, FamilyPresentation const& p,
                       OracleBounds const& bounds);

}  // namespace magnus
