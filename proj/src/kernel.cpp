#include "magnus/kernel.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "magnus/error.hpp"

namespace magnus {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(Errc::IndexOverflow, "kernel index arithmetic overflowed");
  }
  return out;
}

void guard_index(std::int64_t i) {
  if (i > kIndexGuard || i < -kIndexGuard) {
    throw Error(Errc::ResourceCap,
                "kernel index " + std::to_string(i) + " exceeds the guard of " +
                    std::to_string(kIndexGuard));
  }
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

KernelWord shift(KernelWord const& kw, std::int64_t i) {
  KernelWord::Builder out;
  for (KernelLetter l : kw) {
    l.index = checked_add(l.index, i);
    out.push(l);
  }
  return std::move(out).build();
}

std::int64_t min_index(KernelWord const& kw) {
  std::int64_t m = std::numeric_limits<std::int64_t>::max();
  for (auto const& l : kw) {
    m = std::min(m, l.index);
  }
  return kw.empty() ? 0 : m;
}

std::int64_t max_index(KernelWord const& kw) {
  std::int64_t m = std::numeric_limits<std::int64_t>::min();
  for (auto const& l : kw) {
    m = std::max(m, l.index);
  }
  return kw.empty() ? 0 : m;
}

Kernel::Kernel(FamilyPresentation p) : p_(std::move(p)) {
  auto encode = [&](Word const& w, auto& out) {
    for (Letter const& l : w) {
      out.emplace_back(static_cast<std::int32_t>(*p_.y_slot(l.sym.name)) + 1, l.sign);
    }
  };
  encode(p_.u(), u_);
  encode(p_.v(), v_);
}

KernelLetter Kernel::y(std::int32_t j, std::int64_t i, int sign) const {
  if (j < 1 || j > y_count()) {
    throw Error(Errc::PreconditionViolated, "no y generator with slot " + std::to_string(j));
  }
  return {j, i, sign};
}

std::int64_t Kernel::residue(std::int64_t index) const noexcept {
  return floor_mod(index - 1, k()) + 1;
}

KernelWord Kernel::uv_word(std::int64_t i) const {
  KernelWord::Builder out;
  for (auto [g, s] : u_) {
    out.push({g, i, s});
  }
  for (auto [g, s] : v_) {
    out.push({g, i, s});
  }
  return std::move(out).build();
}

KernelWord Kernel::w_word(std::int64_t i) const {
  return KernelWord::Builder(KernelWord::letter(b(i))).append(uv_word(i)).build();
}

KernelWord Kernel::rs_rewrite(Word const& w) const {
  std::string const& x = p_.magnus_gen();
  if (exponent_sum(w, x) != 0) {
    throw Error(Errc::NonzeroXExponent,
                "exponent sum of " + x + " in '" + to_string(w) + "' is " +
                    std::to_string(exponent_sum(w, x)));
  }
  KernelWord::Builder out;
  std::int64_t prefix = 0;
  for (Letter const& l : w) {
    if (l.sym.index) {
      throw Error(Errc::ForeignLetter, "indexed letter " + to_string(l) + " in a word of H");
    }
    if (l.sym.name == x) {
      prefix += l.sign;
      continue;
    }
    std::int32_t g = 0;
    if (l.sym.name != p_.b_gen()) {
      auto slot = p_.y_slot(l.sym.name);
      if (!slot) {
        throw Error(Errc::ForeignLetter, "generator " + l.sym.name + " is not in the presentation");
      }
      g = static_cast<std::int32_t>(*slot) + 1;
    }
    // x^p g x^-p = g[-p]
    out.push({g, -prefix, l.sign});
  }
  return std::move(out).build();
}

Word Kernel::expand(KernelWord const& kw) const {
  Word::Builder out;
  std::string const& x = p_.magnus_gen();
  std::int64_t offset = 0;  // x-exponent emitted so far
  auto move_to = [&](std::int64_t target) {
    for (; offset < target; ++offset) {
      out.push(gen(x, 1));
    }
    for (; offset > target; --offset) {
      out.push(gen(x, -1));
    }
  };
  for (auto const& l : kw) {
    // g[i] = x^-i g x^i
    move_to(-l.index);
    out.push(gen(l.is_b() ? p_.b_gen() : p_.y_gens()[l.gen - 1], l.sign));
  }
  move_to(0);
  return std::move(out).build();
}

void Kernel::append_b_image(KernelWord::Builder& out, std::int64_t m, int sign,
                            std::int64_t base) const {
  std::int64_t const k = this->k();
  std::vector<KernelLetter> img;
  auto append_uv = [&](std::int64_t i, bool inverse) {
    if (!inverse) {
      for (auto [g, s] : u_) img.push_back({g, i, s});
      for (auto [g, s] : v_) img.push_back({g, i, s});
    } else {
      for (auto it = v_.rbegin(); it != v_.rend(); ++it) img.push_back({it->first, i, -it->second});
      for (auto it = u_.rbegin(); it != u_.rend(); ++it) img.push_back({it->first, i, -it->second});
    }
  };
  if (m >= base && m - base < k) {
    img.push_back(b(m));
  } else if (m >= base) {
    // b[m] = b[m-k] u_{m-k} v_{m-k} = b[r] P_r P_{r+k} ... P_{m-k}
    std::int64_t const r = base + floor_mod(m - base, k);
    img.push_back(b(r));
    for (std::int64_t i = r; i < m; i += k) {
      append_uv(i, false);
    }
  } else {
    // b[m] = b[m+k] v_m^-1 u_m^-1 = b[r] Q_{r-k} ... Q_{m+k} Q_m
    std::int64_t const r = m + ((base - m + k - 1) / k) * k;
    img.push_back(b(r));
    for (std::int64_t i = r - k; i >= m; i -= k) {
      append_uv(i, true);
    }
  }
  if (sign > 0) {
    for (auto const& l : img) out.push(l);
  } else {
    for (auto it = img.rbegin(); it != img.rend(); ++it) out.push(it->inverse());
  }
}

KernelWord Kernel::rewrite_to_base(KernelWord const& kw, std::int64_t base) const {
  guard_index(base);
  KernelWord::Builder out;
  for (auto const& l : kw) {
    guard_index(l.index);
    if (l.is_b()) {
      append_b_image(out, l.index, l.sign, base);
    } else {
      out.push(l);
    }
  }
  return std::move(out).build();
}

CanonicalKernelWord Kernel::canonicalize(KernelWord const& kw) const {
  return CanonicalKernelWord(rewrite_to_base(kw, 1));
}

namespace {

void require_in_window(KernelWord const& kw, Window win) {
  if (win.lo > win.hi) {
    throw Error(Errc::PreconditionViolated, "empty window");
  }
  for (auto const& l : kw) {
    if (!win.contains(l.index)) {
      throw Error(Errc::PreconditionViolated,
                  "letter index " + std::to_string(l.index) + " outside window [" +
                      std::to_string(win.lo) + "," + std::to_string(win.hi) + "]");
    }
  }
}

}  // namespace

KernelWord Kernel::to_left_basis(KernelWord const& kw, Window win) const {
  require_in_window(kw, win);
  return rewrite_to_base(kw, win.lo);
}

KernelWord Kernel::to_right_basis(KernelWord const& kw, Window win) const {
  require_in_window(kw, win);
  return rewrite_to_base(kw, win.hi - k() + 1);
}

// Let W_i be kw written in B_i (cyclically reduced when Cyclic). kw lies in
// G_{i,j} iff every letter of W_i has index in [i, j], so for a given i the
// best j is max(i, max index of W_i) provided no y-letter of W_i sits below i.
//
// If W_{i+1} has no letter of index i, passing to B_i only replaces each
// b[i+k] by b[i] u_i v_i and nothing cancels. Hence the feasible starts form
// a ray (-inf, i_max], y-letters persist as i decreases, and once
// i <= (max y index) - k + 1 the width grows strictly. Both ends of the scan
// are therefore finite.
template <bool Cyclic>
WidthInfo Kernel::scan_windows(KernelWord const& kw, MinimalConjugate* out) const {
  if (is_trivial(kw)) {
    throw Error(Errc::TrivialElement, "the element is trivial in N");
  }
  auto form = [&](std::int64_t i) {
    KernelWord w = rewrite_to_base(kw, i);
    if constexpr (Cyclic) {
      return cyclic_reduce(w);
    } else {
      return CyclicReduction<KernelLetter>{std::move(w), {}};
    }
  };
  auto feasible = [&](KernelWord const& w, std::int64_t i) {
    return std::all_of(w.begin(), w.end(),
                       [&](KernelLetter const& l) { return l.is_b() || l.index >= i; });
  };

  std::int64_t const i0 = min_index(kw);
  auto const start = form(i0);
  if (!feasible(start.core, i0)) {
    throw std::logic_error("window scan: lowest start is not feasible");
  }
  std::int64_t const upper = checked_add(max_index(start.core), k());
  std::int64_t imax = i0;
  while (imax < upper && feasible(form(imax + 1).core, imax + 1)) {
    ++imax;
  }

  WidthInfo best{0, 0, std::numeric_limits<std::int64_t>::max()};
  std::int64_t const step_guard = 4 * k() + 8;
  for (std::int64_t i = imax;; --i) {
    if (imax - i > step_guard) {
      throw std::logic_error("window scan did not settle");
    }
    auto current = form(i);
    std::int64_t const j = std::max(i, max_index(current.core));
    if (j - i + 1 <= best.width) {
      best = {i, j, j - i + 1};
      if (out) {
        out->window = best;
        out->core = current.core;
        out->conjugator = current.conjugator;
      }
    }
    std::optional<std::int64_t> ymax;
    for (auto const& l : current.core) {
      if (!l.is_b()) {
        ymax = std::max(ymax.value_or(l.index), l.index);
      }
    }
    if (ymax && i <= *ymax - k() + 1) {
      break;
    }
  }
  return best;
}

WidthInfo Kernel::alpha_omega(KernelWord const& kw) const {
  return scan_windows<false>(kw, nullptr);
}

MinimalConjugate Kernel::minimal_width_conjugate(KernelWord const& kw) const {
  MinimalConjugate out;
  scan_windows<true>(kw, &out);
  return out;
}

bool Kernel::is_trivial(KernelWord const& kw) const { return canonicalize(kw).empty(); }

bool Kernel::is_trivial_in_H(Word const& w) const {
  if (exponent_sum(w, p_.magnus_gen()) != 0) {
    return false;
  }
  return is_trivial(rs_rewrite(w));
}

Word Kernel::to_word(KernelWord const& kw) const {
  Word::Builder out;
  for (auto const& l : kw) {
    out.push(gen(l.is_b() ? p_.b_gen() : p_.y_gens()[l.gen - 1], l.index, l.sign));
  }
  return std::move(out).build();
}

KernelWord Kernel::from_word(Word const& w) const {
  KernelWord::Builder out;
  for (Letter const& l : w) {
    if (!l.sym.index) {
      throw Error(Errc::ForeignLetter, "kernel letters need an index: " + to_string(l));
    }
    std::int32_t g = 0;
    if (l.sym.name != p_.b_gen()) {
      auto slot = p_.y_slot(l.sym.name);
      if (!slot) {
        throw Error(Errc::ForeignLetter, to_string(l) + " is not a kernel letter");
      }
      g = static_cast<std::int32_t>(*slot) + 1;
    }
    out.push({g, *l.sym.index, l.sign});
  }
  return std::move(out).build();
}

}  // namespace magnus
