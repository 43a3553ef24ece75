#include "magnus/decide.hpp"

#include <set>
#include <stdexcept>

#include "magnus/error.hpp"
#include "magnus/kernel.hpp"
#include "magnus/special.hpp"

namespace magnus {

std::string_view reason_name(Reason r) {
  switch (r) {
    case Reason::XExponentMismatch: return "XExponentMismatch";
    case Reason::WidthMismatch: return "WidthMismatch";
    case Reason::WindowMismatch: return "WindowMismatch";
    case Reason::CyclicWordMismatch: return "CyclicWordMismatch";
    case Reason::TrivialityMismatch: return "TrivialityMismatch";
  }
  return "Unknown";
}

namespace {

Verdict same(int sign, Word conjugator, Ambient ambient) {
  Verdict v;
  v.kind = VerdictKind::SameClosure;
  v.sign = sign;
  v.conjugator = std::move(conjugator);
  v.ambient = ambient;
  return v;
}

Verdict different(Reason reason, Ambient ambient) {
  Verdict v;
  v.kind = VerdictKind::DifferentClosure;
  v.reason = reason;
  v.ambient = ambient;
  return v;
}

// h^-1 r h s^-sign
Word certificate_residue(Word const& r, Word const& s, Word const& h, int sign) {
  return invert(h) * r * h * power(s, -sign);
}

void require_alphabet(FamilyPresentation const& p, Word const& w) {
  for (Letter const& l : w) {
    if (l.sym.index || !p.has_generator(l.sym.name)) {
      throw Error(Errc::ForeignLetter, to_string(l) + " is not a generator of " + describe(p));
    }
  }
}

bool uses_reserved(Word const& w) {
  for (Letter const& l : w) {
    if (is_reserved_name(l.sym.name)) {
      return true;
    }
  }
  return false;
}

// Rewrites an H-conjugator over a, b, y using bbar = x^(o r_a) b and
// a = x^k, provided every maximal run of x has exponent divisible by k.
std::optional<Word> project_to_g(FamilyPresentation const& p, Embedding const& emb,
                                 Word const& h) {
  std::string const x(kReservedMagnus);
  HomMap back;
  back[x] = Word::letter(gen(x));
  back[std::string(kReservedBbar)] =
      gen_power(x, emb.orientation * emb.r_a) * Word::letter(gen(p.b_gen()));
  for (auto const& y : p.y_gens()) {
    back[y] = Word::letter(gen(y));
  }
  Word const mixed = apply_hom(h, back);
  std::int64_t const k = emb.group.k();
  Word::Builder out;
  std::int64_t run = 0;
  auto flush = [&]() {
    if (run % k != 0) {
      return false;
    }
    out.append(gen_power(p.magnus_gen(), run / k));
    run = 0;
    return true;
  };
  for (Letter const& l : mixed) {
    if (l.sym.name == x) {
      run += l.sign;
      continue;
    }
    if (!flush()) {
      return std::nullopt;
    }
    out.push(l);
  }
  if (!flush()) {
    return std::nullopt;
  }
  return std::move(out).build();
}

}  // namespace

Verdict free_magnus(Word const& r, Word const& s) {
  if (r.empty() != s.empty()) {
    return different(Reason::TrivialityMismatch, Ambient::Free);
  }
  if (auto h = is_conjugate_free(r, s)) {
    return same(+1, std::move(*h), Ambient::Free);
  }
  if (auto h = is_conjugate_free(r, invert(s))) {
    return same(-1, std::move(*h), Ambient::Free);
  }
  return different(Reason::CyclicWordMismatch, Ambient::Free);
}

bool verify_free_certificate(Word const& r, Word const& s, Verdict const& v) {
  if (!v.same() || (v.sign != 1 && v.sign != -1)) {
    return false;
  }
  return certificate_residue(r, s, v.conjugator, v.sign).empty();
}

Verdict magnus_same_closure(FamilyPresentation const& p, Word const& r, Word const& s,
                            DecideOptions const& opts) {
  require_alphabet(p, r);
  require_alphabet(p, s);

  Kernel const base(p);
  bool const r_trivial = base.is_trivial_in_H(r);
  if (r_trivial != base.is_trivial_in_H(s)) {
    return different(Reason::TrivialityMismatch, Ambient::G);
  }
  if (r_trivial) {
    return same(+1, Word{}, Ambient::G);
  }

  std::int64_t const r_x = exponent_sum(r, p.magnus_gen());
  std::int64_t const r_b = exponent_sum(r, p.b_gen());
  Route route = opts.route;
  if (route == Route::Auto) {
    route = p.k() != 1 ? Route::MagnusA : (r_b == 0 ? Route::Swap : Route::Auto);
  }

  std::optional<FamilyPresentation> working;
  std::optional<Embedding> emb;
  Word r_h = r;
  Word s_h = s;
  Ambient ambient = Ambient::G;
  switch (route) {
    case Route::MagnusA:
      if (r_x != 0) {
        throw Error(Errc::NonzeroXExponent,
                    "route through " + p.magnus_gen() + " needs zero exponent sum of it in r");
      }
      working = p;
      break;
    case Route::Swap:
      if (r_b != 0) {
        throw Error(Errc::PreconditionViolated, "swap route needs zero exponent sum of " + p.b_gen());
      }
      working = swap_presentation(p);
      break;
    case Route::Auto:
      emb = embed_into_H(p, r);
      working = emb->group;
      r_h = apply_hom(r, emb->lift);
      s_h = apply_hom(s, emb->lift);
      ambient = Ambient::H;
      break;
  }

  Kernel const kernel(*working);
  if (exponent_sum(s_h, working->magnus_gen()) != 0) {
    return different(Reason::XExponentMismatch, ambient);
  }
  KernelWord const rk = kernel.rs_rewrite(r_h);
  KernelWord const sk = kernel.rs_rewrite(s_h);

  // One psi power for both elements.
  std::int64_t n = 0;
  SpecialElement rs, ss;
  for (;;) {
    rs = specialize(kernel, rk, {opts.psi_cap, n});
    ss = specialize(kernel, sk, {opts.psi_cap, rs.psi_power});
    if (ss.psi_power == rs.psi_power) {
      break;
    }
    n = ss.psi_power;
  }
  n = rs.psi_power;

  if (rs.width != ss.width) {
    return different(Reason::WidthMismatch, ambient);
  }
  if (rs.pieces.size() != ss.pieces.size()) {
    return different(Reason::WindowMismatch, ambient);
  }
  std::int64_t const shift_by = ss.alpha - rs.alpha;
  KernelWord const cr = kernel.canonicalize(shift(rs.element, shift_by)).word();
  KernelWord const cs = kernel.canonicalize(ss.element).word();
  int sign = +1;
  auto f = is_conjugate_free(cr, cs);
  if (!f) {
    sign = -1;
    f = is_conjugate_free(invert(cr), cs);
  }
  if (!f) {
    return different(Reason::CyclicWordMismatch, ambient);
  }

  // s* = f^-1 x^-j r*^sign x^j f with r* = c_r^-1 psi^n(r) c_r and likewise
  // for s*, so T = c_r x^j f c_s^-1 conjugates psi^n(r)^sign to psi^n(s).
  Word const t = rs.conjugator * gen_power(working->magnus_gen(), shift_by) *
                 kernel.expand(*f) * invert(ss.conjugator);
  Word const h = psi_apply(*working, t, -n);
  if (!kernel.is_trivial_in_H(certificate_residue(r_h, s_h, h, sign))) {
    throw std::logic_error("assembled conjugator failed verification");
  }
  Verdict v = same(sign, h, ambient);
  v.psi_power = n;
  if (emb) {
    if (auto g = project_to_g(p, *emb, h); g && base.is_trivial_in_H(certificate_residue(r, s, *g, sign))) {
      v.g_conjugator = std::move(g);
    }
  }
  return v;
}

bool verify_certificate(FamilyPresentation const& p, Word const& r, Word const& s,
                        Verdict const& v) {
  if (!v.same() || (v.sign != 1 && v.sign != -1)) {
    return false;
  }
  try {
    if (uses_reserved(v.conjugator)) {
      if (p.k() != 1) {
        return false;
      }
      Embedding const emb = embed_into_H(p, r);
      Kernel const kernel(emb.group);
      return kernel.is_trivial_in_H(certificate_residue(
          apply_hom(r, emb.lift), apply_hom(s, emb.lift), v.conjugator, v.sign));
    }
    require_alphabet(p, v.conjugator);
    return Kernel(p).is_trivial_in_H(certificate_residue(r, s, v.conjugator, v.sign));
  } catch (Error const& e) {
    if (e.code() == Errc::ZeroBExponent || e.code() == Errc::ForeignLetter) {
      return false;
    }
    throw;
  }
}

bool nc_member_bounded(Word const& target, Word const& r, FamilyPresentation const* p,
                       std::span<std::string const> alphabet, OracleBounds const& bounds) {
  if (bounds.depth < 1 || bounds.conj_len < 0) {
    throw Error(Errc::PreconditionViolated, "oracle needs depth >= 1 and conj_len >= 0");
  }
  std::optional<Kernel> kernel;
  if (p) {
    kernel.emplace(*p);
  }
  Word const target_inv = invert(target);
  auto equals_target = [&](Word const& w) {
    return kernel ? kernel->is_trivial_in_H(target_inv * w) : w == target;
  };
  if (equals_target(Word{})) {
    return true;
  }

  std::vector<Letter> letters;
  for (auto const& name : alphabet) {
    letters.push_back(gen(name, 1));
    letters.push_back(gen(name, -1));
  }
  std::vector<Word> conjugators{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::int64_t len = 1; len <= bounds.conj_len; ++len) {
    std::vector<Word> next;
    for (Word const& w : frontier) {
      for (Letter const& l : letters) {
        if (!w.empty() && w.back().cancels(l)) {
          continue;
        }
        next.push_back(w * Word::letter(l));
        if (conjugators.size() + next.size() > bounds.max_products) {
          throw Error(Errc::ResourceCap, "too many conjugators for the oracle bounds");
        }
      }
    }
    conjugators.insert(conjugators.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::set<Word> conjugates;
  for (Word const& h : conjugators) {
    conjugates.insert(conjugate(r, h));
    conjugates.insert(conjugate(invert(r), h));
  }
  double total = 0;
  double layer = 1;
  for (std::int64_t d = 0; d < bounds.depth; ++d) {
    layer *= static_cast<double>(conjugates.size());
    total += layer;
  }
  if (total > static_cast<double>(bounds.max_products)) {
    throw Error(Errc::ResourceCap, "oracle bounds would enumerate " +
                                       std::to_string(static_cast<long long>(total)) +
                                       " products");
  }

  std::set<Word> level{Word{}};
  for (std::int64_t d = 1; d <= bounds.depth; ++d) {
    std::set<Word> next;
    for (Word const& w : level) {
      for (Word const& c : conjugates) {
        Word q = w * c;
        if (next.contains(q)) {
          continue;
        }
        if (equals_target(q)) {
          return true;
        }
        next.insert(std::move(q));
      }
    }
    level = std::move(next);
  }
  return false;
}

bool nc_member_bounded(Word const& target, Word const& r, FamilyPresentation const& p,
                       OracleBounds const& bounds) {
  auto const names = p.generators();
  return nc_member_bounded(target, r, &p, names, bounds);
}

}  // namespace magnus
