#include "magnus/special.hpp"

#include <algorithm>

#include "magnus/error.hpp"

namespace magnus {

PieceDecomposition split_pieces(Kernel const& kernel, KernelWord const& basis_word) {
  PieceDecomposition out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= basis_word.size(); ++i) {
    if (i == basis_word.size() ||
        kernel.residue(basis_word[i].index) != kernel.residue(basis_word[start].index)) {
      out.pieces.push_back(basis_word.subword(start, i - start));
      out.residues.push_back(kernel.residue(basis_word[start].index));
      start = i;
    }
  }
  return out;
}

PieceDecomposition pieces(Kernel const& kernel, KernelWord const& kw) {
  auto const canon = kernel.canonicalize(kw);
  if (canon.empty()) {
    throw Error(Errc::TrivialElement, "the trivial element has no pieces");
  }
  return split_pieces(kernel, canon.word());
}

// In the canonical basis the cyclic word of b[i]^m is (b[r] T)^m, with r the
// residue of i and T a product of t = |i - r| / k blocks u_j v_j (or their
// inverses). The b-letter count fixes m and the length fixes t, leaving two
// candidates i = r +- t k.
bool is_power_of_b_conjugate(Kernel const& kernel, KernelWord const& z) {
  KernelWord const core = cyclic_reduce(kernel.canonicalize(z).word()).core;
  if (core.empty()) {
    return false;
  }
  std::optional<KernelLetter> b_letter;
  std::size_t count = 0;
  for (auto const& l : core) {
    if (!l.is_b()) {
      continue;
    }
    if (b_letter && *b_letter != l) {
      return false;
    }
    b_letter = l;
    ++count;
  }
  if (!b_letter || core.size() % count != 0) {
    return false;
  }
  std::size_t const block = kernel.presentation().u().size() + kernel.presentation().v().size();
  std::size_t const tail = core.size() / count - 1;
  if (tail % block != 0) {
    return false;
  }
  auto const t = static_cast<std::int64_t>(tail / block);
  std::int64_t const m = b_letter->sign * static_cast<std::int64_t>(count);
  CyclicWord<KernelLetter> const target(core);
  for (std::int64_t i : {b_letter->index + t * kernel.k(), b_letter->index - t * kernel.k()}) {
    KernelWord const candidate = power(KernelWord::letter(Kernel::b(i)), m);
    if (CyclicWord<KernelLetter>(kernel.canonicalize(candidate).word()) == target) {
      return true;
    }
  }
  return false;
}

namespace {

// Rotate a cyclically reduced basis word until its first and last pieces lie
// in different factors. Each rotation merges the last and first pieces.
// Keeps K == f^-1 core f for the element K being normalized.
KernelWord rotate_pieces(Kernel const& kernel, KernelWord core, KernelWord& f) {
  for (;;) {
    PieceDecomposition const p = split_pieces(kernel, core);
    if (p.size() < 2 || p.residues.front() != p.residues.back()) {
      return core;
    }
    KernelWord const& first = p.pieces.front();
    KernelWord rest = core.subword(first.size(), core.size() - first.size());
    core = rest * first;
    f = invert(first) * f;
  }
}

}  // namespace

SpecialElement specialize(Kernel const& kernel, KernelWord const& kw,
                          SpecializeOptions const& opts) {
  if (kernel.is_trivial(kw)) {
    throw Error(Errc::TrivialElement, "cannot specialize the trivial element");
  }
  PsiMap const map = psi(kernel.presentation());
  Word h = psi_apply(map, kernel.expand(kw), opts.min_psi_power);
  for (std::int64_t n = opts.min_psi_power; n <= opts.psi_cap; ++n) {
    MinimalConjugate mc = kernel.minimal_width_conjugate(kernel.rs_rewrite(h));
    KernelWord f = mc.conjugator;
    KernelWord core = rotate_pieces(kernel, mc.core, f);
    PieceDecomposition pcs = split_pieces(kernel, core);
    bool const clean = std::none_of(pcs.pieces.begin(), pcs.pieces.end(), [&](KernelWord const& z) {
      return is_power_of_b_conjugate(kernel, z);
    });
    if (clean) {
      return SpecialElement{std::move(core),         std::move(pcs),
                            mc.window.alpha,         mc.window.omega,
                            mc.window.width,         kernel.expand(invert(f)),
                            n};
    }
    h = apply_hom(h, map.forward);
  }
  throw Error(Errc::IterationCapExceeded,
              "no psi power up to " + std::to_string(opts.psi_cap) +
                  " removes every piece conjugate to a power of b");
}

bool is_special(Kernel const& kernel, SpecialElement const& g) {
  if (g.element.empty() || !is_cyclically_reduced(g.element)) {
    return false;
  }
  PieceDecomposition const p = split_pieces(kernel, kernel.rewrite_to_base(g.element, g.alpha));
  if (p.size() > 1 && p.residues.front() == p.residues.back()) {
    return false;
  }
  if (kernel.minimal_width_conjugate(g.element).window.width != g.width) {
    return false;
  }
  if (kernel.alpha_omega(g.element) != WidthInfo{g.alpha, g.omega, g.width}) {
    return false;
  }
  return std::none_of(p.pieces.begin(), p.pieces.end(), [&](KernelWord const& z) {
    return is_power_of_b_conjugate(kernel, z);
  });
}

}  // namespace magnus
