#pragma once

// Pieces of kernel elements with respect to N = N_1 * ... * N_k and the
// normalization of an element to a special one.

#include <cstdint>
#include <vector>

#include "magnus/kernel.hpp"

namespace magnus {

struct PieceDecomposition {
  std::vector<KernelWord> pieces;
  std::vector<std::int64_t> residues;  // in [1, k], adjacent entries differ

  std::size_t size() const noexcept { return pieces.size(); }
};

// kw is taken to be a word in the free basis B_base.
PieceDecomposition split_pieces(Kernel const& kernel, KernelWord const& basis_word);
// Normal form of kw: canonicalize, then split into maximal same-residue runs.
PieceDecomposition pieces(Kernel const& kernel, KernelWord const& kw);

// Is z conjugate in H to b^m for some m != 0? Conjugating by x^i shifts
// indices, so this asks whether z is conjugate in N to some b[i]^m.
bool is_power_of_b_conjugate(Kernel const& kernel, KernelWord const& z);

struct SpecialElement {
  KernelWord element;  // word in B_alpha, cyclically reduced
  PieceDecomposition pieces;
  std::int64_t alpha = 0;
  std::int64_t omega = 0;
  std::int64_t width = 0;
  // expand(element) == conjugator^-1 psi^psi_power(expand(input)) conjugator
  Word conjugator;
  std::int64_t psi_power = 0;
};

struct SpecializeOptions {
  std::int64_t psi_cap = 64;
  std::int64_t min_psi_power = 0;
};

SpecialElement specialize(Kernel const& kernel, KernelWord const& kw,
                          SpecializeOptions const& opts = {});

// Does the element already satisfy the three conditions of a special element?
// Used as a postcondition check on specialize outputs.
bool is_special(Kernel const& kernel, SpecialElement const& g);

}  // namespace magnus
