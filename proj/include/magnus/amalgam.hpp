#pragma once

// Descriptors of the amalgamated splittings of G_{m,n} / <<r_j, ..., r_i>>
// where r_i = x^-i r x^i for a special element r. These are reports: windows,
// relator lists and identified pairs. No quotient arithmetic happens here.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magnus/kernel.hpp"
#include "magnus/special.hpp"

namespace magnus {

struct LeftRightSets {
  std::vector<std::int64_t> left_indices;  // l with w_l in the left set
  std::vector<KernelWord> left;            // w_l, increasing l
  std::vector<std::int64_t> right_indices;
  std::vector<KernelLetter> right;         // b_l, increasing l
};

LeftRightSets left_right_sets(Kernel const& kernel, SpecialElement const& r, std::int64_t i);

struct FactorDescriptor {
  std::optional<Window> window;        // nullopt when the window is empty
  std::vector<std::int64_t> relators;  // shifts of r modded out, increasing
};

struct Identification {
  std::int64_t l = 0;
  KernelWord w;    // w_l
  KernelLetter b;  // b[l + k]
};

enum class SplitLemma { Left, Right };  // s = alpha(r_i) / s = alpha(r_j) + 1

struct AmalgamSplit {
  SplitLemma lemma = SplitLemma::Left;
  std::int64_t s = 0;
  std::int64_t t = 0;
  FactorDescriptor left_factor;
  FactorDescriptor right_factor;
  std::optional<Window> edge_window;  // nullopt: trivial edge group (s > t)
  std::vector<std::int64_t> l_set;
  std::vector<Identification> identifications;
};

// Requires j <= i, m <= alpha(r_j), omega(r_i) <= n.
// s = alpha(r_i), t = omega(r_i) - 1:
//   G[m,t]/{r_j..r_{i-1}}  *_{G[s,t]}  G[s,n]/{r_i}
AmalgamSplit split_41(Kernel const& kernel, SpecialElement const& r, std::int64_t j,
                      std::int64_t i, std::int64_t m, std::int64_t n);
// s = alpha(r_j) + 1, t = omega(r_i):
//   G[m,t]/{r_j}  *_{G[s,t]}  G[s,n]/{r_{j+1}..r_i}
AmalgamSplit split_42(Kernel const& kernel, SpecialElement const& r, std::int64_t j,
                      std::int64_t i, std::int64_t m, std::int64_t n);

// Stable line-oriented rendering (edge, left, right, then one ident line per l).
std::string format_split(AmalgamSplit const& split, std::int64_t k);

enum class BasisSide { Right, Left };

// Right: the cyclic reduction of g in the right basis of G_{alpha,omega},
// rewritten in the right basis of G_{jprime,j} and cyclically reduced, contains a
// y-letter of index alpha. Left: the mirror statement with the left bases and
// index omega. Requires jprime <= alpha and omega <= j.
bool freiheitssatz_letter_check(Kernel const& kernel, KernelWord const& g, WidthInfo window,
                                std::int64_t jprime, std::int64_t j,
                                BasisSide side = BasisSide::Right);
bool freiheitssatz_letter_check(Kernel const& kernel, SpecialElement const& g,
                                std::int64_t jprime, std::int64_t j,
                                BasisSide side = BasisSide::Right);

}  // namespace magnus
