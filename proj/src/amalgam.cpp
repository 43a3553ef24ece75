#include "magnus/amalgam.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "magnus/error.hpp"

namespace magnus {

LeftRightSets left_right_sets(Kernel const& kernel, SpecialElement const& r, std::int64_t i) {
  std::int64_t const alpha = r.alpha + i;
  std::int64_t const omega = r.omega + i;
  std::int64_t const k = kernel.k();
  LeftRightSets out;
  for (std::int64_t l = omega - k; l <= alpha - 1; ++l) {
    out.left_indices.push_back(l);
    out.left.push_back(kernel.w_word(l));
  }
  for (std::int64_t l = omega; l <= alpha - 1 + k; ++l) {
    out.right_indices.push_back(l);
    out.right.push_back(Kernel::b(l));
  }
  return out;
}

namespace {

std::optional<Window> window_or_empty(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    return std::nullopt;
  }
  return Window{lo, hi};
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = lo; i <= hi; ++i) {
    out.push_back(i);
  }
  return out;
}

void check_hypotheses(SpecialElement const& r, std::int64_t j, std::int64_t i,
                      std::int64_t m, std::int64_t n) {
  auto fail = [](std::string const& what) {
    throw Error(Errc::HypothesisViolated, what);
  };
  if (j > i) {
    fail("j <= i fails: j = " + std::to_string(j) + ", i = " + std::to_string(i));
  }
  if (m > r.alpha + j) {
    fail("m <= alpha(r_j) fails: m = " + std::to_string(m) +
         ", alpha(r_j) = " + std::to_string(r.alpha + j));
  }
  if (r.omega + i > n) {
    fail("omega(r_i) <= n fails: omega(r_i) = " + std::to_string(r.omega + i) +
         ", n = " + std::to_string(n));
  }
}

void fill_identifications(Kernel const& kernel, SpecialElement const& r,
                          std::int64_t which, std::int64_t m, std::int64_t n,
                          AmalgamSplit& out) {
  LeftRightSets const sets = left_right_sets(kernel, r, which);
  for (std::size_t idx = 0; idx < sets.left_indices.size(); ++idx) {
    std::int64_t const l = sets.left_indices[idx];
    if (l < m || l > n - kernel.k()) {
      continue;
    }
    out.l_set.push_back(l);
    Identification id{l, sets.left[idx], Kernel::b(l + kernel.k())};
    if (kernel.canonicalize(id.w) != kernel.canonicalize(KernelWord::letter(id.b))) {
      throw std::logic_error("identified pair w_l = b_{l+k} is not an identity in N");
    }
    out.identifications.push_back(std::move(id));
  }
}

}  // namespace

AmalgamSplit split_41(Kernel const& kernel, SpecialElement const& r, std::int64_t j,
                      std::int64_t i, std::int64_t m, std::int64_t n) {
  check_hypotheses(r, j, i, m, n);
  AmalgamSplit out;
  out.lemma = SplitLemma::Left;
  out.s = r.alpha + i;
  out.t = r.omega + i - 1;
  out.left_factor = {window_or_empty(m, out.t), range(j, i - 1)};
  out.right_factor = {window_or_empty(out.s, n), {i}};
  out.edge_window = window_or_empty(out.s, out.t);
  fill_identifications(kernel, r, i, m, n, out);
  return out;
}

AmalgamSplit split_42(Kernel const& kernel, SpecialElement const& r, std::int64_t j,
                      std::int64_t i, std::int64_t m, std::int64_t n) {
  check_hypotheses(r, j, i, m, n);
  AmalgamSplit out;
  out.lemma = SplitLemma::Right;
  out.s = r.alpha + j + 1;
  out.t = r.omega + i;
  out.left_factor = {window_or_empty(m, out.t), {j}};
  out.right_factor = {window_or_empty(out.s, n), range(j + 1, i)};
  out.edge_window = window_or_empty(out.s, out.t);
  fill_identifications(kernel, r, j, m, n, out);
  return out;
}

namespace {

std::string window_text(std::optional<Window> const& w) {
  if (!w) {
    return "1";
  }
  return "G[" + std::to_string(w->lo) + "," + std::to_string(w->hi) + "]";
}

std::string relator_text(std::vector<std::int64_t> const& rel) {
  if (rel.empty()) {
    return "{}";
  }
  if (rel.size() == 1) {
    return "{r_" + std::to_string(rel.front()) + "}";
  }
  return "{r_" + std::to_string(rel.front()) + "..r_" + std::to_string(rel.back()) + "}";
}

}  // namespace

std::string format_split(AmalgamSplit const& split, std::int64_t k) {
  std::ostringstream out;
  out << "edge=" << window_text(split.edge_window) << "\n";
  out << "left=" << window_text(split.left_factor.window) << "/"
      << relator_text(split.left_factor.relators) << "\n";
  out << "right=" << window_text(split.right_factor.window) << "/"
      << relator_text(split.right_factor.relators) << "\n";
  for (auto l : split.l_set) {
    out << "ident: w_" << l << " = b_" << l + k << "\n";
  }
  return out.str();
}

bool freiheitssatz_letter_check(Kernel const& kernel, KernelWord const& g, WidthInfo window,
                                std::int64_t jprime, std::int64_t j, BasisSide side) {
  if (jprime > window.alpha || window.omega > j) {
    throw Error(Errc::PreconditionViolated,
                "window [" + std::to_string(jprime) + "," + std::to_string(j) +
                    "] does not contain [" + std::to_string(window.alpha) + "," +
                    std::to_string(window.omega) + "]");
  }
  std::int64_t const k = kernel.k();
  bool const right = side == BasisSide::Right;
  std::int64_t const inner_base = right ? window.omega - k + 1 : window.alpha;
  std::int64_t const outer_base = right ? j - k + 1 : jprime;
  std::int64_t const wanted = right ? window.alpha : window.omega;
  KernelWord const inner = cyclic_reduce(kernel.rewrite_to_base(g, inner_base)).core;
  KernelWord const outer = cyclic_reduce(kernel.rewrite_to_base(inner, outer_base)).core;
  return std::any_of(outer.begin(), outer.end(), [&](KernelLetter const& l) {
    return !l.is_b() && l.index == wanted;
  });
}

bool freiheitssatz_letter_check(Kernel const& kernel, SpecialElement const& g,
                                std::int64_t jprime, std::int64_t j, BasisSide side) {
  return freiheitssatz_letter_check(kernel, g.element, {g.alpha, g.omega, g.width}, jprime, j,
                                    side);
}

}  // namespace magnus
