#include <doctest.h>

#include "magnus/amalgam.hpp"
#include "magnus/error.hpp"
#include "oracles.hpp"

using namespace magnus;

namespace {

Word w(char const* text) { return parse_word(text); }

FamilyPresentation k2_presentation() {
  return validate({"x", "b", {"c", "d"}, 2, w("c"), w("d")});
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Parse;
}

}  // namespace

TEST_CASE("left and right sets") {
  Kernel const g4(from_surface_genus(4));
  SpecialElement const y = specialize(g4, KernelWord::letter(g4.y(1, 3)));
  REQUIRE(y.width == 1);
  LeftRightSets const s = left_right_sets(g4, y, 0);
  CHECK(s.left_indices == std::vector<std::int64_t>{y.alpha - 1});
  CHECK(s.left == std::vector<KernelWord>{g4.w_word(y.alpha - 1)});
  CHECK(s.right_indices == std::vector<std::int64_t>{y.omega});
  CHECK(s.right == std::vector<KernelLetter>{Kernel::b(y.omega)});

  SpecialElement const two =
      specialize(g4, KernelWord::reduce({g4.y(1, 0), g4.y(2, 1)}));
  REQUIRE(two.width == 2);
  LeftRightSets const e = left_right_sets(g4, two, 0);
  CHECK(e.left.empty());
  CHECK(e.right.empty());

  Kernel const k2(k2_presentation());
  SpecialElement const z = specialize(k2, KernelWord::letter(k2.y(2, 0)));
  for (std::int64_t i = -2; i <= 2; ++i) {
    LeftRightSets const a = left_right_sets(k2, z, i);
    LeftRightSets const b = left_right_sets(k2, z, i + 1);
    CHECK(a.left_indices.size() == 2);
    REQUIRE(a.left_indices.size() == b.left_indices.size());
    for (std::size_t t = 0; t < a.left_indices.size(); ++t) {
      CHECK(b.left_indices[t] == a.left_indices[t] + 1);
      CHECK(b.left[t] == shift(a.left[t], 1));
    }
    for (std::size_t t = 0; t < a.right_indices.size(); ++t) {
      CHECK(b.right_indices[t] == a.right_indices[t] + 1);
    }
    for (std::size_t t = 1; t < a.left_indices.size(); ++t) {
      CHECK(a.left_indices[t - 1] < a.left_indices[t]);
    }
  }
}

TEST_CASE("split_41 descriptors") {
  Kernel const g4(from_surface_genus(4));
  SpecialElement const r = specialize(g4, KernelWord::letter(g4.y(1, 0)));
  AmalgamSplit const base = split_41(g4, r, 2, 2, -3, 6);
  CHECK(base.right_factor.relators == std::vector<std::int64_t>{2});
  CHECK(base.left_factor.relators.empty());
  CHECK_FALSE(base.edge_window);  // width one: s > t
  CHECK(base.s == r.alpha + 2);
  CHECK(base.t == r.omega + 1);
  CHECK(format_split(base, 1) ==
        "edge=1\n"
        "left=G[-3,1]/{}\n"
        "right=G[2,6]/{r_2}\n"
        "ident: w_1 = b_2\n");

  AmalgamSplit const longer = split_41(g4, r, -1, 2, -3, 6);
  CHECK(format_split(longer, 1) ==
        "edge=1\n"
        "left=G[-3,1]/{r_-1..r_1}\n"
        "right=G[2,6]/{r_2}\n"
        "ident: w_1 = b_2\n");

  CHECK(code_of([&] { split_41(g4, r, 0, 0, r.alpha + 1, 5); }) == Errc::HypothesisViolated);
  CHECK(code_of([&] { split_41(g4, r, 1, 0, -5, 5); }) == Errc::HypothesisViolated);
}

TEST_CASE("split_42 descriptors") {
  Kernel const g4(from_surface_genus(4));
  SpecialElement const r = specialize(g4, KernelWord::letter(g4.y(1, 0)));
  AmalgamSplit const base = split_42(g4, r, 1, 1, -3, 6);
  CHECK(base.left_factor.relators == std::vector<std::int64_t>{1});
  CHECK(base.right_factor.relators.empty());
  CHECK(format_split(base, 1) ==
        "edge=1\n"
        "left=G[-3,1]/{r_1}\n"
        "right=G[2,6]/{}\n"
        "ident: w_0 = b_1\n");
  CHECK(code_of([&] { split_42(g4, r, 0, 0, -5, r.omega - 1); }) == Errc::HypothesisViolated);

  Kernel const k2(k2_presentation());
  SpecialElement const z = specialize(k2, KernelWord::reduce({k2.y(1, 0), k2.y(2, 1)}));
  REQUIRE(z.width == 2);
  for (std::int64_t i = -1; i <= 1; ++i) {
    AmalgamSplit const a = split_41(k2, z, i, i, z.alpha + i - 2, z.omega + i + 2);
    AmalgamSplit const b = split_42(k2, z, i, i, z.alpha + i - 2, z.omega + i + 2);
    CHECK(a.right_factor.relators == b.left_factor.relators);
    CHECK(a.left_factor.relators == b.right_factor.relators);
    REQUIRE(a.edge_window);
    REQUIRE(b.edge_window);
    CHECK(b.edge_window->lo == a.edge_window->lo + 1);
    CHECK(b.edge_window->hi == a.edge_window->hi + 1);
  }
}

TEST_CASE("identified pairs and the index set") {
  oracle::Rng rng(5);
  for (auto const& p : {from_surface_genus(4), k2_presentation()}) {
    Kernel const kern(p);
    for (int t = 0; t < 25; ++t) {
      SpecialElement const r =
          specialize(kern, oracle::random_nontrivial_kernel_word(rng, kern, rng.uniform(1, 4), -1, 1));
      std::int64_t const j = rng.uniform(-2, 2);
      std::int64_t const i = j + rng.uniform(0, 2);
      std::int64_t const m = r.alpha + j - rng.uniform(0, 3);
      std::int64_t const n = r.omega + i + rng.uniform(0, 3);
      for (bool lemma41 : {true, false}) {
        AmalgamSplit const s = lemma41 ? split_41(kern, r, j, i, m, n) : split_42(kern, r, j, i, m, n);
        std::int64_t const which = lemma41 ? i : j;
        std::vector<std::int64_t> expect;
        for (std::int64_t l = r.omega + which - kern.k(); l <= r.alpha + which - 1; ++l) {
          if (m <= l && l <= n - kern.k()) {
            expect.push_back(l);
          }
        }
        CHECK(s.l_set == expect);
        for (auto const& id : s.identifications) {
          CHECK(id.w == kern.w_word(id.l));
          CHECK(oracle::iterative_canonical(p, id.w) ==
                oracle::iterative_canonical(p, KernelWord::letter(id.b)));
        }
      }
    }
  }
}

TEST_CASE("letter check") {
  Kernel const k2(k2_presentation());
  KernelWord const g = KernelWord::reduce({Kernel::b(1), k2.y(1, 2)});
  WidthInfo const win = k2.alpha_omega(g);
  CHECK(win == WidthInfo{1, 2, 2});
  CHECK_FALSE(freiheitssatz_letter_check(k2, g, win, 1, 2));
  CHECK(code_of([&] { freiheitssatz_letter_check(k2, g, win, 2, 2); }) == Errc::PreconditionViolated);
  CHECK(code_of([&] { freiheitssatz_letter_check(k2, g, win, 0, 1); }) == Errc::PreconditionViolated);
}
