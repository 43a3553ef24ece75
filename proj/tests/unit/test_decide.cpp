#include <doctest.h>

#include "magnus/decide.hpp"
#include "magnus/error.hpp"
#include "oracles.hpp"

using namespace magnus;

namespace {

Word w(char const* text) { return parse_word(text); }

bool holds(FamilyPresentation const& p, Word const& r, Word const& s, Verdict const& v) {
  return v.same() && verify_certificate(p, r, s, v);
}

}  // namespace

TEST_CASE("free groups") {
  Verdict const v1 = free_magnus(w("a b a^-1"), w("b"));
  CHECK(v1.same());
  CHECK(v1.sign == 1);
  CHECK(verify_free_certificate(w("a b a^-1"), w("b"), v1));
  Verdict const v2 = free_magnus(w("a"), w("a^-1"));
  CHECK(v2.same());
  CHECK(v2.sign == -1);
  CHECK(verify_free_certificate(w("a"), w("a^-1"), v2));
  Verdict const v3 = free_magnus(w("a"), w("b"));
  CHECK_FALSE(v3.same());
  CHECK(v3.reason == Reason::CyclicWordMismatch);
  CHECK(free_magnus(w("a"), Word{}).reason == Reason::TrivialityMismatch);
  CHECK(free_magnus(Word{}, Word{}).same());
}

TEST_CASE("same closure for constructed conjugates") {
  FamilyPresentation const p = from_surface_genus(4);
  oracle::Rng rng(1);
  auto const names = p.generators();
  Kernel const kern(p);
  int checked = 0;
  while (checked < 40) {
    Word const r = oracle::random_word(rng, names, rng.uniform(1, 8));
    if (kern.is_trivial_in_H(r)) {
      continue;
    }
    Word const g = oracle::random_word(rng, names, rng.uniform(0, 6));
    int const eps = rng.sign();
    Word const s = conjugate(power(r, eps), g);
    Verdict const v = magnus_same_closure(p, r, s);
    REQUIRE(v.same());
    CHECK(holds(p, r, s, v));
    // no nontrivial element of a surface group is conjugate to its inverse
    CHECK(v.sign == eps);
    if (v.g_conjugator) {
      Verdict gv = v;
      gv.conjugator = *v.g_conjugator;
      CHECK(verify_certificate(p, r, s, gv));
    }
    ++checked;
  }
}

TEST_CASE("distinct closures") {
  FamilyPresentation const p = from_surface_genus(4);
  Verdict const v = magnus_same_closure(p, w("y1"), w("y2"));
  CHECK_FALSE(v.same());
  CHECK(v.reason);
  CHECK(magnus_same_closure(p, w("y1"), w("b")).reason == Reason::XExponentMismatch);
  CHECK(magnus_same_closure(p, p.relator(), w("y1")).reason == Reason::TrivialityMismatch);
  Verdict const both = magnus_same_closure(p, p.relator(), conjugate(p.relator(), w("a b")));
  CHECK(both.same());
  CHECK(both.conjugator.empty());
}

TEST_CASE("r against itself") {
  FamilyPresentation const p = from_surface_genus(4);
  for (char const* r : {"y1", "a b y1", "b y2 a^-1 y1", "a a b^-1"}) {
    Verdict const v = magnus_same_closure(p, w(r), w(r));
    CHECK(v.same());
    CHECK(v.sign == 1);
    CHECK(v.conjugator.empty());
  }
}

TEST_CASE("certificate mutations are rejected") {
  FamilyPresentation const p = from_surface_genus(4);
  Word const r = w("y1 a y2 b");
  Word const s = conjugate(r, w("a y1^-1 b"));
  Verdict v = magnus_same_closure(p, r, s);
  REQUIRE(holds(p, r, s, v));
  Verdict tampered = v;
  tampered.conjugator = v.conjugator * w("y2");
  CHECK_FALSE(verify_certificate(p, r, s, tampered));
  Verdict flipped = v;
  flipped.sign = -v.sign;
  CHECK_FALSE(verify_certificate(p, r, s, flipped));
  Verdict unsigned_v = v;
  unsigned_v.sign = 0;
  CHECK_FALSE(verify_certificate(p, r, s, unsigned_v));
  CHECK_FALSE(verify_certificate(p, r, s, Verdict{}));
}

TEST_CASE("both routes agree when r has no a and no b") {
  FamilyPresentation const p = from_surface_genus(4);
  oracle::Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    Word r = oracle::random_word(rng, {"a", "b", "y1", "y2"}, rng.uniform(2, 8));
    r = r * gen_power("a", -exponent_sum(r, "a")) * gen_power("b", -exponent_sum(r, "b"));
    if (Kernel(p).is_trivial_in_H(r)) {
      continue;
    }
    Word const s = conjugate(power(r, rng.sign()), oracle::random_word(rng, {"a", "b", "y1"}, 4));
    Verdict const va = magnus_same_closure(p, r, s, {Route::MagnusA});
    Verdict const vb = magnus_same_closure(p, r, s, {Route::Swap});
    CHECK(va.same());
    CHECK(vb.same());
    CHECK(va.sign == vb.sign);
    CHECK(holds(p, r, s, va));
    CHECK(holds(p, r, s, vb));
  }
}

TEST_CASE("verdicts do not depend on the split of the surface relator") {
  FamilyPresentation const p1 = from_surface_genus(5, 1);
  FamilyPresentation const p2 = from_surface_genus(5, 2);
  oracle::Rng rng(3);
  auto const names = p1.generators();
  for (int t = 0; t < 20; ++t) {
    Word const r = oracle::random_word(rng, names, rng.uniform(1, 6));
    Word const s = rng.coin() ? conjugate(power(r, rng.sign()), oracle::random_word(rng, names, 4))
                              : oracle::random_word(rng, names, rng.uniform(1, 6));
    Verdict const v1 = magnus_same_closure(p1, r, s);
    Verdict const v2 = magnus_same_closure(p2, r, s);
    CHECK(v1.same() == v2.same());
    if (v1.same() && v2.same()) {
      CHECK(v1.sign == v2.sign);
      CHECK(holds(p1, r, s, v1));
      CHECK(holds(p2, r, s, v2));
    }
  }
}

TEST_CASE("presentations with k > 1") {
  FamilyPresentation const p = validate({"x", "b", {"c", "d"}, 2, w("c"), w("d d")});
  Word const r = w("x^-1 c x b");
  Word const s = conjugate(invert(r), w("x c b"));
  Verdict const v = magnus_same_closure(p, r, s);
  CHECK(v.same());
  CHECK(v.sign == -1);
  CHECK(holds(p, r, s, v));
  try {
    magnus_same_closure(p, w("x c"), w("c"));
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::NonzeroXExponent);
  }
}

TEST_CASE("psi cap is reported") {
  FamilyPresentation const p = from_surface_genus(4);
  try {
    magnus_same_closure(p, w("b"), w("a^-1 b a"), {Route::Auto, 0});
    FAIL("expected the cap to trigger");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::IterationCapExceeded);
  }
  Verdict const v = magnus_same_closure(p, w("b"), w("a^-1 b a"));
  CHECK(holds(p, w("b"), w("a^-1 b a"), v));
}

TEST_CASE("foreign letters are rejected") {
  FamilyPresentation const p = from_surface_genus(4);
  CHECK_THROWS_AS(magnus_same_closure(p, w("z"), w("y1")), Error);
  CHECK_THROWS_AS(magnus_same_closure(p, w("b[1]"), w("y1")), Error);
}

TEST_CASE("bounded normal closure search") {
  FamilyPresentation const p = from_surface_genus(4);
  Word const r = w("y1 b");
  Word const g = w("a y2");
  CHECK(nc_member_bounded(conjugate(r, g), r, p, {1, 2}));
  CHECK(nc_member_bounded(r * r, r, p, {2, 0}));
  CHECK(nc_member_bounded(Word{}, r, p, {1, 0}));
  CHECK_FALSE(nc_member_bounded(w("y2"), w("y1"), p, {2, 2}));
  // true in G but not in the free group
  std::vector<std::string> const names = p.generators();
  CHECK(nc_member_bounded(p.relator(), r, p, {1, 0}));
  CHECK_FALSE(nc_member_bounded(p.relator(), r, nullptr, names, {1, 0}));
  CHECK_THROWS_AS(nc_member_bounded(r, r, p, {0, 1}), Error);
  try {
    nc_member_bounded(r, r, p, {3, 3, 1000});
    FAIL("expected the resource cap");
  } catch (Error const& e) {
    CHECK(e.code() == Errc::ResourceCap);
  }
}
