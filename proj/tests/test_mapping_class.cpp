#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rveer/mapping_class.hpp"
#include "rveer/notation.hpp"
#include "rveer/relations.hpp"
#include "rveer/veer.hpp"

using namespace rveer;

namespace {

TwistWord tw(const CurveLibrary& lib, const char* text) { return parse_twist_word(lib, text); }

TwistWord power(const TwistWord& t, int k) {
  TwistWord out;
  for (int i = 0; i < k; ++i) out = out * t;
  return out;
}

}  // namespace

TEST_CASE("library curves are simple and essential") {
  for (int g = 0; g <= 3; ++g) {
    for (int b = 1; b <= 3; ++b) {
      const Surface s({g, b});
      const CurveLibrary lib(s);
      for (const LibraryCurve& c : lib.curves()) {
        CAPTURE(c.name);
        CHECK(is_simple(c.curve, s));
        CHECK(is_essential(c.curve));
      }
    }
  }
}

TEST_CASE("standard chain meets in the chain pattern") {
  for (int g = 1; g <= 4; ++g) {
    for (int b = 1; b <= 3; ++b) {
      const Surface s({g, b});
      const CurveLibrary lib(s);
      const auto& chain = lib.standard_chain();
      REQUIRE(chain.size() == static_cast<std::size_t>(2 * g));
      for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t j = 0; j < chain.size(); ++j) {
          const int expected = (i + 1 == j || j + 1 == i) ? 1 : 0;
          CHECK(geometric_intersection(lib.at(chain[i]).curve, lib.at(chain[j]).curve, s) == expected);
        }
      }
    }
  }
}

TEST_CASE("separating library curves split the surface as labelled") {
  const Surface s({2, 2});
  const CurveLibrary lib(s);
  int separating = 0;
  for (const LibraryCurve& c : lib.curves()) {
    if (c.kind != CurveKind::Separating) continue;
    ++separating;
    // Its class lies in the span of the boundary classes, so the handle coordinates vanish.
    const auto h = oracle::homology(c.curve.letters(), s.rank());
    for (int k = 0; k < 2 * s.spec().genus; ++k) CHECK(h[static_cast<std::size_t>(k)] == 0);
  }
  CHECK(separating == 3);
  CHECK(lib.find("s1_0") != nullptr);
  CHECK(lib.find("s1_1") != nullptr);
  CHECK(lib.find("s2_0") != nullptr);
}

TEST_CASE("user curves are validated") {
  const Surface s({1, 1});
  CurveLibrary lib(s);
  CHECK(lib.add_user_curve("k", CyclicWord(Word{1, 2})).kind == CurveKind::User);
  CHECK_THROWS_AS(lib.add_user_curve("k", CyclicWord(Word{1})), InputError);
  CHECK_THROWS_AS(lib.add_user_curve("x", CyclicWord(Word{1, 1})), InputError);
  CHECK_THROWS_AS(lib.add_user_curve("y", CyclicWord()), InputError);
}

TEST_CASE("annulus twist winds the spanning arc once") {
  const Surface annulus({0, 2});
  const CurveLibrary lib(annulus);
  const Arc spanning{1, 2, {}};
  const Arc wound = twist_arc(annulus, lib.at("z").curve, 1, spanning);
  CHECK(wound == Arc{1, 2, {1}});
  CHECK(twist_arc(annulus, lib.at("z").curve, -1, wound) == spanning);
  CHECK(act(annulus, tw(lib, "T(z)^-1"), spanning) == Arc{1, 2, {-1}});
}

TEST_CASE("twists fix their own curve and disjoint arcs") {
  for (SurfaceSpec spec : {SurfaceSpec{1, 1}, SurfaceSpec{2, 1}, SurfaceSpec{1, 2}, SurfaceSpec{0, 3}}) {
    const Surface s(spec);
    const CurveLibrary lib(s);
    std::vector<Arc> arcs;
    for (int i = 1; i <= s.boundary_count(); ++i) {
      for (const Arc& a : enumerate_arcs(s, i, 3)) arcs.push_back(a);
    }
    for (const LibraryCurve& c : lib.curves()) {
      for (int sign : {1, -1}) {
        CHECK(twist_curve(s, c.curve, sign, c.curve) == c.curve);
        for (const Arc& a : arcs) {
          if (geometric_intersection(a, c.curve, s) == 0) CHECK(twist_arc(s, c.curve, sign, a) == a);
        }
      }
    }
  }
}

TEST_CASE("twisting about a non-simple curve is an input error") {
  const Surface s({1, 1});
  CHECK_THROWS_AS(twist_arc(s, CyclicWord(Word{1, 1}), 1, Arc{1, 1, {}}), InputError);
}

TEST_CASE("inverse and conjugate") {
  const Surface s({1, 1});
  const CurveLibrary lib(s);
  CHECK(inverse(tw(lib, "T(a)^-1 T(b)^-1")) == tw(lib, "T(b) T(a)"));
  CHECK(inverse(TwistWord{}).empty());
  CHECK(inverse(tw(lib, "T(a)^2")) == tw(lib, "T(a)^-2"));
  CHECK(conjugate(TwistWord{}, tw(lib, "T(a)")) == tw(lib, "T(a)"));
  CHECK(conjugate(tw(lib, "T(b)"), tw(lib, "T(a)^-1")) == tw(lib, "T(b) T(a)^-1 T(b)^-1"));
  CHECK(is_identity(s, conjugate(tw(lib, "T(a) T(b)"), TwistWord{})));
}

TEST_CASE("mapping class relations on the one-holed torus") {
  const Surface s({1, 1});
  const CurveLibrary lib(s);
  const auto arcs = relation_test_arcs(s, 30);
  CHECK(same_action(s, tw(lib, "T(a) T(b) T(a)"), tw(lib, "T(b) T(a) T(b)"), arcs));
  // The two-chain relation: (t_a t_b)^6 is the boundary twist.
  CHECK(same_action(s, power(tw(lib, "T(a) T(b)"), 6), tw(lib, "T(d1)"), arcs));
  CHECK_FALSE(same_action(s, tw(lib, "T(a) T(b)"), tw(lib, "T(b) T(a)"), arcs));
}

TEST_CASE("chain relations on genus two") {
  const Surface s({2, 1});
  CurveLibrary lib(s);
  lib.add_user_curve("k1", CyclicWord(Word{1, -2, -1, 2}));
  CHECK(is_identity(s, power(tw(lib, "T(a1) T(b1)"), 6) * tw(lib, "T(k1)^-1")));
  CHECK(is_identity(s, power(tw(lib, "T(a1) T(b1) T(c1) T(b2)"), 10) * tw(lib, "T(d1)^-1")));
}

TEST_CASE("relation suite passes on small surfaces") {
  for (SurfaceSpec spec : {SurfaceSpec{1, 1}, SurfaceSpec{1, 2}, SurfaceSpec{2, 1}, SurfaceSpec{0, 3}}) {
    const Surface s(spec);
    const CurveLibrary lib(s);
    for (const RelationCheck& r : check_relations(s, lib, 30, 40, 11)) {
      CAPTURE(r.name);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("the action is a group action") {
  std::mt19937_64 rng(3);
  for (SurfaceSpec spec : {SurfaceSpec{1, 2}, SurfaceSpec{2, 1}}) {
    const Surface s(spec);
    const CurveLibrary lib(s);
    std::vector<std::string> names;
    for (const LibraryCurve& c : lib.curves()) names.push_back(c.name);
    const auto arcs = relation_test_arcs(s, 20);
    for (int t = 0; t < 30; ++t) {
      const TwistWord f = oracle::random_word(rng, lib, names, 3, 0);
      const TwistWord g = oracle::random_word(rng, lib, names, 3, 0);
      const Arc& a = arcs[rng() % arcs.size()];
      CHECK(act(s, f * g, a) == act(s, f, act(s, g, a)));
      CHECK(act(s, inverse(f), act(s, f, a)) == a);
      CHECK(act(s, conjugate(f, g), a) == act(s, f, act(s, g, act(s, inverse(f), a))));
      const Arc image = act(s, f, a);
      CHECK(is_simple(image, s));
    }
  }
}

TEST_CASE("identity test") {
  const Surface annulus({0, 2});
  const CurveLibrary alib(annulus);
  CHECK(is_identity(annulus, TwistWord{}));
  CHECK_FALSE(is_identity(annulus, tw(alib, "T(z)")));
  const Surface s({1, 1});
  const CurveLibrary lib(s);
  CHECK(is_identity(s, tw(lib, "T(a) T(a)^-1")));
  CHECK_FALSE(is_identity(s, tw(lib, "T(d1)")));
  CHECK(is_identity(Surface({0, 1}), TwistWord{}));
  const Surface p({0, 3});
  const CurveLibrary plib(p);
  CHECK(is_identity(p, tw(plib, "T(z1) T(d2)^-1")));
}

TEST_CASE("filling arcs") {
  for (SurfaceSpec spec : {SurfaceSpec{0, 2}, SurfaceSpec{1, 1}, SurfaceSpec{2, 3}}) {
    const Surface s(spec);
    const auto arcs = filling_arcs(s);
    CHECK(arcs.size() == static_cast<std::size_t>(2 * spec.genus + spec.boundary_count - 1));
    for (const Arc& a : arcs) CHECK(is_simple(a, s));
  }
}
