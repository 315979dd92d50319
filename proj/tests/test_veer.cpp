#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rveer/notation.hpp"
#include "rveer/veer.hpp"

using namespace rveer;

namespace {

TwistWord tw(const CurveLibrary& lib, const char* text) { return parse_twist_word(lib, text); }

}  // namespace

TEST_CASE("maps_to_left on the annulus") {
  const Surface annulus({0, 2});
  const CurveLibrary lib(annulus);
  const Arc spanning{1, 2, {}};
  CHECK(maps_to_left(annulus, tw(lib, "T(z)^-1"), spanning));
  CHECK_FALSE(maps_to_left(annulus, tw(lib, "T(z)"), spanning));
  for (int i = 1; i <= 2; ++i) {
    for (const Arc& a : enumerate_arcs(annulus, i, 4)) CHECK_FALSE(maps_to_left(annulus, TwistWord{}, a));
  }
}

TEST_CASE("single left twists have witnesses") {
  for (SurfaceSpec spec : {SurfaceSpec{1, 1}, SurfaceSpec{2, 1}, SurfaceSpec{1, 2}, SurfaceSpec{0, 3}, SurfaceSpec{2, 2}}) {
    const Surface s(spec);
    const CurveLibrary lib(s);
    for (const LibraryCurve* c : lib.type_representatives()) {
      CAPTURE(c->name);
      const TwistWord h{{TwistFactor{c->name, c->curve, -1}}};
      const SearchResult r = find_witness(s, h, {10, 1});
      REQUIRE(r.witness);
      CHECK(verify_witness(s, h, *r.witness));
      CHECK(side_of(r.witness->arc, r.witness->image, s) == Side::Left);
    }
  }
}

TEST_CASE("witness golden values") {
  const Surface s({1, 1});
  const CurveLibrary lib(s);
  const SearchResult r = find_witness(s, tw(lib, "T(a)^-1"), {8, 1});
  REQUIRE(r.witness);
  CHECK(r.witness->arc == Arc{1, 1, {-2}});
  CHECK(r.witness->image == Arc{1, 1, {-2, 1}});
  CHECK(r.arcs_checked == 3);
  CHECK_FALSE(find_witness(s, tw(lib, "T(a) T(b)"), {8, 1}).witness);
  CHECK_FALSE(find_witness(s, TwistWord{}, {8, 1}).witness);
}

TEST_CASE("the witness does not depend on the thread count") {
  const Surface s({2, 1});
  const CurveLibrary lib(s);
  std::mt19937_64 rng(5);
  std::vector<std::string> names;
  for (const LibraryCurve& c : lib.curves()) names.push_back(c.name);
  for (int t = 0; t < 10; ++t) {
    const TwistWord h = oracle::random_word(rng, lib, names, 3, 0);
    const SearchResult one = find_witness(s, h, {6, 1});
    const SearchResult four = find_witness(s, h, {6, 4});
    CHECK(one.arcs_checked == four.arcs_checked);
    CHECK(one.witness.has_value() == four.witness.has_value());
    if (one.witness && four.witness) CHECK(one.witness->arc == four.witness->arc);
  }
}

TEST_CASE("witness search is monotone in the bound") {
  const Surface s({1, 2});
  const CurveLibrary lib(s);
  std::mt19937_64 rng(9);
  std::vector<std::string> names;
  for (const LibraryCurve& c : lib.curves()) names.push_back(c.name);
  for (int t = 0; t < 15; ++t) {
    const TwistWord h = oracle::random_word(rng, lib, names, 3, 0);
    bool found = false;
    for (int len = 0; len <= 6; ++len) {
      const bool now = find_witness(s, h, {len, 1}).witness.has_value();
      if (found) CHECK(now);
      found = found || now;
    }
  }
}

TEST_CASE("positive words are right-veering on sampled arcs") {
  std::mt19937_64 rng(21);
  for (SurfaceSpec spec : {SurfaceSpec{1, 1}, SurfaceSpec{1, 2}, SurfaceSpec{2, 2}}) {
    const Surface s(spec);
    const CurveLibrary lib(s);
    for (int t = 0; t < 4; ++t) {
      const TwistWord h = oracle::random_word(rng, lib, lib.standard_chain(), 5, 1);
      CHECK_FALSE(find_witness(s, h, {spec == SurfaceSpec{2, 2} ? 5 : 8, 0}).witness);
    }
  }
}

TEST_CASE("classification ladder") {
  const Surface s({1, 1});
  const CurveLibrary lib(s);
  const Verdict syntactic = classify_open_book(s, tw(lib, "T(a)^-1 T(b)^-1"));
  CHECK(syntactic.kind == VerdictKind::Overtwisted);
  CHECK(syntactic.reason == OvertwistedReason::SyntacticTheorem1);
  CHECK(syntactic.witness.has_value());

  const Verdict positive = classify_open_book(s, tw(lib, "T(a) T(b)"));
  CHECK(positive.kind == VerdictKind::RightVeeringPositive);
  CHECK_FALSE(positive.witness);

  CHECK(classify_open_book(s, TwistWord{}).kind == VerdictKind::NotApplicable);
  CHECK(classify_open_book(s, tw(lib, "T(a) T(a)^-1")).kind == VerdictKind::NotApplicable);

  const Verdict mixed = classify_open_book(s, tw(lib, "T(a)^-1 T(b) T(b) T(a)"));
  CHECK((mixed.kind == VerdictKind::Overtwisted || mixed.kind == VerdictKind::InconclusiveAtBound));
  if (mixed.kind == VerdictKind::Overtwisted) {
    CHECK(mixed.reason == OvertwistedReason::WitnessFound);
    REQUIRE(mixed.witness);
    CHECK(verify_witness(s, tw(lib, "T(a)^-1 T(b) T(b) T(a)"), *mixed.witness));
  }

  const Surface g2({2, 1});
  const CurveLibrary lib2(g2);
  const Verdict sep = classify_open_book(g2, tw(lib2, "T(a1)^-1 T(s1_0)^-1"));
  CHECK(sep.kind == VerdictKind::Overtwisted);
  CHECK(sep.reason == OvertwistedReason::SyntacticTheorem1);
}

TEST_CASE("left twist then a positive inverse") {
  const Surface s({1, 1});
  const CurveLibrary lib(s);
  const TwistFactor a{"a", lib.at("a").curve, 1};
  CHECK(lemma_r7_family(a, TwistWord{}) == tw(lib, "T(a)^-1"));
  CHECK(lemma_r7_family(a, tw(lib, "T(b)")) == tw(lib, "T(a)^-1 T(b)^-1"));
  CHECK(lemma_r7_family(a, tw(lib, "T(b) T(a)")) == tw(lib, "T(a)^-1 T(a)^-1 T(b)^-1"));
  CHECK_THROWS_AS(lemma_r7_family(a, tw(lib, "T(b)^-1")), InputError);
  CHECK(find_witness(s, lemma_r7_family(a, tw(lib, "T(b) T(b)")), {12, 0}).witness);
}

TEST_CASE("witnesses transport under conjugation") {
  const Surface s({1, 2});
  const CurveLibrary lib(s);
  std::mt19937_64 rng(17);
  std::vector<std::string> names;
  for (const LibraryCurve& c : lib.curves()) names.push_back(c.name);
  int transported = 0;
  while (transported < 10) {
    const TwistWord h = oracle::random_word(rng, lib, names, 2, -1);
    const SearchResult r = find_witness(s, h, {6, 0});
    if (!r.witness) continue;
    const TwistWord f = oracle::random_word(rng, lib, names, 3, 0);
    CHECK(maps_to_left(s, conjugate(f, h), act(s, f, r.witness->arc)));
    ++transported;
  }
}
