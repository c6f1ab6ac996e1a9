#include <doctest.h>

#include "stein/bundles.hpp"

using namespace stein;

TEST_CASE("cocharacter construction") {
  Cocharacter mu = Cocharacter::from_gl_weights({-2, -1, -1});
  CHECK(mu.simple_pairings == std::vector<int>{-1, 0});
  CHECK(mu.degree() == -4);
  CHECK_THROWS_AS(Cocharacter::from_gl_weights({0, -1}), std::invalid_argument);
  CHECK_THROWS_AS(Cocharacter::from_pairings({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Cocharacter::from_pairings({0, 0}).degree(), std::logic_error);
}

TEST_CASE("levi subset and unipotent dimension") {
  CountEngine gl3(ReductiveDatum::parse("GL3"));
  BundleEngine flat(gl3, Cocharacter::from_gl_weights({-1, -1, -1}));
  CHECK(flat.levi_subset() == 0b11);
  CHECK(flat.unipotent_dim() == 0);
  CHECK(flat.aut_order() == gl3.group_order());

  BundleEngine be(gl3, Cocharacter::from_gl_weights({-1, 0, 0}));
  CHECK(be.levi_subset() == 0b10);
  // two positive pairings of value 1, each contributing 2
  CHECK(be.unipotent_dim() == 4);

  CountEngine gl2(ReductiveDatum::parse("GL2"));
  BundleEngine steep(gl2, Cocharacter::from_gl_weights({-2, 0}));
  CHECK(steep.unipotent_dim() == 3);
  QPoly qm1 = QPoly::q() - QPoly(1);
  CHECK(steep.aut_order() == QPoly::q_pow(3) * qm1 * qm1);
}

TEST_CASE("triple counts for rank two") {
  CountEngine gl2(ReductiveDatum::parse("GL2"));
  BundleEngine shifted(gl2, Cocharacter::from_gl_weights({-1, 0}));
  CHECK(shifted.trip_count(0, 0) == QPoly(4) * QPoly::q_pow(2));
  CHECK(shifted.trip_count(0, 1) == QPoly(2) * QPoly::q_pow(2));
  CHECK(shifted.trip_count(1, 1) == QPoly::q_pow(2));

  BundleEngine steep(gl2, Cocharacter::from_gl_weights({-2, 0}));
  CHECK(steep.trip_count(0, 0) == QPoly(4) * QPoly::q_pow(3));
  CHECK(steep.trip_count(0, 1) == QPoly(2) * QPoly::q_pow(3));
  CHECK(steep.trip_count(1, 1) == QPoly::q_pow(3));
}

TEST_CASE("central cocharacters reduce to the steinberg count") {
  CountEngine gl2(ReductiveDatum::parse("GL2"));
  for (auto w : std::vector<std::vector<int>>{{0, 0}, {-1, -1}, {-3, -3}}) {
    BundleEngine be(gl2, Cocharacter::from_gl_weights(w));
    for (SimpleSubset J0 : all_subsets(SimpleSubset{0b1}))
      for (SimpleSubset Ji : all_subsets(SimpleSubset{0b1}))
        CHECK(be.trip_count(J0, Ji) == gl2.st_count(J0, Ji));
  }
}

TEST_CASE("the expanded double-coset sum agrees") {
  CountEngine gl3(ReductiveDatum::parse("GL3"));
  for (auto w : std::vector<std::vector<int>>{{-1, 0, 0}, {-1, -1, 0}, {-2, -1, 0}}) {
    BundleEngine be(gl3, Cocharacter::from_gl_weights(w));
    for (SimpleSubset J0 : all_subsets(SimpleSubset{0b11}))
      for (SimpleSubset Ji : all_subsets(SimpleSubset{0b11}))
        CHECK(be.trip_count(J0, Ji) == be.trip_count_expanded(J0, Ji));
  }
  CountEngine b2(ReductiveDatum::parse("B2"));
  BundleEngine bb(b2, Cocharacter::from_pairings({0, -1}));
  for (SimpleSubset J0 : all_subsets(SimpleSubset{0b11}))
    for (SimpleSubset Ji : all_subsets(SimpleSubset{0b11}))
      CHECK(bb.trip_count(J0, Ji) == bb.trip_count_expanded(J0, Ji));
}

TEST_CASE("triple counts are symmetric in the marked points") {
  CountEngine gl3(ReductiveDatum::parse("GL3"));
  BundleEngine be(gl3, Cocharacter::from_gl_weights({-2, -1, 0}));
  for (SimpleSubset J0 : all_subsets(SimpleSubset{0b11}))
    for (SimpleSubset Ji : all_subsets(SimpleSubset{0b11}))
      CHECK(be.trip_count(J0, Ji) == be.trip_count(Ji, J0));
}
