#include <doctest.h>

#include <stdexcept>

#include "stein/rootsys.hpp"

using namespace stein;

namespace {

int positive_count(Series s, int rank) {
  ReductiveDatum d{{{s, rank}}, rank};
  return build_root_system(d).n_positive;
}

}  // namespace

TEST_CASE("positive root counts per series") {
  for (int n = 1; n <= 7; ++n) CHECK(positive_count(Series::A, n) == n * (n + 1) / 2);
  for (int n = 2; n <= 4; ++n) {
    CHECK(positive_count(Series::B, n) == n * n);
    CHECK(positive_count(Series::C, n) == n * n);
  }
  CHECK(positive_count(Series::D, 4) == 12);
  CHECK(positive_count(Series::D, 5) == 20);
  CHECK(positive_count(Series::G, 2) == 6);
  CHECK(positive_count(Series::F, 4) == 24);
  CHECK(positive_count(Series::E, 6) == 36);
}

TEST_CASE("unsupported ranks are rejected") {
  CHECK_THROWS_AS(positive_count(Series::E, 7), std::invalid_argument);
  CHECK_THROWS_AS(positive_count(Series::E, 8), std::invalid_argument);
  CHECK_THROWS_AS(positive_count(Series::A, 8), std::invalid_argument);
  CHECK_THROWS_AS(positive_count(Series::B, 5), std::invalid_argument);
  CHECK_THROWS_AS(positive_count(Series::D, 3), std::invalid_argument);
}

TEST_CASE("negation and simple root bookkeeping") {
  RootSystem rs = build_root_system(ReductiveDatum::parse("B2"));
  CHECK(rs.size() == 8);
  CHECK(rs.rank() == 2);
  for (std::size_t i = 0; i < rs.size(); ++i) {
    CHECK(rs.neg_of[rs.neg_of[i]] == static_cast<int>(i));
    CHECK(rs.positive[i] != rs.positive[rs.neg_of[i]]);
  }
  for (int j : rs.simple) {
    int pos = rs.simple_root_pos[j];
    CHECK(rs.is_simple_root(pos));
    CHECK(rs.simple_index_of_root(pos) == j);
    // a simple reflection permutes the other positive roots
    int negated = 0;
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (rs.positive[i] && !rs.positive[rs.reflect(j, i)]) ++negated;
    CHECK(negated == 1);
  }
}

TEST_CASE("datum parsing") {
  ReductiveDatum gl3 = ReductiveDatum::parse("GL3");
  CHECK(gl3.components == std::vector<std::pair<Series, int>>{{Series::A, 2}});
  CHECK(gl3.torus_rank == 3);

  ReductiveDatum sl3 = ReductiveDatum::parse("SL3");
  CHECK(sl3.components == std::vector<std::pair<Series, int>>{{Series::A, 2}});
  CHECK(sl3.torus_rank == 2);

  ReductiveDatum prod = ReductiveDatum::parse("A1xA1+t2");
  CHECK(prod.components.size() == 2);
  CHECK(prod.torus_rank == 2);
  CHECK(prod.semisimple_rank() == 2);

  ReductiveDatum torus = ReductiveDatum::parse("t2");
  CHECK(torus.components.empty());
  CHECK(torus.torus_rank == 2);

  CHECK(ReductiveDatum::parse("B3").torus_rank == 3);
  CHECK(ReductiveDatum::parse("A2+t5").torus_rank == 5);
  CHECK_THROWS_AS(ReductiveDatum::parse("A2+t1"), std::invalid_argument);
  CHECK_THROWS_AS(ReductiveDatum::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ReductiveDatum::parse("H4"), std::invalid_argument);
  CHECK_THROWS_AS(ReductiveDatum::parse("GL0"), std::invalid_argument);
  CHECK(ReductiveDatum::parse("GL1").torus_rank == 1);
}

TEST_CASE("levi subsystems stay in ambient coordinates") {
  RootSystem b3 = build_root_system(ReductiveDatum::parse("B3"));
  CHECK(b3.n_positive == 9);

  RootSystem levi = levi_subsystem(b3, 0b110);  // nodes 2 and 3: a B2
  CHECK(levi.size() == 8);
  CHECK(levi.simple == std::vector<int>{1, 2});
  CHECK(levi.ambient_rank() == 3);

  RootSystem levi2 = levi_subsystem(b3, 0b011);  // nodes 1 and 2: an A2
  CHECK(levi2.size() == 6);

  CHECK(levi_subsystem(b3, 0).size() == 0);
  CHECK(levi_subsystem(b3, 0b111).size() == b3.size());
  CHECK_THROWS_AS(levi_subsystem(levi, 0b001), std::invalid_argument);
}

TEST_CASE("dynkin components") {
  RootSystem a3 = build_root_system(ReductiveDatum::parse("A3"));
  auto comps = dynkin_components(a3, 0b101);
  CHECK(comps == std::vector<SimpleSubset>{0b001, 0b100});
  CHECK(dynkin_components(a3, 0b111) == std::vector<SimpleSubset>{0b111});
  CHECK(dynkin_components(a3, 0).empty());
}

TEST_CASE("subset helpers") {
  CHECK(full_subset(3) == 0b111);
  CHECK(full_subset(0) == 0);
  auto subs = all_subsets(0b101);
  CHECK(subs == std::vector<SimpleSubset>{0b000, 0b001, 0b100, 0b101});
  CHECK(subset_str(0b101) == "{1,3}");
  CHECK(subset_str(0) == "{}");
  CHECK(pairing({1, 2, 0}, {3, -1, 7}) == 1);
}
