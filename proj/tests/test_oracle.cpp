#include <doctest.h>

#include "stein/oracle.hpp"

using namespace stein;

TEST_CASE("flag step dimensions") {
  CHECK(oracle::flag_dims_of_subset(3, 0b00) == std::vector<int>{1, 2});
  CHECK(oracle::flag_dims_of_subset(3, 0b01) == std::vector<int>{2});
  CHECK(oracle::flag_dims_of_subset(3, 0b10) == std::vector<int>{1});
  CHECK(oracle::flag_dims_of_subset(3, 0b11).empty());
  CHECK(oracle::flag_dims_of_subset(1, 0).empty());
  CHECK_THROWS_AS(oracle::flag_dims_of_subset(2, 0b10), std::invalid_argument);
}

TEST_CASE("group orders by enumeration") {
  CHECK(oracle::group_order(1, 2) == 1);
  CHECK(oracle::group_order(1, 3) == 2);
  CHECK(oracle::group_order(2, 2) == 6);
  CHECK(oracle::group_order(2, 3) == 48);
  CHECK(oracle::group_order(3, 2) == 168);
  CHECK(oracle::group_order(3, 3) == 11232);
  CHECK_THROWS_AS(oracle::group_order(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(oracle::group_order(2, 5), std::invalid_argument);
}

TEST_CASE("nilpotent matrix counts through the full-subset springer count") {
  // with no flag condition the count is just the number of nilpotents, q^{n^2-n}
  CHECK(oracle::sp_count(2, 2, 0b1) == 4);
  CHECK(oracle::sp_count(2, 3, 0b1) == 9);
  CHECK(oracle::sp_count(3, 2, 0b11) == 64);
}

TEST_CASE("springer counts by enumeration") {
  CHECK(oracle::sp_count(2, 2, 0) == 6);
  CHECK(oracle::sp_count(2, 3, 0) == 12);
  CHECK(oracle::sp_count(3, 2, 0b00) == 168);
  CHECK(oracle::sp_count(3, 2, 0b01) == 112);
  CHECK(oracle::sp_count(3, 2, 0b10) == 112);
}

TEST_CASE("steinberg counts by enumeration") {
  CHECK(oracle::st_count(2, 2, 0, 0) == 12);
  CHECK(oracle::st_count(2, 3, 0, 0) == 24);
  CHECK(oracle::st_count(2, 2, 0, 1) == 6);
  CHECK(oracle::st_count(3, 2, 0b00, 0b00) == 1008);
  CHECK(oracle::st_count(3, 2, 0b01, 0b10) == 280);
  CHECK(oracle::st_count(3, 2, 0b01, 0b11) == 112);
  for (SimpleSubset J1 : all_subsets(SimpleSubset{0b11}))
    for (SimpleSubset J2 : all_subsets(SimpleSubset{0b11}))
      CHECK(oracle::st_count(3, 2, J1, J2) == oracle::st_count(3, 2, J2, J1));
}

TEST_CASE("triple space counts by enumeration") {
  CHECK(oracle::trip_count(2, 2, {-1, 0}, 0, 0) == 16);
  CHECK(oracle::trip_count(2, 3, {-1, 0}, 0, 0) == 36);
  CHECK(oracle::trip_count(2, 2, {-2, 0}, 0, 0) == 32);
  CHECK(oracle::trip_count(2, 2, {-2, 0}, 1, 1) == 8);
  // the trivial bundle gives the plain steinberg counts
  for (SimpleSubset J1 : all_subsets(SimpleSubset{0b1}))
    for (SimpleSubset J2 : all_subsets(SimpleSubset{0b1})) {
      CHECK(oracle::trip_count(2, 2, {0, 0}, J1, J2) == oracle::st_count(2, 2, J1, J2));
      CHECK(oracle::trip_count(2, 2, {-1, -1}, J1, J2) == oracle::st_count(2, 2, J1, J2));
    }
}

TEST_CASE("triple space counts are symmetric in the two marked points") {
  for (auto w : std::vector<std::vector<int>>{{-1, 0}, {-2, 0}, {-2, -1}})
    for (SimpleSubset J1 : all_subsets(SimpleSubset{0b1}))
      for (SimpleSubset J2 : all_subsets(SimpleSubset{0b1}))
        CHECK(oracle::trip_count(2, 2, w, J1, J2) == oracle::trip_count(2, 2, w, J2, J1));
}

TEST_CASE("triple space argument validation") {
  CHECK_THROWS_AS(oracle::trip_count(2, 2, {0, -1}, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(oracle::trip_count(2, 2, {1, 2}, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(oracle::trip_count(2, 2, {-1}, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(oracle::trip_count(3, 3, {-9, -9, 0}, 0, 0), std::invalid_argument);
}
