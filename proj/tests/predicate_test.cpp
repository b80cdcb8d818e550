// Apache License, Version 2.0, refer to LICENSE.txt
#include "doctest.h"

#include "credal/predicate.hpp"

#include <vector>

using namespace credal;

namespace {

parameter_grid coord_grid() {
  // Five points on a line, uniform prior.
  std::vector<grid_point> pts;
  for (int i = 0; i < 5; ++i)
    pts.push_back({"p" + std::to_string(i),
                   {static_cast<double>(i) / 4.0, static_cast<double>(i)},
                   0.2,
                   1.0});
  return parameter_grid(std::move(pts));
}

} // namespace

TEST_CASE("simple comparisons") {
  const auto grid = coord_grid();
  CHECK(hypothesis_from_predicate(grid, coordinate_predicate::parse("x0 == 0.5")) ==
        hypothesis::of(5, {2}));
  CHECK(hypothesis_from_predicate(grid, coordinate_predicate::parse("x0 <= 0.25")) ==
        hypothesis::of(5, {0, 1}));
  CHECK(hypothesis_from_predicate(grid, coordinate_predicate::parse("x0 > 0.5")) ==
        hypothesis::of(5, {3, 4}));
  CHECK(hypothesis_from_predicate(grid, coordinate_predicate::parse("x1 != 3")) ==
        hypothesis::of(5, {0, 1, 2, 4}));
}

TEST_CASE("coordinates can be compared with each other") {
  const auto grid = coord_grid();
  // x0 = i/4, x1 = i: equal only at i = 0.
  CHECK(hypothesis_from_predicate(grid, coordinate_predicate::parse("x0 == x1")) ==
        hypothesis::of(5, {0}));
  CHECK(hypothesis_from_predicate(grid, coordinate_predicate::parse("x0 <= x1")) ==
        hypothesis::full_set(5));
}

TEST_CASE("boolean connectives and negation") {
  const auto grid = coord_grid();
  CHECK(hypothesis_from_predicate(
            grid, coordinate_predicate::parse("x0 >= 0.25 && x0 <= 0.75")) ==
        hypothesis::of(5, {1, 2, 3}));
  CHECK(hypothesis_from_predicate(
            grid, coordinate_predicate::parse("x0 < 0.25 || x0 > 0.75")) ==
        hypothesis::of(5, {0, 4}));
  CHECK(hypothesis_from_predicate(
            grid, coordinate_predicate::parse("!(x0 == 0.5)")) ==
        hypothesis::of(5, {0, 1, 3, 4}));
  CHECK(hypothesis_from_predicate(
            grid, coordinate_predicate::parse("not (x1 >= 1 and x1 <= 3)")) ==
        hypothesis::of(5, {0, 4}));
  CHECK(hypothesis_from_predicate(
            grid,
            coordinate_predicate::parse("x1 == 0 or x1 == 2 or x1 == 4")) ==
        hypothesis::of(5, {0, 2, 4}));
}

TEST_CASE("negative literals and precedence") {
  const auto grid = coord_grid();
  CHECK(hypothesis_from_predicate(grid, coordinate_predicate::parse("x0 > -1")) ==
        hypothesis::full_set(5));
  // && binds tighter than ||.
  CHECK(hypothesis_from_predicate(
            grid, coordinate_predicate::parse(
                      "x1 == 0 || x1 >= 3 && x1 <= 3.5")) ==
        hypothesis::of(5, {0, 3}));
}

TEST_CASE("parse errors are config errors") {
  CHECK_THROWS_AS(coordinate_predicate::parse(""), config_error);
  CHECK_THROWS_AS(coordinate_predicate::parse("x0 =="), config_error);
  CHECK_THROWS_AS(coordinate_predicate::parse("x0 0.5"), config_error);
  CHECK_THROWS_AS(coordinate_predicate::parse("(x0 == 0.5"), config_error);
  CHECK_THROWS_AS(coordinate_predicate::parse("x == 0.5"), config_error);
  CHECK_THROWS_AS(coordinate_predicate::parse("x0 == 0.5 extra"), config_error);
  CHECK_THROWS_AS(coordinate_predicate::parse("&& x0 == 1"), config_error);
}

TEST_CASE("missing coordinates are evaluation errors") {
  const auto grid = coord_grid();
  const auto pred = coordinate_predicate::parse("x7 == 0");
  CHECK_THROWS_AS(hypothesis_from_predicate(grid, pred), evaluation_error);
}

TEST_CASE("the parsed text is preserved") {
  const auto pred = coordinate_predicate::parse("x0 <= x1");
  CHECK(pred.text() == "x0 <= x1");
}
