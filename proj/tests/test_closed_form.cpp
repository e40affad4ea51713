#include "doctest.h"
#include "maxwelter/closed_form.hpp"
#include "maxwelter/errors.hpp"
#include "maxwelter/verify.hpp"
#include "naive_oracle.hpp"

using namespace maxwelter;

namespace {

naive::Squares squares_of(const Position& p) { return {p.squares().begin(), p.squares().end()}; }

}  // namespace

TEST_CASE("is_p_position_normal") {
  CHECK(is_p_position_normal(Position{2, 3}));
  CHECK_FALSE(is_p_position_normal(Position{1, 2}));
  CHECK(is_p_position_normal(Position{0, 1}));
  CHECK(is_p_position_normal(Position{0, 1, 2}));
  CHECK(is_p_position_normal(Position{0, 1, 2, 3}));
  CHECK_THROWS_AS(is_p_position_normal(Position{4}), PreconditionError);
}

TEST_CASE("has_value_one_normal") {
  CHECK(has_value_one_normal(Position{0, 2}));
  CHECK(value_one_case(Position{0, 2}) == ValueOneCase::SingleGap);
  CHECK(has_value_one_normal(Position{3, 4}));
  CHECK(value_one_case(Position{3, 4}) == ValueOneCase::AdjacentOdd);
  CHECK_FALSE(has_value_one_normal(Position{0, 1, 4}));
  CHECK(value_one_case(Position{0, 2, 3, 4}) == ValueOneCase::SingleGap);
  CHECK(value_one_case(Position{0, 1, 2, 4}) == ValueOneCase::SingleGap);
  CHECK_THROWS_AS(has_value_one_normal(Position{1}), PreconditionError);
}

TEST_CASE("corollary_value") {
  CHECK(corollary_value(Position{1, 2, 5}) == GrundyValue{3});
  CHECK_FALSE(corollary_value(Position{0, 1, 5}).has_value());
  CHECK(corollary_value(Position{0, 3, 4, 9}) == GrundyValue{5});
  CHECK_FALSE(corollary_value(Position{1, 2, 3}).has_value());
  CHECK_THROWS_AS(corollary_value(Position{2, 3}), PreconditionError);
}

TEST_CASE("excluded form") {
  CHECK(is_excluded_form(Position{0, 1, 5}));
  CHECK(is_excluded_form(Position{0, 1, 3}));
  CHECK_FALSE(is_excluded_form(Position{0, 1, 2}));
  CHECK_FALSE(is_excluded_form(Position{0, 2, 5}));
}

TEST_CASE("check_value_two_gap") {
  CHECK(check_value_two_gap(Position{1, 2, 4}, 2));
  CHECK(check_value_two_gap(Position{0, 1, 4}, 2));
  CHECK_FALSE(check_value_two_gap(Position{1, 2, 5}, 2));
  CHECK(check_value_two_gap(Position{1, 2, 5}, 3));
  CHECK_THROWS_AS(check_value_two_gap(Position{2, 3}, 0), PreconditionError);
}

TEST_CASE("winning_move_closed_form examples") {
  CHECK(winning_move_closed_form(Position{1, 2, 5}) == Move{5, 0});
  CHECK(winning_move_closed_form(Position{0, 4}) == Move{4, 1});
  CHECK(winning_move_closed_form(Position{3, 4}) == Move{4, 2});
  CHECK_THROWS_AS(winning_move_closed_form(Position{2, 3}), PreconditionError);
  CHECK_THROWS_AS(winning_move_closed_form(Position{0, 1, 2}), PreconditionError);
  CHECK_THROWS_AS(winning_move_closed_form(Position{7}), PreconditionError);
}

TEST_CASE("misere classifiers") {
  CHECK(is_p_position_misere(Position{0, 2}));
  CHECK(is_p_position_misere(Position{1, 2}));
  CHECK_FALSE(is_p_position_misere(Position{2, 3}));
  CHECK(has_value_one_misere(Position{2, 3}));
  CHECK(has_value_one_misere(Position{0, 1}));
  CHECK_FALSE(has_value_one_misere(Position{0, 2}));
}

TEST_CASE("classifiers match the naive oracle on a small space") {
  naive::Oracle normal;
  naive::Oracle misere{false, true, {}};
  for (const auto& p : enumerate({2, 5, 11})) {
    const auto g = normal.value(squares_of(p));
    const auto gm = misere.value(squares_of(p));
    INFO(p.to_string());
    CHECK(is_p_position_normal(p) == (g == 0));
    CHECK(has_value_one_normal(p) == (g == 1));
    CHECK_FALSE((is_p_position_normal(p) && has_value_one_normal(p)));
    CHECK(is_p_position_misere(p) == (gm == 0));
    CHECK(has_value_one_misere(p) == (gm == 1));
    if (p.size() >= 3) {
      if (auto v = corollary_value(p)) CHECK(*v == g);
      CHECK(check_value_two_gap(p, g));
    }
    const ValueClass vc = classify_value(p);
    if (vc.exact) CHECK(*vc.exact == g);
    if (!is_terminal(p) && g != 0) {
      const Move m = winning_move_closed_form(p);
      CHECK(normal.value(squares_of(apply_move(p, m, Ruleset::MaxWelter))) == 0);
    }
  }
}
