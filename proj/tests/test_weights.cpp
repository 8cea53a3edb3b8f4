#include "doctest.h"

#include "kcatalan/weights.hpp"

#include <random>

using namespace kcatalan;

TEST_CASE("weight_at evaluates prefix then tail at the absolute index") {
  CHECK(WeightVector::odd_squares().at(4) == 81);
  CHECK(WeightVector({1, 1, 1}).at(7) == 0);
  CHECK(WeightVector::geometric(2).at(3) == 8);
  CHECK(WeightVector::geometric(2).at(0) == 1);
  CHECK(WeightVector::ones().at(1000) == 1);

  const WeightVector mixed({5, 6}, {TailKind::odd_squares, 0});
  CHECK(mixed.at(0) == 5);
  CHECK(mixed.at(1) == 6);
  CHECK(mixed.at(2) == 25);  // (2*2+1)^2, not the first odd square
  CHECK(WeightVector({7}, {TailKind::geometric, 3}).at(2) == 9);
  CHECK_THROWS_AS(WeightVector::ones().at(-1), std::invalid_argument);
}

TEST_CASE("parse_weight_spec recognises every production") {
  CHECK(parse_weight_spec("ones").tail() == Tail{TailKind::constant, 1});
  CHECK(parse_weight_spec("ones").prefix().empty());

  const WeightVector listed = parse_weight_spec("list:1,9,25;tail:odd-squares");
  CHECK(listed.prefix() == std::vector<Integer>{1, 9, 25});
  CHECK(listed.tail().kind == TailKind::odd_squares);
  CHECK(listed == WeightVector::odd_squares());

  const WeightVector bare = parse_weight_spec("list:1,1,1");
  CHECK(bare.prefix() == std::vector<Integer>{1, 1, 1});
  CHECK(bare.tail().kind == TailKind::zero);

  CHECK(parse_weight_spec("geom:-3").at(3) == -27);
  CHECK(parse_weight_spec("list:2;tail:const=5").at(9) == 5);
  CHECK(parse_weight_spec("list:2;tail:geom=2").at(4) == 16);
  CHECK(parse_weight_spec("list:-4,+3;tail:zero").prefix() == std::vector<Integer>{-4, 3});
  CHECK(parse_weight_spec("list:123456789012345678901234567890").at(0) ==
        Integer("123456789012345678901234567890"));
}

TEST_CASE("parse_weight_spec reports the failing position") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_weight_spec(text);
    } catch (const WeightSpecError& e) {
      return e.position();
    }
    FAIL("expected a WeightSpecError for ", text);
    return 0;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("twos") == 0);
  CHECK(position_of("geom:x") == 5);
  CHECK(position_of("list:1,,2") == 7);
  CHECK(position_of("list:1.5") == 6);
  CHECK(position_of("list:1;tail:triangular") == 12);
  CHECK(position_of("ones ") == 4);
}

TEST_CASE("zero_from keeps the first t weights") {
  const WeightVector cut = zero_from(WeightVector::ones(), 3);
  CHECK(cut.values(5) == std::vector<Integer>{1, 1, 1, 0, 0});
  CHECK(zero_from(WeightVector::odd_squares(), 1).values(3) == std::vector<Integer>{1, 0, 0});
  CHECK(zero_from(WeightVector::geometric(5), 0) == WeightVector({0}));
  CHECK_THROWS_AS(zero_from(WeightVector::ones(), -1), std::invalid_argument);
}

TEST_CASE("semantic equality ignores representation") {
  CHECK(WeightVector::geometric(1) == WeightVector::ones());
  CHECK(WeightVector::constant(0) == WeightVector());
  CHECK(WeightVector({1, 1}, {TailKind::constant, 1}) == WeightVector::ones());
  CHECK(WeightVector::geometric(0) == WeightVector({1}));
  CHECK_FALSE(WeightVector({1, 2}) == WeightVector({1, 3}));
  CHECK_FALSE(WeightVector::odd_squares() == WeightVector::geometric(9));
}

namespace {

WeightVector random_vector(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 5), val(-12, 12), kind(0, 3);
  std::vector<Integer> prefix;
  for (int i = len(rng); i > 0; --i) prefix.emplace_back(val(rng));
  Tail tail;
  switch (kind(rng)) {
    case 0: tail = {TailKind::zero, 0}; break;
    case 1: tail = {TailKind::constant, val(rng)}; break;
    case 2: tail = {TailKind::odd_squares, 0}; break;
    default: tail = {TailKind::geometric, val(rng) % 4}; break;
  }
  return WeightVector(std::move(prefix), tail);
}

}  // namespace

TEST_CASE("property: render then parse is the identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const WeightVector wv = random_vector(rng);
    const std::string text = render_weight_spec(wv);
    const WeightVector back = parse_weight_spec(text);
    CHECK_MESSAGE(back == wv, text);
    CHECK(back.values(12) == wv.values(12));
    CHECK(render_weight_spec(back) == text);
  }
}

TEST_CASE("property: zero_from agrees below t and vanishes above") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> cut(0, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightVector wv = random_vector(rng);
    const int t = cut(rng);
    const WeightVector z = zero_from(wv, t);
    for (int h = 0; h <= 100; ++h) {
      if (h < t) {
        REQUIRE(z.at(h) == wv.at(h));
      } else {
        REQUIRE(z.at(h) == 0);
      }
    }
  }
}

TEST_CASE("reduce_weights maps prefixes into [0, m)") {
  const WeightVector r = reduce_weights(WeightVector({-1, 28, 9}), 27);
  CHECK(r.prefix() == std::vector<Integer>{26, 1, 9});
  CHECK_THROWS_AS(reduce_weights(WeightVector::ones(), 5), std::invalid_argument);
}
