#include "example_af.hpp"
#include "pafdp/errors.hpp"

#include <doctest.h>

using namespace pafdp;

TEST_CASE("arguments are sorted by name and attacks by index pair") {
  ArgumentationFramework af({"z", "b", "a"}, {{"z", "a"}, {"a", "z"}, {"b", "a"}});
  CHECK(af.names() == std::vector<std::string>{"a", "b", "z"});
  REQUIRE(af.num_attacks() == 3);
  CHECK(af.attack(0) == Attack{0, 2});
  CHECK(af.attack(1) == Attack{1, 0});
  CHECK(af.attack(2) == Attack{2, 0});
  CHECK(af.attacks_on(0).size() == 2);
  CHECK(af.attacks_from(0).size() == 1);
  CHECK(af.find_attack(2, 0) == 2U);
  CHECK_FALSE(af.find_attack(0, 1).has_value());
}

TEST_CASE("names are validated") {
  CHECK(is_valid_argument_name("a0_1"));
  CHECK_FALSE(is_valid_argument_name(""));
  CHECK_FALSE(is_valid_argument_name("a b"));
  CHECK_FALSE(is_valid_argument_name("x,y"));
  CHECK_THROWS_AS(ArgumentationFramework({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(ArgumentationFramework({"a"}, {{"a", "b"}}), InputError);
  CHECK_THROWS_AS(ArgumentationFramework({"a", "b"}, {{"a", "b"}, {"a", "b"}}), InputError);
}

TEST_CASE("sets by name") {
  const auto af = testing::example_af();
  const auto s = af.make_set({"e", "a", "c"});
  CHECK(s.count() == 3);
  CHECK(af.format(s) == "{a,c,e}");
  CHECK(af.names_of(s) == std::vector<std::string>{"a", "c", "e"});
  CHECK_THROWS_AS(af.make_set({"q"}), InputError);
  CHECK_THROWS_AS(af.check_set(ArgSet(2)), InputError);
  CHECK(af.full_set().count() == 5);
}

TEST_CASE("full subframework") {
  const auto af = testing::example_af();
  const auto f = Subframework::full(af);
  CHECK(f.args.all());
  CHECK(f.attacks.count() == 10);
}
