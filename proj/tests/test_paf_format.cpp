#include "pafdp/errors.hpp"
#include "pafdp/grid_generator.hpp"
#include "pafdp/paf_format.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace pafdp;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_paf(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("example file") {
  const auto doc = testing::load("cycle5.paf");
  const auto& af = doc.paf.framework();
  CHECK(af.num_arguments() == 5);
  CHECK(af.num_attacks() == 10);
  CHECK(doc.paf.arg_probability(af.index_of("a")) == Rational(4, 5));
  CHECK(doc.paf.attack_probability(*af.find_attack(af.index_of("e"), af.index_of("d"))) ==
        Rational(3, 10));
  CHECK(doc.query_set == std::vector<std::string>{"a", "c", "e"});
  CHECK(doc.query_argument == "e");
  CHECK(doc.comments.size() == 1);

  const auto text = serialize_paf(doc);
  const auto again = parse_paf(text);
  CHECK(serialize_paf(again) == text);
  CHECK(again.paf.framework().attacks().size() == 10);
}

TEST_CASE("empty documents") {
  const auto doc = parse_paf("");
  CHECK(doc.paf.framework().num_arguments() == 0);
  CHECK_FALSE(doc.query_set);
  CHECK_FALSE(doc.query_argument);
  CHECK(serialize_paf(doc).empty());
  CHECK(parse_paf("set\n").query_set == std::vector<std::string>{});
}

TEST_CASE("canonical order on output") {
  const auto doc = parse_paf("arg z 0.5\narg a 1\natt z a 1\natt a z 0.25\nset z a\n");
  CHECK(serialize_paf(doc) == "arg a 1\narg z 0.5\natt a z 0.25\natt z a 1\nset a z\n");
}

TEST_CASE("fractions are accepted and decimals preferred on output") {
  const auto doc = parse_paf("arg x 1/3\narg y 3/4\n");
  CHECK(doc.paf.arg_probability(0) == Rational(1, 3));
  CHECK(serialize_paf(doc) == "arg x 1/3\narg y 0.75\n");
}

TEST_CASE("errors carry line and column") {
  CHECK(error_of("att a b 0\n").find("line 1") != std::string::npos);
  const auto zero = error_of("arg a 1\narg b 1\natt a b 0\n");
  CHECK(zero.find("line 3") != std::string::npos);
  CHECK(zero.find("zero-probability attack; remove it") != std::string::npos);
  CHECK(error_of("arg a 0\n").find("zero-probability") != std::string::npos);
  CHECK(error_of("arg a 1.5\n").find("line 1") != std::string::npos);
  CHECK(error_of("arg a x\n").find("column 7") != std::string::npos);
  CHECK(error_of("arg a 1\natt a b 1\n").find("undeclared") != std::string::npos);
  CHECK(error_of("arg a 1\narg a 1\n").find("duplicate") != std::string::npos);
  CHECK(error_of("arg a 1\narg b 1\natt a b 1\natt a b 0.5\n").find("duplicate") !=
        std::string::npos);
  CHECK(error_of("arg a 1\nset a a\n").find("repeated") != std::string::npos);
  CHECK(error_of("frobnicate\n").find("unknown directive") != std::string::npos);
  CHECK(error_of("arg a\n").find("line 1") != std::string::npos);
  CHECK(error_of("arg a,b 1\n").find("line 1") != std::string::npos);
}

TEST_CASE("generated documents round-trip byte-identically") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto doc = generate_grid({2 + seed % 4, 2 + seed % 7, seed});
    const auto text = serialize_paf(doc);
    CHECK(serialize_paf(parse_paf(text)) == text);
  }
}
