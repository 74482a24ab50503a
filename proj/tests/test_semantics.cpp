#include "example_af.hpp"
#include "pafdp/errors.hpp"
#include "pafdp/semantics.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace pafdp;

namespace {

std::set<std::string> rendered(const AF& af, const std::vector<ArgSet>& sets) {
  std::set<std::string> out;
  for (const auto& s : sets) out.insert(af.format(s));
  return out;
}

std::vector<ArgSet> conflict_free_sets(const AF& af) {
  std::vector<ArgSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << af.num_arguments()); ++m) {
    ArgSet s(af.num_arguments(), m);
    if (is_conflict_free(af, s)) out.push_back(s);
  }
  return out;
}

bool subset_of(const std::vector<ArgSet>& a, const std::vector<ArgSet>& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](const ArgSet& s) { return std::find(b.begin(), b.end(), s) != b.end(); });
}

}  // namespace

TEST_CASE("conflict-freeness on the example") {
  const auto af = testing::example_af();
  CHECK(is_conflict_free(af, af.make_set({"a", "c", "e"})));
  CHECK(is_conflict_free(af, af.empty_set()));
  CHECK_FALSE(is_conflict_free(af, af.make_set({"a", "b"})));
  CHECK_THROWS_AS(is_conflict_free(af, ArgSet(3)), InputError);
}

TEST_CASE("defense") {
  const auto af = testing::example_af();
  CHECK(defends(af, af.make_set({"a", "c", "e"}), af.index_of("a")));
  CHECK_FALSE(defends(af, af.empty_set(), af.index_of("a")));
  ArgumentationFramework lone({"x"}, {});
  CHECK(defends(lone, lone.empty_set(), 0));
}

TEST_CASE("extensions of the example") {
  const auto af = testing::example_af();
  CHECK(rendered(af, extensions(af, Semantics::Complete)) ==
        std::set<std::string>{"{}", "{e}", "{b}", "{b,e}", "{b,d}", "{a,c,e}"});
  const auto stb = rendered(af, extensions(af, Semantics::Stable));
  CHECK(stb == std::set<std::string>{"{a,c,e}", "{b,d}", "{b,e}"});
  CHECK(rendered(af, extensions(af, Semantics::Grounded)) == std::set<std::string>{"{}"});
  ArgumentationFramework free({"x", "y"}, {});
  CHECK(rendered(free, extensions(free, Semantics::Stable)) == std::set<std::string>{"{x,y}"});
}

TEST_CASE("labeling of a set") {
  const auto af = testing::example_af();
  const auto L = labeling_of_set(af, af.make_set({"a", "c", "e"}));
  CHECK(L == Labeling{Label::In, Label::Out, Label::In, Label::Out, Label::In});
  const auto Lb = labeling_of_set(af, af.make_set({"b"}));
  CHECK(Lb == Labeling{Label::Out, Label::In, Label::Out, Label::Undec, Label::Undec});
  ArgumentationFramework lone({"x"}, {});
  CHECK(labeling_of_set(lone, lone.empty_set()) == Labeling{Label::Undec});
  CHECK_THROWS_AS(labeling_of_set(af, af.make_set({"a", "b"})), InputError);
}

TEST_CASE("set of a labeling") {
  const auto af = testing::example_af();
  CHECK(af.format(set_of_labeling(
            af, {Label::In, Label::Out, Label::In, Label::Out, Label::In})) == "{a,c,e}");
  CHECK(set_of_labeling(af, Labeling(5, Label::Undec)).none());
  CHECK_THROWS_AS(set_of_labeling(af, Labeling(5)), InputError);
}

TEST_CASE("labelings") {
  const auto af = testing::example_af();
  std::vector<Labeling> expected;
  for (const auto& s : extensions(af, Semantics::Complete)) expected.push_back(labeling_of_set(af, s));
  auto got = labelings(af, Semantics::Complete);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expected);

  ArgumentationFramework lone({"x"}, {});
  CHECK(labelings(lone, Semantics::Stable) == std::vector<Labeling>{{Label::In}});

  const auto stb = labelings(af, Semantics::Stable);
  CHECK(stb.size() == extensions(af, Semantics::Stable).size());
  for (const auto& L : stb) {
    CHECK(std::none_of(L.begin(), L.end(), [](auto l) { return l == Label::Undec; }));
  }
}

TEST_CASE("properties on random frameworks") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto paf = testing::random_paf(seed);
    const auto& af = paf.framework();
    CAPTURE(seed);
    const auto cf = conflict_free_sets(af);
    for (const auto& s : cf) CHECK(set_of_labeling(af, labeling_of_set(af, s)) == s);

    for (auto sigma : {Semantics::Complete, Semantics::Stable}) {
      std::set<std::string> from_labelings;
      for (const auto& L : labelings(af, sigma)) from_labelings.insert(af.format(set_of_labeling(af, L)));
      CHECK(from_labelings == rendered(af, extensions(af, sigma)));
    }

    const auto adm = extensions(af, Semantics::Admissible);
    const auto com = extensions(af, Semantics::Complete);
    const auto stb = extensions(af, Semantics::Stable);
    CHECK(subset_of(stb, com));
    CHECK(subset_of(com, adm));
    CHECK(subset_of(adm, cf));
    CHECK(rendered(af, extensions(af, Semantics::ConflictFree)) == rendered(af, cf));

    const auto grd = extensions(af, Semantics::Grounded);
    REQUIRE(grd.size() == 1);
    CHECK(std::find(com.begin(), com.end(), grd.front()) != com.end());
    for (const auto& c : com) CHECK(grd.front().is_subset_of(c));
  }
}

TEST_CASE("semantics names") {
  CHECK(parse_semantics("com") == Semantics::Complete);
  CHECK(parse_semantics("stable") == Semantics::Stable);
  CHECK_FALSE(parse_semantics("preferred"));
  CHECK(short_name(Semantics::Admissible) == "adm");
}
