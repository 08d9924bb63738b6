#include <map>

#include "doctest.h"

#include "bubblepat/classification.hpp"
#include "bubblepat/operators.hpp"
#include "bubblepat/oracle.hpp"

using namespace bubblepat;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }

}  // namespace

TEST_CASE("case analysis on the canonical examples") {
  CHECK(classify(P("1")).kind == Case::EmptyClass);
  CHECK(classify(P("12")).kind == Case::SingletonClass);
  CHECK(classify(P("21")).kind == Case::OneLr);
  CHECK(classify(P("312")).kind == Case::OneLr);
  CHECK(classify(P("213")).kind == Case::TwoLrEndsMax);
  CHECK(classify(P("231")).kind == Case::TwoLrGeneral);
  CHECK(classify(P("1324")).kind == Case::ThreeLrReducible);
  CHECK(classify(P("123")).kind == Case::ThreeLrSpecial);
  CHECK(classify(P("2134")).kind == Case::ThreeLrSpecial);
  CHECK(classify(P("1234")).kind == Case::NotAClass);
  CHECK(classify(P("2341")).kind == Case::NotAClass);
  CHECK_THROWS_AS(classify(Permutation{}), EmptyPermutation);
}

TEST_CASE("classification details") {
  const Classification c231 = classify(P("231"));
  CHECK(c231.lr_positions == std::vector<int>{1, 2});
  REQUIRE(c231.decomposition.has_value());
  CHECK(c231.decomposition->a == 2);
  CHECK(c231.decomposition->alpha.empty());
  CHECK(c231.decomposition->b == 3);
  CHECK(c231.decomposition->beta == Word{1});
  CHECK(!c231.reduced.has_value());

  const Classification c213 = classify(P("213"));
  REQUIRE(c213.reduced.has_value());
  CHECK(*c213.reduced == P("21"));

  const Classification c1324 = classify(P("1324"));
  REQUIRE(c1324.reduced.has_value());
  CHECK(*c1324.reduced == P("132"));

  const Classification bad = classify(P("2341"));
  REQUIRE(bad.decomposition.has_value());
  CHECK(bad.decomposition->a == 2);
  CHECK(bad.decomposition->b == 3);
  CHECK(bad.decomposition->c == 4);
  CHECK(bad.decomposition->gamma == Word{1});
  CHECK(bad.decomposition->trailing_max == 5);

  const Classification bad2 = classify(P("1234"));
  REQUIRE(bad2.decomposition.has_value());
  CHECK(bad2.decomposition->c == 3);
  CHECK(bad2.decomposition->gamma.empty());
  CHECK(bad2.decomposition->trailing_max == 4);
}

TEST_CASE("every permutation gets exactly one case; good counts are known") {
  std::map<int, int> good_counts;
  for (int n = 1; n <= 6; ++n) {
    SnStream stream(n);
    while (auto p = stream.next()) {
      const Classification c = classify(*p);
      if (c.good()) good_counts[n] += 1;

      // shape sanity per case
      const LrDecomposition lr = lr_decompose(*p);
      const int k = lr.count();
      switch (c.kind) {
        case Case::EmptyClass: CHECK(p->size() == 1); break;
        case Case::SingletonClass: CHECK(*p == P("12")); break;
        case Case::OneLr: CHECK(k == 1); break;
        case Case::TwoLrEndsMax:
          CHECK(k == 2);
          CHECK(p->ends_with_max());
          break;
        case Case::TwoLrGeneral:
          CHECK(k == 2);
          CHECK(!p->ends_with_max());
          break;
        case Case::ThreeLrReducible:
        case Case::ThreeLrSpecial:
          CHECK(k == 3);
          CHECK(lr.positions[2] == p->size());
          break;
        case Case::NotAClass:
          CHECK(k >= 3);
          CHECK((k > 3 || lr.positions[2] != p->size()));
          break;
      }

      if (c.decomposition) {
        const auto& d = *c.decomposition;
        for (int v : d.alpha) CHECK(v < d.a);
        if (d.b) {
          CHECK(d.a < *d.b);
          for (int v : d.beta) CHECK(v < *d.b);
        }
        if (d.c) CHECK(*d.b < *d.c);
      }
    }
  }
  CHECK(good_counts[2] == 2);
  CHECK(good_counts[3] == 6);
  CHECK(good_counts[4] == 20);
  CHECK(good_counts[5] == 85);
}

TEST_CASE("append_max") {
  CHECK(append_max(P("2341")) == P("23415"));
  CHECK(append_max(P("21")) == P("213"));
  CHECK(append_max(Permutation{}) == P("1"));
  CHECK_THROWS_AS(append_max(P("123")), EndsWithMax);
  CHECK_THROWS_AS(append_max(P("213")), EndsWithMax);
}

TEST_CASE("witness pairs for the worked examples") {
  const auto [a1, a2] = witness_pair(P("1234"));
  CHECK(a1 == P("2143"));
  CHECK(a2 == P("52143"));

  const auto [b1, b2] = witness_pair(P("2341"));
  CHECK(b1 == P("32541"));
  CHECK(b2 == P("632541"));

  CHECK_THROWS_AS(witness_pair(P("231")), IsGoodPermutation);
  CHECK_THROWS_AS(witness_pair(P("123")), IsGoodPermutation);
}

TEST_CASE("witness pairs separate memberships for every bad pattern up to length 5") {
  for (int n = 4; n <= 5; ++n) {
    SnStream stream(n);
    while (auto p = stream.next()) {
      if (classify(*p).good()) continue;
      const auto [t1, t2] = witness_pair(*p);
      CHECK(contains(t2, t1));
      CHECK(contains(bubble_splice(t1), *p));
      CHECK(!contains(bubble_splice(t2), *p));
    }
  }
}

TEST_CASE("classification serializes with stable case names") {
  const nlohmann::json j = classify(P("2341"));
  CHECK(j["case"] == "NotAClass");
  CHECK(j["good"] == false);
  CHECK(j["decomposition"]["trailing_max"] == 5);
  CHECK(j["lr_maxima_positions"] == nlohmann::json({1, 2, 3}));

  const nlohmann::json g = classify(P("213"));
  CHECK(g["case"] == "TwoLrEndsMax");
  CHECK(g["reduced"] == "2 1");
}
