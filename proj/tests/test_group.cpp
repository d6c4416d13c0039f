// Copyright 2026 The powerindex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <map>

#include "oracles.hpp"
#include "powerindex/group_spec.hpp"

using namespace powerindex;

namespace {

std::map<std::size_t, std::size_t> order_counts(const Group &g) {
  std::map<std::size_t, std::size_t> c;
  for (Element x = 0; x < g.order(); ++x) ++c[g.element_order(x)];
  return c;
}

std::string write_temp(const std::string &name, const std::string &text) {
  const auto path = std::filesystem::temp_directory_path() / ("powerindex_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const char *kSpecs[] = {"Z1",     "Z6",         "Z12",        "Ab[2,2]",  "Ab[2,4]", "Ab[3,3]",   "D6",
                        "D8",     "D12",        "D20",        "GDih[2,2]", "GDih[3,3]", "Dic3",  "Dic5",
                        "Q8",     "Q16",        "Q32",        "S3",       "S4",      "A4",        "A5",
                        "Meta[7,3,2]", "Meta[5,4,2]", "Prod(Z2,Q8)", "Prod(S3,Z3)", "Prod(D8, Z3)"};

}  // namespace

TEST_CASE("family groups satisfy the group invariants") {
  for (const char *spec : kSpecs) {
    INFO(spec);
    const Group g = construct_group(spec);
    CHECK(g.label().size() > 0);
    CHECK_FALSE(group_invariant_violation(g));
    CHECK((g.involutions().size() % 2 == 1) == (g.order() % 2 == 0));
  }
}

TEST_CASE("family orders") {
  CHECK(construct_group("D12").order() == 12);
  CHECK(construct_group("Dic3").order() == 12);
  CHECK(construct_group("Q16").order() == 16);
  CHECK(construct_group("GDih[2,2]").order() == 8);
  CHECK(construct_group("S5").order() == 120);
  CHECK(construct_group("A5").order() == 60);
  CHECK(construct_group("Meta[7,3,2]").order() == 21);
  CHECK(construct_group("Prod(Z2,Prod(Z3,Z5))").order() == 30);
}

TEST_CASE("element order profiles") {
  CHECK(order_counts(construct_group("Z6")) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
  const Group q8 = construct_group("Q8");
  CHECK(q8.involutions().size() == 1);
  CHECK(q8.element_order(4) == 4);  // y
  CHECK(q8.element_order(1) == 4);  // x
  CHECK(construct_group("D12").involutions().size() == 7);
  CHECK(construct_group("D8").involutions().size() == 5);
  CHECK(construct_group("Z7").involutions().empty());
  CHECK(construct_group("Z10").involutions().size() == 1);
  CHECK(construct_group("Q32").involutions().size() == 1);
  const Group z6 = construct_group("Z6");
  CHECK(element_order(z6, 1) == 6);
  CHECK(element_order(z6, 0) == 1);
  CHECK_THROWS_AS(z6.element_order(6), std::out_of_range);
  CHECK_FALSE(construct_group("S3").is_abelian());
  CHECK(construct_group("Ab[2,3]").is_cyclic());
  CHECK_FALSE(construct_group("Ab[2,2]").is_cyclic());
}

TEST_CASE("element orders match repeated multiplication") {
  for (const char *spec : kSpecs) {
    const Group g = construct_group(spec);
    for (Element x = 0; x < g.order(); ++x) {
      std::size_t k = 1;
      for (Element y = x; y != 0; y = g.mul(y, x)) ++k;
      REQUIRE(g.element_order(x) == k);
      REQUIRE(g.power(x, k) == 0);
      REQUIRE(g.cyclic_subgroup(x).size() == k);
    }
  }
}

TEST_CASE("direct products: orders multiply and element order is the lcm") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"Z4", "Z6"}, {"S3", "Z4"}, {"Q8", "D6"}, {"Dic3", "Z2"}, {"A4", "Z3"}};
  for (const auto &[a, b] : pairs) {
    const Group ga = construct_group(a), gb = construct_group(b);
    const Group p = construct_group("Prod(" + a + "," + b + ")");
    REQUIRE(p.order() == ga.order() * gb.order());
    for (Element x = 0; x < p.order(); ++x) {
      const auto xa = static_cast<Element>(x / gb.order()), xb = static_cast<Element>(x % gb.order());
      REQUIRE(p.element_order(x) == lcm(ga.element_order(xa), gb.element_order(xb)));
    }
  }
}

TEST_CASE("construction is deterministic") {
  for (const char *spec : kSpecs) REQUIRE(construct_group(spec) == construct_group(spec));
}

TEST_CASE("spec parser accepts the grammar and round-trips") {
  for (const char *spec : {"Z6", "Ab[2,4]", "D8", "GDih[2,2]", "Dic3", "Q8", "S4", "A4", "Meta[7,3,2]",
                           "Prod(Z2,Q8)", "Prod(Prod(Z2,Z2),S3)"}) {
    INFO(spec);
    CHECK(parse_group_spec(spec).to_string() == spec);
  }
  CHECK(parse_group_spec("Prod(D8, Z3)").to_string() == "Prod(D8,Z3)");
  CHECK(parse_group_spec("Ab[2, 2]").to_string() == "Ab[2,2]");
}

TEST_CASE("spec parser rejects malformed specs") {
  for (const char *bad : {"", "z6", "Z", "Z6x", "D7", "Q12", "Q4", "Dic1", "S8", "A9", "Ab[]", "Ab[2,", "Prod(Z2)",
                          "Prod(Z2,Z3", "Meta[7,3,3]", "Meta[6,2,2]", "Z 6", "Ab[2 ,2]", "Z0", "Z-1",
                          "Prod(S7,Z2)", "Foo"}) {
    INFO("'" << bad << "'");
    CHECK_THROWS_AS(parse_group_spec(bad), SpecParseError);
  }
}

TEST_CASE("Cayley tables: round trip and axiom reporting") {
  const Group s3 = construct_group("S3");
  const auto path = write_temp("s3.json", group_to_cayley_json(s3).dump());
  const Group loaded = construct_group("cayley:" + path);
  CHECK(loaded.order() == 6);
  CHECK(oracle::isomorphic(oracle::table_of(loaded), oracle::table_of(s3)));
  CHECK(construct_group("Prod(cayley:" + path + ",Z2)").order() == 12);

  auto axiom_error = [](const std::string &doc) -> std::string {
    try {
      group_from_cayley_json(nlohmann::json::parse(doc), "t");
    } catch (const GroupAxiomError &e) {
      return e.what();
    }
    return "";
  };
  CHECK(axiom_error(R"({"n":2,"mul":[[0,1],[1,0]]})").empty());
  CHECK_THAT(axiom_error(R"({"n":2,"mul":[[1,0],[0,1]]})"), Catch::Matchers::ContainsSubstring("identity"));
  CHECK_THAT(axiom_error(R"({"n":2,"mul":[[0,1],[1,2]]})"), Catch::Matchers::ContainsSubstring("closure"));
  CHECK_THAT(axiom_error(R"({"n":2,"mul":[[0,1],[1,1]]})"), Catch::Matchers::ContainsSubstring("inverses"));
  CHECK_THAT(axiom_error(R"({"n":3,"mul":[[0,1],[1,0]]})"), Catch::Matchers::ContainsSubstring("rows"));
  CHECK_FALSE(axiom_error(R"({"mul":[[0]]})").empty());
  // A Latin square with identity that is not associative (order 5 loop).
  CHECK_THAT(axiom_error(R"({"n":5,"mul":[[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]})"),
             Catch::Matchers::ContainsSubstring("associativity"));
  CHECK_THROWS_AS(construct_group("cayley:/nonexistent/file.json"), SpecParseError);
  const auto broken = write_temp("broken.json", "{ not json");
  CHECK_THROWS_AS(construct_group("cayley:" + broken), GroupAxiomError);
}

TEST_CASE("unique subgroup of prime order") {
  CHECK(unique_subgroup_of_prime_order(construct_group("Z12"), 2) == PrimeSubgroupStatus::unique);
  CHECK(unique_subgroup_of_prime_order(construct_group("Z12"), 3) == PrimeSubgroupStatus::unique);
  CHECK(unique_subgroup_of_prime_order(construct_group("Q16"), 2) == PrimeSubgroupStatus::unique);
  CHECK(unique_subgroup_of_prime_order(construct_group("D8"), 2) == PrimeSubgroupStatus::not_unique);
  CHECK(unique_subgroup_of_prime_order(construct_group("Z12"), 5) == PrimeSubgroupStatus::no_such_subgroup);
  CHECK_THROWS_AS(unique_subgroup_of_prime_order(construct_group("Z12"), 4), std::invalid_argument);
}

TEST_CASE("involutions_and_identity lists e first") {
  const auto u = involutions_and_identity(construct_group("D8"));
  REQUIRE(u.size() == 6);
  CHECK(u.front() == 0);
  CHECK(std::is_sorted(u.begin(), u.end()));
}
