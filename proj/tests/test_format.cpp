#include <string>

#include "doctest.h"
#include "gpd/format.hpp"
#include "gpd/standard.hpp"

using namespace gpd;

namespace {

// Line number reported for a text that must fail to parse.
int parse_error_line(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return -1;
}

const char* kStdForms = R"(# one of every standard construction
std N = null 3
std P = pair 2
std C = cyclic 4
std S = sym3
std E = equivrel 4 0 0 1 1
std A = action cyclic 2 on 2 1 0
std U = union P C
std PR = product C C
std I = induce C along 0 0
)";

const char* kExplicitPair = R"(groupoid G
  objects 2
  arrow 0 0 0
  arrow 1 0 1
  arrow 2 1 0
  arrow 3 1 1
  unit 0 0
  unit 1 3
  inv 0 0
  inv 1 2
  inv 2 1
  inv 3 3
  comp 0 0 0
  comp 0 2 2   # (0 after 2) keeps the source of 2
  comp 1 0 1
  comp 1 2 3
  comp 2 1 0
  comp 2 3 2
  comp 3 1 1
  comp 3 3 3
end
)";

}  // namespace

TEST_SUITE("format") {

TEST_CASE("standard constructions parse with the right shapes") {
  Document doc = parse_document(kStdForms);
  REQUIRE(doc.groupoids.size() == 9);
  auto sizes = [&](const char* name) {
    const GroupoidPtr* g = doc.find_groupoid(name);
    REQUIRE(g != nullptr);
    return std::pair<int, int>{(*g)->num_objects(), (*g)->num_arrows()};
  };
  CHECK(sizes("N") == std::pair<int, int>{3, 3});
  CHECK(sizes("P") == std::pair<int, int>{2, 4});
  CHECK(sizes("C") == std::pair<int, int>{1, 4});
  CHECK(sizes("S") == std::pair<int, int>{1, 6});
  CHECK(sizes("E") == std::pair<int, int>{4, 8});
  CHECK(sizes("A") == std::pair<int, int>{2, 4});
  CHECK(sizes("U") == std::pair<int, int>{3, 8});
  CHECK(sizes("PR") == std::pair<int, int>{1, 16});
  CHECK(sizes("I") == std::pair<int, int>{2, 16});

  CHECK(classify(**doc.find_groupoid("P")).to_string() ==
        "banal principal transitive");
  CHECK(find_isomorphism(*doc.find_groupoid("A"),
                         share(pair_groupoid(2)))
            .has_value());
  CHECK(doc.find_groupoid("missing") == nullptr);
}

TEST_CASE("minimal std document") {
  Document doc = parse_document("std G = pair 2\n");
  REQUIRE(doc.groupoids.size() == 1);
  CHECK(doc.groupoids[0].first == "G");
  CHECK(doc.groupoids[0].second->num_objects() == 2);
  CHECK(doc.groupoids[0].second->num_arrows() == 4);
}

TEST_CASE("explicit groupoid blocks parse and validate") {
  Document doc = parse_document(kExplicitPair);
  const GroupoidPtr* g = doc.find_groupoid("G");
  REQUIRE(g != nullptr);
  CHECK(same_groupoid(**g, pair_groupoid(2)));
}

TEST_CASE("a missing composition line names the composable pair") {
  std::string text = kExplicitPair;
  std::string::size_type pos = text.find("  comp 3 3 3\n");
  REQUIRE(pos != std::string::npos);
  text.erase(pos, std::string("  comp 3 3 3\n").size());
  CHECK_THROWS_WITH_AS(
      parse_document(text),
      "groupoid G: comp undefined for composable pair (3, 3)",
      ValidationError);
}

TEST_CASE("functor blocks parse and validate") {
  std::string text = R"(std C4 = cyclic 4
std C2 = cyclic 2
functor m2 : C4 -> C2
  obj 0 0
  arr 0 0
  arr 1 1
  arr 2 0
  arr 3 1
end
)";
  Document doc = parse_document(text);
  const Functor* f = doc.find_functor("m2");
  REQUIRE(f != nullptr);
  CHECK(f->arrow_map() == std::vector<int>{0, 1, 0, 1});
  CHECK(analyze_functor(*f).s_extensor);

  std::string bad = R"(std C4 = cyclic 4
functor e : C4 -> C4
  obj 0 0
  arr 0 0
  arr 1 1
  arr 2 0
  arr 3 3
end
)";
  CHECK_THROWS_WITH_AS(parse_document(bad),
                       "functor e: composition not preserved at (1, 1, 2)",
                       ValidationError);
}

TEST_CASE("fraction blocks resolve their functors") {
  std::string text = R"(std G = pair 2
std H = null 1
functor idG : G -> G
  obj 0 0
  obj 1 1
  arr 0 0
  arr 1 1
  arr 2 2
  arr 3 3
end
functor f : G -> H
  obj 0 0
  obj 1 0
  arr 0 0
  arr 1 0
  arr 2 0
  arr 3 0
end
fraction mer : H <- G -> G
  num idG
  den f
end
)";
  Document doc = parse_document(text);
  const Fraction* fr = doc.find_fraction("mer");
  REQUIRE(fr != nullptr);
  CHECK(same_groupoid(fr->source(), null_groupoid(1)));
  CHECK(same_groupoid(fr->target(), pair_groupoid(2)));
  CHECK(check_meromorphism(*fr).is_meromorphism());
}

TEST_CASE("parse errors carry their location") {
  CHECK(parse_error_line("groupoid G\n  objects x\nend\n") == 2);
  CHECK(parse_error_line("std G = pair 2\nstd G = pair 3\n") == 2);
  CHECK(parse_error_line("std G = frobnicate 2\n") == 1);
  CHECK(parse_error_line("functor f : A -> B\nend\n") == 1);
  CHECK(parse_error_line("nonsense directive\n") == 1);

  try {
    parse_document("groupoid G\n  objects x\nend\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  Document doc = parse_document(
      "# leading comment\n\nstd G = pair 2  # trailing comment\n\n");
  CHECK(doc.groupoids.size() == 1);
}

TEST_CASE("serialization round trips to a fixed point") {
  std::string text = std::string(kStdForms) +
                     R"(functor swap : P -> P
  obj 0 1
  obj 1 0
  arr 0 3
  arr 1 2
  arr 2 1
  arr 3 0
end
fraction g : P <- P -> P
  num swap
  den swap
end
)";
  Document doc = parse_document(text);
  std::string once = serialize_document(doc);
  Document doc2 = parse_document(once);
  REQUIRE(doc2.groupoids.size() == doc.groupoids.size());
  for (size_t i = 0; i < doc.groupoids.size(); ++i) {
    CHECK(doc2.groupoids[i].first == doc.groupoids[i].first);
    CHECK(same_groupoid(*doc2.groupoids[i].second, *doc.groupoids[i].second));
  }
  REQUIRE(doc2.functors.size() == 1);
  CHECK(doc2.functors[0].second.arrow_map() ==
        doc.functors[0].second.arrow_map());
  REQUIRE(doc2.fractions.size() == 1);
  CHECK(serialize_document(doc2) == once);
}

}  // TEST_SUITE
