#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "addtrans/errors.hpp"
#include "addtrans/table_io.hpp"

using namespace addtrans;

namespace {

TableDoc random_doc(std::mt19937_64* rng, bool with_provenance) {
  std::uniform_int_distribution<long> num(-100'000, 100'000);
  std::uniform_int_distribution<long> den(1, 100'000);
  std::uniform_int_distribution<int> len(0, 40);
  TableDoc doc;
  if (with_provenance) doc.provenance = "random fixture";
  const int rows = len(*rng);
  for (int i = 0; i < rows; ++i) {
    doc.rows.emplace_back(static_cast<std::uint64_t>(i + 1),
                          Value(Integer(num(*rng)), Integer(den(*rng))));
  }
  return doc;
}

}  // namespace

TEST_CASE("csv emission format") {
  TableDoc doc;
  doc.rows = {{1, Value(0)}, {2, Value(Integer(-3), Integer(2))},
              {3, Value(7)}};
  CHECK(to_csv(doc) == "n,value\n1,0\n2,-3/2\n3,7\n");
}

TEST_CASE("csv round-trip is byte identical") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 200; ++i) {
    const TableDoc doc = random_doc(&rng, i % 2 == 0);
    const std::string csv = to_csv(doc);
    const auto parsed = parse_csv(csv);
    REQUIRE(parsed);
    CHECK(to_csv(*parsed) == csv);
  }
}

TEST_CASE("json round-trip is byte identical") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 200; ++i) {
    const TableDoc doc = random_doc(&rng, i % 2 == 0);
    const std::string json = to_json(doc);
    const auto parsed = parse_json(json);
    REQUIRE(parsed);
    CHECK(parsed->provenance == doc.provenance);
    CHECK(to_json(*parsed) == json);
  }
}

TEST_CASE("csv parser rejects malformed input") {
  CHECK_FALSE(parse_csv(""));
  CHECK_FALSE(parse_csv("value,n\n1,2\n"));
  CHECK_FALSE(parse_csv("n,value\n1,2"));       // missing trailing LF
  CHECK_FALSE(parse_csv("n,value\nx,2\n"));
  CHECK_FALSE(parse_csv("n,value\n1,1.5\n"));
  CHECK_FALSE(parse_csv("n,value\n1\n"));
  CHECK(parse_csv("n,value\n"));                // header only: empty table
  CHECK(parse_csv("n,value\n")->rows.empty());
}

TEST_CASE("json parser rejects malformed input") {
  CHECK_FALSE(parse_json(""));
  CHECK_FALSE(parse_json("[]"));
  CHECK_FALSE(parse_json("{\"rows\":[]}"));
  CHECK_FALSE(parse_json(
      "{\"columns\":[\"n\",\"value\"],\"rows\":[[1,2]]}"));  // value not str
  CHECK_FALSE(parse_json(
      "{\"columns\":[\"n\",\"value\"],\"rows\":[[-1,\"2\"]]}"));
  CHECK(parse_json("{\"columns\":[\"n\",\"value\"],\"rows\":[]}"));
}

TEST_CASE("table_doc slices a ValueTable") {
  ValueTable t;
  t.bound = 5;
  t.values = {Value(0), Value(1), Value(2), Value(3), Value(4), Value(5)};
  t.provenance = "fixture";
  const TableDoc all = table_doc(t);
  CHECK(all.rows.size() == 5);
  CHECK(all.provenance == "fixture");
  const TableDoc slice = table_doc(t, 2, 4);
  CHECK(slice.rows.size() == 3);
  CHECK(slice.rows.front().first == 2);
  CHECK(slice.rows.back().second == Value(4));
  CHECK_THROWS_AS(table_doc(t, 0, 4), RangeError);
  CHECK_THROWS_AS(table_doc(t, 2, 6), RangeError);
}

TEST_CASE("text emission aligns the n column") {
  TableDoc doc;
  doc.rows = {{9, Value(1)}, {10, Value(Integer(1), Integer(3))}};
  CHECK(to_text(doc) == " 9  1\n10  1/3\n");
}
