#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kbranch/text.hpp"

using namespace kbranch;
using namespace kbranch::text;

TEST_CASE("partitions") {
  CHECK(parse_partition("3,1,1") == Partition{3, 1, 1});
  CHECK(parse_partition("0").empty());
  CHECK(parse_partition("").empty());
  CHECK(parse_partition(" 2, 2 ") == Partition{2, 2});
  CHECK(parse_partition("2,0") == Partition{2});
  CHECK(format_partition(Partition{}) == "0");
  CHECK(format_partition(Partition{4, 2}) == "4,2");
  CHECK_THROWS_AS(parse_partition("2,x"), ParseError);
  CHECK_THROWS_AS(parse_partition("2,,1"), ParseError);
  CHECK_THROWS_AS(parse_partition("1,2"), ValidationError);
  CHECK_THROWS_AS(parse_partition("2,-1"), ValidationError);
}

TEST_CASE("generalized partitions") {
  auto g = parse_generalized("2,1,-2,-2", 4);
  CHECK(g.plus == Partition{2, 1});
  CHECK(g.minus == Partition{2, 2});
  CHECK(format_generalized(g, 4) == "2,1,-2,-2");
  CHECK(parse_generalized("2,1|2,2", 4) == g);
  CHECK(parse_generalized("0", 3) == GeneralizedPartition{});
  CHECK(format_generalized(GeneralizedPartition{}, 3) == "0,0,0");
  CHECK_THROWS_AS(parse_generalized("2,1,-2", 4), ValidationError);
  CHECK_THROWS_AS(parse_generalized("2,1|2,2", 3), ValidationError);
  CHECK_THROWS_AS(parse_generalized("1,2", 2), ValidationError);
}

TEST_CASE("groups") {
  CHECK(parse_group("O5") == GroupType::orthogonal(5));
  CHECK(parse_group("GL4") == GroupType::general_linear(4));
  CHECK(parse_group("Sp6") == GroupType::symplectic(3));
  CHECK_THROWS_AS(parse_group("Sp5"), ValidationError);
  CHECK_THROWS_AS(parse_group("O0"), ValidationError);
  CHECK_THROWS_AS(parse_group("U3"), ParseError);
  CHECK_THROWS_AS(parse_group("GL"), ParseError);
  CHECK_THROWS_AS(parse_group("O-1"), ParseError);
  for (auto s : {"O1", "O5", "GL1", "GL4", "Sp2", "Sp6"}) CHECK(parse_group(s).name() == s);
}

TEST_CASE("labels and label lists") {
  auto gl = GroupType::general_linear(2);
  CHECK(format_label(gl, parse_label(gl, "1,-1")) == "1,-1");
  auto o = GroupType::orthogonal(3);
  CHECK(std::get<Partition>(parse_label(o, "2,1")) == Partition{2, 1});
  std::vector<GroupType> gs{GroupType::symplectic(1), GroupType::symplectic(2)};
  auto l = parse_label_list(gs, "0;2,1");
  CHECK(format_label_list(gs, l) == "0;2,1");
  CHECK_THROWS_AS(parse_label_list(gs, "0"), ValidationError);
}

TEST_CASE("int lists") {
  CHECK(parse_int_list("2,-1,-2,0") == std::vector<int>{2, -1, -2, 0});
  CHECK(parse_int_list("+3") == std::vector<int>{3});
  CHECK(parse_int_list("").empty());
  CHECK(format_int_list({2, -1}) == "2,-1");
  CHECK_THROWS_AS(parse_int_list("1;2"), ParseError);
  CHECK(split("a;b;", ';') == std::vector<std::string>{"a", "b", ""});
}

TEST_CASE("tableau text") {
  auto a = Alphabet::symplectic(3);
  auto rows = parse_tableau_rows("2,3/2~,3~", a);
  CHECK(rows == std::vector<std::vector<int>>{{3, 5}, {4, 6}});
  auto t = make_tableau(SkewShape(Partition{2, 2}), a, rows);
  CHECK(format_tableau(t) == "2,3/2~,3~");
  auto p = parse_tableau_rows("1,1/4", Alphabet::plain(4));
  CHECK(format_tableau(make_tableau(SkewShape(Partition{2, 1}), Alphabet::plain(4), p)) == "1,1/4");
  CHECK_THROWS_AS(parse_tableau_rows("1~", Alphabet::plain(2)), ParseError);
  CHECK(format_symbol(2, a) == "1~");
  CHECK(format_symbol(1, a) == "1");
}
