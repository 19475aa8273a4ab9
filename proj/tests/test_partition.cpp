#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "easycat/partition.hpp"
#include "support.hpp"

using namespace easycat;
using testsupport::random_partition;

namespace {
ColoredPartition P(const char* s) { return parse_partition(s); }
}  // namespace

TEST_CASE("parse and render literals") {
  const auto id = P("o|o;(u1 l1)");
  CHECK(id.upper_size() == 1);
  CHECK(id.lower_size() == 1);
  CHECK(id.block_count() == 1);
  CHECK(render_partition(id) == "o|o;(u1 l1)");

  const auto pair = P("|ox;(l1 l2)");
  CHECK(pair.lower_colors() == ColorWord{Color::White, Color::Black});
  CHECK(render_partition(ColoredPartition()) == "|;");
  CHECK(render_partition(P("|;")) == "|;");

  // blocks are rendered in order of their first point, points in canonical order
  CHECK(render_partition(P("oo|o;(l1 u2)(u1)")) == "oo|o;(u1)(u2 l1)");
}

TEST_CASE("malformed literals are rejected") {
  CHECK_THROWS_AS(P("|oo;(l1)(l2 l3)"), ParseError);
  CHECK_THROWS_AS(P("|ox;(l1)"), ParseError);            // l2 uncovered
  CHECK_THROWS_AS(P("|ox;(l1 l2)(l1)"), ParseError);     // l1 twice
  CHECK_THROWS_AS(P("|oy;(l1 l2)"), PartitionError);     // bad color
  CHECK_THROWS_AS(P("oo;(u1 u2)"), ParseError);          // no bar
  CHECK_THROWS_AS(P("|o;(l1"), ParseError);
  try {
    P("|o;(q1)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() > 0);
  }
}

TEST_CASE("tensor") {
  CHECK(render_partition(tensor(base::id(Color::White, Color::White),
                                base::id(Color::Black, Color::Black))) == "ox|ox;(u1 l1)(u2 l2)");
  CHECK(render_partition(tensor(P("|ox;(l1 l2)"), P("|xo;(l1 l2)"))) == "|oxxo;(l1 l2)(l3 l4)");
}

TEST_CASE("composition") {
  const auto loop = compose(P("|ox;(l1 l2)"), P("ox|;(u1 u2)"));
  CHECK(loop.partition == ColoredPartition());
  CHECK(loop.loops == 1);

  const auto p = P("ox|xoo;(u1 l2)(u2 l1 l3)");
  const auto c = compose(p, identity(p.lower_colors()));
  CHECK(c.partition == p);
  CHECK(c.loops == 0);

  const auto cross = compose(P("oo|oo;(u1 l1)(u2 l2)"), P("oo|oo;(u1 l2)(u2 l1)"));
  CHECK(cross.partition == base::crossing());
  CHECK(cross.loops == 0);

  try {
    compose(P("|ox;(l1 l2)"), P("oo|;(u1 u2)"));
    FAIL("expected ColorMismatchError");
  } catch (const ColorMismatchError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(compose(P("|o;(l1)"), P("oo|;(u1 u2)")), PartitionError);
}

TEST_CASE("involution and verticolor reflection") {
  CHECK(render_partition(involute(P("|ox;(l1 l2)"))) == "ox|;(u1 u2)");
  CHECK(involute(P("o|o;(u1 l1)")) == P("o|o;(u1 l1)"));
  CHECK(render_partition(verticolor_reflect(P("|oo;(l1 l2)"))) == "|xx;(l1 l2)");
  CHECK(render_partition(verticolor_reflect(P("|o;(l1)"))) == "|x;(l1)");
  CHECK(verticolor_reflect(base::block(3)) == base::block(3, Color::Black));
  // mirror image: the first point becomes the last one
  CHECK(render_partition(verticolor_reflect(P("|oox;(l1 l2)(l3)"))) == "|oxx;(l1)(l2 l3)");
}

TEST_CASE("rotation") {
  CHECK(render_partition(rotate(P("|oo;(l1 l2)"), Corner::LowerLeftToUpper)) == "x|o;(u1 l1)");
  CHECK(render_partition(rotate(base::block(3), Corner::LowerRightToUpper)) == "x|oo;(u1 l1 l2)");
  CHECK(render_partition(rotate(P("x|o;(u1 l1)"), Corner::UpperLeftToLower)) == "|oo;(l1 l2)");
  CHECK(render_partition(rotate(P("ox|;(u1 u2)"), Corner::UpperRightToLower)) == "o|o;(u1 l1)");
  CHECK_THROWS_AS(rotate(P("|o;(l1)"), Corner::UpperLeftToLower), PartitionError);
  CHECK(render_partition(fold(P("ox|o;(u1 l1)(u2)"))) == "|oxo;(l1)(l2 l3)");
  CHECK(render_partition(rotate_last_to_upper(P("|oxo;(l1 l2)(l3)"), 2)) == "xo|o;(u1)(u2 l1)");
}

TEST_CASE("forget colors and color sum") {
  CHECK(forget_colors(P("|ox;(l1 l2)")) == forget_colors(P("|oo;(l1 l2)")));
  CHECK(forget_colors(base::crossing("oxxo")) == forget_colors(base::crossing()));
  CHECK(color_sum(P("|oo;(l1 l2)")) == 2);
  CHECK(color_sum(P("|ox;(l1 l2)")) == 0);
  CHECK(color_sum(P("xx|o;(u1 u2 l1)")) == -1);
}

TEST_CASE("noncrossing test") {
  CHECK(is_noncrossing(P("oooo|ooo;(u1 u2)(u3 u4 l3)(l1 l2)")));
  CHECK_FALSE(is_noncrossing(P("oo|oo;(u1 l2)(u2 l1)")));
  CHECK_FALSE(is_noncrossing(P("|oooo;(l1 l3)(l2 l4)")));
  CHECK(is_noncrossing(base::nested_pair(3)));
  CHECK_FALSE(is_noncrossing(P("oooo|;(u1 u3)(u2 u4)")));
  CHECK(is_noncrossing(P("o|oo;(u1 l2)(l1)")));
}

TEST_CASE("named partitions") {
  CHECK(render_partition(base::block(4)) == "|oooo;(l1 l2 l3 l4)");
  CHECK(render_partition(base::nested_pair(3)) == "|oooooo;(l1 l6)(l2 l5)(l3 l4)");
  CHECK(render_partition(base::four_block("oxox")) == "|oxox;(l1 l2 l3 l4)");
  CHECK(render_partition(base::crossing()) == "oo|oo;(u1 l2)(u2 l1)");
  CHECK(render_partition(base::pair(Color::White, Color::Black, true)) == "ox|;(u1 u2)");
  CHECK(render_partition(base::singletons(Color::Black, 2)) == "|xx;(l1)(l2)");
  CHECK(render_partition(base::positioner(1)) == "|ooxx;(l1)(l2 l4)(l3)");
  CHECK(render_partition(base::positioner_wbwb()) == "|oxox;(l1)(l2 l4)(l3)");
  CHECK(render_partition(base::positioner_shifted(1)) == "|ooxx;(l1)(l2)(l3 l4)");
  CHECK(render_partition(base::positioner(0)) == "|ox;(l1 l2)");
  const int k[] = {3};
  CHECK(base_partition("btilde", k) == base::block(3, Color::Black));
  CHECK(base_partition("pair_ox") == base::pair(Color::White, Color::Black));
  CHECK_THROWS_AS(base_partition("nonsense"), PartitionError);
}

TEST_CASE("generator files") {
  const auto gens = parse_generator_text("# two generators\n\n|ox;(l1 l2)  # pair\n oo|oo;(u1 l2)(u2 l1)\n");
  REQUIRE(gens.size() == 2);
  CHECK(gens[1] == base::crossing());
  CHECK(parse_generator_text("# none\n").empty());
  CHECK_THROWS_AS(parse_generator_text("|o;(l2)\n"), ParseError);
}

TEST_CASE("diagram rendering shows both rows") {
  const std::string d = render_diagram(P("ox|o;(u1 l1)(u2)"));
  CHECK(d.find('o') != std::string::npos);
  CHECK(d.find('x') != std::string::npos);
}

// ---- properties on seeded random partitions -------------------------------

TEST_CASE("canonical form is a congruence") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto p = random_partition(rng, rng() % 4, rng() % 4);
    const auto q = parse_partition(render_partition(p));
    CHECK(p == q);
    CHECK(p.canonical_key() == q.canonical_key());
    const auto r = random_partition(rng, rng() % 3, rng() % 3);
    CHECK(tensor(p, r) == tensor(q, r));
    CHECK(involute(p) == involute(q));
    CHECK(verticolor_reflect(p) == verticolor_reflect(q));
  }
}

TEST_CASE("tensor is associative with the empty partition as unit") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_partition(rng, rng() % 3, rng() % 3);
    const auto b = random_partition(rng, rng() % 3, rng() % 3);
    const auto c = random_partition(rng, rng() % 3, rng() % 3);
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    CHECK(tensor(a, ColoredPartition()) == a);
    CHECK(tensor(ColoredPartition(), a) == a);
  }
}

TEST_CASE("involution and reflection are commuting involutions") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_partition(rng, rng() % 4, rng() % 4);
    CHECK(involute(involute(p)) == p);
    CHECK(verticolor_reflect(verticolor_reflect(p)) == p);
    CHECK(involute(verticolor_reflect(p)) == verticolor_reflect(involute(p)));
  }
}

TEST_CASE("composition agrees with a reference and is associative") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 300; ++t) {
    const auto w1 = testsupport::random_word(rng, rng() % 4);
    const auto w2 = testsupport::random_word(rng, rng() % 4);
    const auto w3 = testsupport::random_word(rng, rng() % 4);
    const auto w4 = testsupport::random_word(rng, rng() % 3);
    const auto a = random_partition(rng, w1, w2);
    const auto b = random_partition(rng, w2, w3);
    const auto c = random_partition(rng, w3, w4);
    const auto ab = compose(a, b);
    const auto ref = testsupport::naive_compose(a, b);
    CHECK(ab.partition == ref.first);
    CHECK(ab.loops == ref.second);
    const auto left = compose(ab.partition, c);
    const auto bc = compose(b, c);
    const auto right = compose(a, bc.partition);
    CHECK(left.partition == right.partition);
    CHECK(ab.loops + left.loops == bc.loops + right.loops);
  }
}

TEST_CASE("rotations are undone by the inverse corner") {
  std::mt19937_64 rng(15);
  const Corner corners[] = {Corner::UpperLeftToLower, Corner::LowerLeftToUpper,
                            Corner::UpperRightToLower, Corner::LowerRightToUpper};
  for (int t = 0; t < 200; ++t) {
    const auto p = random_partition(rng, rng() % 4, rng() % 4);
    for (Corner c : corners) {
      const bool from_upper = c == Corner::UpperLeftToLower || c == Corner::UpperRightToLower;
      if ((from_upper ? p.upper_size() : p.lower_size()) == 0) continue;
      CHECK(rotate(rotate(p, c), inverse(c)) == p);
    }
    CHECK(unfold(fold(p), p.upper_size()) == p);
  }
}

TEST_CASE("color sum under involution, reflection and rotation") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_partition(rng, rng() % 4, 1 + rng() % 4);
    CHECK(color_sum(involute(p)) == color_sum(p));
    CHECK(color_sum(verticolor_reflect(p)) == -color_sum(p));
    // rotation preserves the sum of the folded word, the quantity the
    // category parameters are read from
    const auto r = rotate(p, Corner::LowerLeftToUpper);
    CHECK(color_sum(fold(r)) == color_sum(fold(p)));
    const auto s = rotate(p, Corner::LowerRightToUpper);
    CHECK(color_sum(fold(s)) == color_sum(fold(p)));
  }
}

TEST_CASE("noncrossing is preserved by the category operations") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int t = 0; t < 2000 && checked < 200; ++t) {
    const auto w1 = testsupport::random_word(rng, rng() % 4);
    const auto w2 = testsupport::random_word(rng, rng() % 4);
    const auto w3 = testsupport::random_word(rng, rng() % 3);
    const auto a = random_partition(rng, w1, w2);
    const auto b = random_partition(rng, w2, w3);
    if (!is_noncrossing(a) || !is_noncrossing(b)) continue;
    ++checked;
    CHECK(is_noncrossing(tensor(a, b)));
    CHECK(is_noncrossing(compose(a, b).partition));
    CHECK(is_noncrossing(involute(a)));
    CHECK(is_noncrossing(verticolor_reflect(a)));
    if (a.lower_size() > 0) {
      CHECK(is_noncrossing(rotate(a, Corner::LowerLeftToUpper)));
      CHECK(is_noncrossing(rotate(a, Corner::LowerRightToUpper)));
    }
  }
  CHECK(checked >= 100);
}
