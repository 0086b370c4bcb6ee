#include <doctest.h>

#include <random>

#include "gradlpa/error.hpp"
#include "gradlpa/text.hpp"
#include "oracles.hpp"

using namespace gradlpa;

namespace {

// Line and column of the parse error raised by fn.
std::pair<std::size_t, std::size_t> error_at(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("expected a parse error");
  return {0, 0};
}

}  // namespace

TEST_CASE("parse_algebra examples") {
  const auto a = parse_matrix_algebra("M9(K)(4(0),3(1),2(2))");
  CHECK(a.base.is_trivial());
  CHECK(a.shifts == std::vector<Shift>{0, 0, 0, 0, 1, 1, 1, 2, 2});

  const auto b = parse_matrix_algebra("  M 3 ( K [ x ^ 2 ] ) ( 0 , -1 , +1 ) ");
  CHECK(b.base == GradedBase::laurent(2));
  CHECK(b.shifts == std::vector<Shift>{0, -1, 1});

  const auto s = parse_algebra("M1(K)(0) (+) M2(K[x^1])(2(-3))");
  REQUIRE(s.summands.size() == 2);
  CHECK(s.summands[1].shifts == std::vector<Shift>{-3, -3});
}

TEST_CASE("parse_algebra errors") {
  try {
    parse_algebra("M2(K)(0,1,2)");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("3 shifts for n=2") != std::string::npos);
  }
  CHECK(error_at([] { parse_algebra("M2(K)(0)"); }) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_at([] { parse_algebra("M1(K[x^0])(0)"); }).second == 8);
  CHECK_THROWS_AS(parse_algebra("M0(K)()"), ParseError);
  CHECK_THROWS_AS(parse_algebra("M2(K)(0(1),2(1))"), ParseError);
  CHECK_THROWS_AS(parse_algebra("M1(K)(2147483649)"), ParseError);
  CHECK_NOTHROW(parse_algebra("M1(K)(-2147483648)"));
  CHECK_THROWS_AS(parse_algebra("M1(L)(0)"), ParseError);
  CHECK_THROWS_AS(parse_algebra("M1(K)(0) extra"), ParseError);
  CHECK_THROWS_AS(parse_algebra("M1(K)(0) (+)"), ParseError);
  CHECK_THROWS_AS(parse_algebra(""), ParseError);
  CHECK_THROWS_AS(parse_matrix_algebra("M1(K)(0) (+) M1(K)(0)"), Error);
}

TEST_CASE("parse_graph examples") {
  const auto g = parse_graph("u -> v\nv -> w\n");
  CHECK(g.vertices() == std::vector<VertexId>{"u", "v", "w"});
  REQUIRE(g.edges().size() == 2);
  CHECK(g.edges()[0].id == "e1");

  const auto h = parse_graph("# comment\nvertex z  # isolated\na -> b f\nb -> b [loop]\n\n");
  CHECK(h.vertices() == std::vector<VertexId>{"z", "a", "b"});
  CHECK(h.edges()[0].id == "f");
  CHECK(h.edges()[1].id == "loop");
  CHECK(h.edges()[1].source == "b");
}

TEST_CASE("parse_graph errors carry positions") {
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(error_at([] { parse_graph("a -> b\nvertex a\nvertex a\n"); }) == P{3, 8});
  CHECK(error_at([] { parse_graph("a -> \n"); }) == P{1, 6});
  CHECK(error_at([] { parse_graph("a => b\n"); }) == P{1, 3});
  CHECK(error_at([] { parse_graph("a -> b x\nb -> a x\n"); }).first == 2);
  CHECK(error_at([] { parse_graph("a -> b e2\nb -> a\n"); }).first == 2);
  CHECK(error_at([] { parse_graph("a -> b [x\n"); }).first == 1);
  CHECK(error_at([] { parse_graph("hello\n"); }) == P{1, 1});
}

TEST_CASE("to_dot quotes only when needed") {
  const auto dot = to_dot(parse_graph("u -> v\n"));
  CHECK(dot.find("digraph {") == 0);
  CHECK(dot.find("u -> v [label=e1];") != std::string::npos);
}

TEST_CASE("certificate text") {
  const auto cert = parse_certificate("G 1\nE 3 -2\nP 3 1 2\n");
  const IsoCertificate expected{GlobalShift{1}, EntryShift{2, -2}, Permute{{2, 0, 1}}};
  CHECK(cert == expected);
  CHECK(print_certificate(cert) == "G 1\nE 3 -2\nP 3 1 2\n");
  CHECK(parse_certificate("").empty());
  CHECK_THROWS_AS(parse_certificate("E 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("X 1\n"), ParseError);
  CHECK_THROWS_AS(parse_certificate("G 1 2\n"), ParseError);
}

TEST_CASE("algebra print/parse round trip") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<ShiftedMatrixAlgebra> summands;
    for (int k = 0; k <= trial % 4; ++k)
      summands.push_back({oracle::random_base(rng, 9),
                          oracle::random_shifts(rng, 1 + (trial + k) % 7, -kMaxAbsShift, kMaxAbsShift)});
    const DirectSumAlgebra a(summands);
    const auto b = parse_algebra(to_string(a));
    REQUIRE(b.summands.size() == a.summands.size());
    for (std::size_t i = 0; i < a.summands.size(); ++i) {
      CHECK(b.summands[i].base == a.summands[i].base);
      CHECK(b.summands[i].shifts == a.summands[i].shifts);
    }
  }
}

TEST_CASE("graph print/parse round trip") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = oracle::random_graph(rng, 7, 12);
    CHECK(parse_graph(print_graph(g)) == g);
  }
}

TEST_CASE("certificate print/parse round trip") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto base = oracle::random_base(rng, 5);
    IsoCertificate cert;
    for (int k = trial % 6; k > 0; --k) cert.push_back(oracle::random_step(rng, 1 + trial % 5, base));
    CHECK(parse_certificate(print_certificate(cert)) == cert);
  }
}
