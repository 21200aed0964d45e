#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "nkayles/errors.hpp"
#include "nkayles/generators.hpp"
#include "nkayles/graph_io.hpp"
#include "support/oracles.hpp"

using namespace nkayles;

TEST_CASE("parse_edge_list") {
  CHECK(parse_edge_list("3\n0 1\n1 2") == Graph(3, {{0, 1}, {1, 2}}));
  const Graph k1 = parse_edge_list("1\n");
  CHECK(k1.size() == 1);
  CHECK(k1.edge_count() == 0);
  CHECK(parse_edge_list("2\n0 1\n0 1") == Graph(2, {{0, 1}}));
  CHECK(parse_edge_list("# comment\r\n4\r\n\r\n0 3\r\n# more\r\n2 1  \r\n") ==
        Graph(4, {{0, 3}, {1, 2}}));
  CHECK(parse_edge_list("0\n").size() == 0);
}

TEST_CASE("parse_edge_list errors name the line") {
  auto line_of = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("3\n0 1\n1 x\n") == 3);
  CHECK(line_of("3\n0 3\n") == 2);
  CHECK(line_of("3\n1 1\n") == 2);
  CHECK(line_of("3\n0 1 2\n") == 2);
  CHECK(line_of("three\n") == 1);
  CHECK_THROWS_AS(parse_edge_list("# only comments\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("65\n"), CapExceeded);
  CHECK_THROWS_WITH_AS(parse_edge_list("2\n\n0 5\n"), doctest::Contains("line 3"), ParseError);
}

TEST_CASE("parse_graph6 follows the graph6 bit order") {
  // Upper triangle in column order: x(0,1), x(0,2), x(1,2), ...
  CHECK(parse_graph6("@") == Graph(1, std::initializer_list<Edge>{}));
  CHECK(parse_graph6("A?") == Graph(2, std::initializer_list<Edge>{}));
  CHECK(parse_graph6("A_") == Graph(2, {{0, 1}}));
  CHECK(parse_graph6("B_") == Graph(3, {{0, 1}}));
  CHECK(parse_graph6("BG") == Graph(3, {{1, 2}}));
  CHECK(parse_graph6("BW") == Graph(3, {{0, 2}, {1, 2}}));
  CHECK(parse_graph6("Ch") == generate(Path{4}));
  CHECK(parse_graph6(">>graph6<<C~\n") == generate(Complete{4}));
  CHECK(parse_graph6("?").size() == 0);
}

TEST_CASE("parse_graph6 rejects malformed records") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);      // truncated
  CHECK_THROWS_AS(parse_graph6("B__"), ParseError);    // trailing byte
  CHECK_THROWS_AS(parse_graph6("B!"), ParseError);     // below 63
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);     // nonzero padding
  CHECK_THROWS_AS(parse_graph6("~?@"), ParseError);    // truncated size field
  CHECK_THROWS_AS(parse_graph6("~?A?"), CapExceeded);  // n = 65
}

TEST_CASE("graph6 round trip") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Graph& g : testing::all_labeled_graphs(n)) CHECK(parse_graph6(to_graph6(g)) == g);
  }
  for (const Graph& g : testing::unlabeled_graphs(8)) CHECK(parse_graph6(to_graph6(g)) == g);
  for (std::size_t n : {61, 62, 63, 64}) {
    const Graph g = generate(Gnp{n, 0.3, n});
    const std::string code = to_graph6(g);
    CHECK((code[0] == '~') == (n >= 63));
    CHECK(parse_graph6(code) == g);
  }
}

TEST_CASE("edge list round trip and files") {
  const Graph g = generate(Gnp{12, 0.4, 5});
  CHECK(parse_edge_list(to_edge_list(g)) == g);

  const auto dir = std::filesystem::temp_directory_path() / "nkayles_io_test";
  std::filesystem::create_directories(dir);
  for (GraphFormat f : {GraphFormat::edge_list, GraphFormat::graph6}) {
    const auto path = dir / (f == GraphFormat::graph6 ? "g.g6" : "g.txt");
    std::ofstream(path) << serialize(g, f);
    CHECK(format_from_extension(path) == f);
    CHECK(read_graph_file(path, f) == g);
  }
  CHECK(parse_format_name("g6") == GraphFormat::graph6);
  CHECK(parse_format_name("edges") == GraphFormat::edge_list);
  CHECK_THROWS_AS(parse_format_name("dimacs"), InvalidSpec);
  CHECK_THROWS_AS(read_graph_file(dir / "missing.txt", GraphFormat::edge_list), Error);
}
