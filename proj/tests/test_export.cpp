#include <doctest.h>

#include <sstream>
#include <string>

#include "sl3/error.hpp"
#include "sl3/export.hpp"

using namespace sl3;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("DOT repeats parallel edges") {
  const auto g = generate(CategoryId::N3, FunctorTag::F, {-6, -1, -6, -1});
  const auto dot = to_dot(g);
  const auto from = "v" + std::to_string(g.index_of({-2, -1}));
  const auto to = "v" + std::to_string(g.index_of({-1, -1}));
  CHECK(count(dot, "  " + from + " -> " + to + " [mult=3") == 3);
  CHECK(dot.find("label=\"-2,-1\"") != std::string::npos);
  CHECK(dot.rfind("digraph", 0) == 0);
}

TEST_CASE("DOT labels Whittaker orbits") {
  const auto g = generate(CategoryId::Whittaker1, FunctorTag::F, default_window(CategoryId::Whittaker1, 8));
  CHECK(to_dot(g).find("label=\"orb(-2,-1)\"") != std::string::npos);
}

TEST_CASE("JSON layout and round trip") {
  for (auto cat : kAllCategories)
    for (auto f : {FunctorTag::F, FunctorTag::G}) {
      const auto g = generate(cat, f, default_window(cat, 12));
      const auto j = to_json(g);
      CHECK(j.begin().key() == "category");
      CHECK(j.at("vertices").size() == g.vertices().size());
      CHECK(j.at("edges").size() == g.edges().size());
      CHECK(j.at("vertices").at(0).at("eig").get<std::int64_t>() >= 1);
      const auto back = graph_from_json(nlohmann::json::parse(to_json_text(g)));
      CHECK(back == g);
      CHECK(to_json_text(back) == to_json_text(g));
    }
}

TEST_CASE("JSON import rejects malformed input") {
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::object()), Error);
  auto j = nlohmann::json::parse(to_json_text(generate(CategoryId::Regular, FunctorTag::F, {0, 2, 0, 2})));
  j["edges"][0]["move"] = "sideways";
  CHECK_THROWS_AS(graph_from_json(j), Error);
  j = nlohmann::json::parse(to_json_text(generate(CategoryId::Regular, FunctorTag::F, {0, 2, 0, 2})));
  j["edges"][0]["to"] = 99;
  CHECK_THROWS_AS(graph_from_json(j), Error);
}

TEST_CASE("CSV edge list") {
  const auto g = generate(CategoryId::N1, FunctorTag::F, default_window(CategoryId::N1, 8));
  const auto csv = to_csv(g);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "from_p,from_q,to_p,to_q,mult,move");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == g.edges().size());
  CHECK(csv.find("-5,0,-1,3,1,\"long\"") != std::string::npos);
}

TEST_CASE("formats parse") {
  CHECK(parse_export_format("dot") == ExportFormat::Dot);
  CHECK(parse_export_format("csv") == ExportFormat::Csv);
  CHECK_FALSE(parse_export_format("svg").has_value());
}
