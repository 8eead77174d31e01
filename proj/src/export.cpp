#include "sl3/export.hpp"

#include <sstream>

#include "sl3/eigvec.hpp"
#include "sl3/error.hpp"

namespace sl3 {

namespace {

std::string vertex_label(CategoryId cat, Vertex v) {
  std::ostringstream os;
  if (is_whittaker(cat))
    os << "orb(" << v.p << ',' << v.q << ')';
  else
    os << v.p << ',' << v.q;
  return os.str();
}

std::string move_text(Move m) { return std::string(to_string(m)); }

}  // namespace

std::optional<ExportFormat> parse_export_format(std::string_view s) noexcept {
  if (s == "dot") return ExportFormat::Dot;
  if (s == "json") return ExportFormat::Json;
  if (s == "csv") return ExportFormat::Csv;
  return std::nullopt;
}

std::string to_dot(const ActionGraph& g) {
  std::ostringstream os;
  os << "digraph \"" << to_string(g.category()) << '_' << to_string(g.functor()) << "\" {\n";
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    os << "  v" << i << " [label=\"" << vertex_label(g.category(), vs[i])
       << "\", eig=" << pf_value(g.category(), vs[i]) << "];\n";
  for (const auto& e : g.edges())
    for (int k = 0; k < e.mult; ++k)
      os << "  v" << g.index_of(e.from) << " -> v" << g.index_of(e.to) << " [mult=" << e.mult
         << ", move=\"" << to_string(e.move) << "\"];\n";
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json to_json(const ActionGraph& g) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["category"] = std::string(to_string(g.category()));
  j["functor"] = std::string(to_string(g.functor()));
  const auto& w = g.window();
  j["window"] = {{"pmin", w.pmin}, {"pmax", w.pmax}, {"qmin", w.qmin}, {"qmax", w.qmax}};
  auto vertices = ordered_json::array();
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    vertices.push_back({{"id", i},
                        {"off", {vs[i].p, vs[i].q}},
                        {"eig", pf_value(g.category(), vs[i])}});
  j["vertices"] = std::move(vertices);
  auto edges = ordered_json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"from", g.index_of(e.from)},
                     {"to", g.index_of(e.to)},
                     {"mult", e.mult},
                     {"move", move_text(e.move)}});
  j["edges"] = std::move(edges);
  return j;
}

std::string to_json_text(const ActionGraph& g) { return to_json(g).dump(2) + "\n"; }

std::string to_csv(const ActionGraph& g) {
  std::ostringstream os;
  os << "from_p,from_q,to_p,to_q,mult,move\n";
  for (const auto& e : g.edges())
    os << e.from.p << ',' << e.from.q << ',' << e.to.p << ',' << e.to.q << ',' << e.mult << ",\""
       << to_string(e.move) << "\"\n";
  return os.str();
}

std::string render(const ActionGraph& g, ExportFormat f) {
  switch (f) {
    case ExportFormat::Dot: return to_dot(g);
    case ExportFormat::Json: return to_json_text(g);
    case ExportFormat::Csv: return to_csv(g);
  }
  return {};
}

ActionGraph graph_from_json(const nlohmann::json& j) {
  try {
    const auto cat = parse_category(j.at("category").get<std::string>());
    if (!cat) throw Error(Errc::InvalidArgument, "unknown category");
    const auto ftag = j.at("functor").get<std::string>();
    if (ftag != "F" && ftag != "G") throw Error(Errc::InvalidArgument, "unknown functor " + ftag);
    const auto& w = j.at("window");
    const Box box{w.at("pmin").get<std::int64_t>(), w.at("pmax").get<std::int64_t>(),
                  w.at("qmin").get<std::int64_t>(), w.at("qmax").get<std::int64_t>()};
    std::vector<Vertex> vertices;
    for (const auto& v : j.at("vertices")) {
      const auto& off = v.at("off");
      const Vertex x{off.at(0).get<std::int64_t>(), off.at(1).get<std::int64_t>()};
      if (v.at("id").get<std::size_t>() != vertices.size())
        throw Error(Errc::InvalidArgument, "vertex ids must be 0, 1, 2, ... in order");
      vertices.push_back(x);
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      const auto from = e.at("from").get<std::size_t>();
      const auto to = e.at("to").get<std::size_t>();
      if (from >= vertices.size() || to >= vertices.size())
        throw Error(Errc::InvalidArgument, "edge endpoint out of range");
      const auto move = parse_move(e.at("move").get<std::string>());
      if (!move) throw Error(Errc::InvalidArgument, "unknown move " + e.at("move").dump());
      edges.push_back({vertices[from], vertices[to], e.at("mult").get<int>(), *move});
    }
    return ActionGraph(*cat, ftag == "F" ? FunctorTag::F : FunctorTag::G, box,
                       std::move(vertices), std::move(edges));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(Errc::InvalidArgument, std::string("malformed graph JSON: ") + ex.what());
  }
}

}  // namespace sl3
