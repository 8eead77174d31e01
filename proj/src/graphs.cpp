#include "sl3/graphs.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "sl3/error.hpp"

namespace sl3 {

std::string_view to_string(FunctorTag f) noexcept { return f == FunctorTag::F ? "F" : "G"; }

std::string_view to_string(Move m) noexcept {
  switch (m) {
    case Move::F10: return "(1,0)";
    case Move::F0m1: return "(0,-1)";
    case Move::Fm11: return "(-1,1)";
    case Move::G01: return "(0,1)";
    case Move::G1m1: return "(1,-1)";
    case Move::Gm10: return "(-1,0)";
    case Move::LongJump: return "long";
  }
  return "?";
}

std::optional<Move> parse_move(std::string_view s) noexcept {
  for (auto m : {Move::F10, Move::F0m1, Move::Fm11, Move::G01, Move::G1m1, Move::Gm10, Move::LongJump})
    if (to_string(m) == s) return m;
  return std::nullopt;
}

IntPair displacement(Move m) {
  switch (m) {
    case Move::F10: return {1, 0};
    case Move::F0m1: return {0, -1};
    case Move::Fm11: return {-1, 1};
    case Move::G01: return {0, 1};
    case Move::G1m1: return {1, -1};
    case Move::Gm10: return {-1, 0};
    case Move::LongJump: break;
  }
  throw Error(Errc::InvalidArgument, "long jumps have no fixed displacement");
}

namespace {

Move negated(Move m) {
  switch (m) {
    case Move::F10: return Move::Gm10;
    case Move::F0m1: return Move::G01;
    case Move::Fm11: return Move::G1m1;
    case Move::G01: return Move::F0m1;
    case Move::G1m1: return Move::Fm11;
    case Move::Gm10: return Move::F10;
    case Move::LongJump: return Move::LongJump;
  }
  return m;
}

// (p,q) <-> (q,p) sends the weights of F to the weights of G.
Move swapped(Move m) {
  switch (m) {
    case Move::F10: return Move::G01;
    case Move::F0m1: return Move::Gm10;
    case Move::Fm11: return Move::G1m1;
    case Move::G01: return Move::F10;
    case Move::G1m1: return Move::Fm11;
    case Move::Gm10: return Move::F0m1;
    case Move::LongJump: return Move::LongJump;
  }
  return m;
}

CosetClass coset_of(CategoryId cat) {
  return cat == CategoryId::Whittaker1 ? CosetClass::ThirdOne : CosetClass::ThirdTwo;
}

[[noreturn]] void invalid_vertex(CategoryId cat, Vertex v) {
  std::ostringstream os;
  os << v << " is not a vertex of " << to_string(cat);
  throw Error(Errc::InvalidVertex, os.str());
}

OutEdge step(Vertex v, Move m, int mult = 1) { return {v + displacement(m), mult, m}; }
OutEdge jump(Vertex target, int mult = 1) { return {target, mult, Move::LongJump}; }

EdgeList all_moves(Vertex v) {
  return {step(v, Move::F10), step(v, Move::F0m1), step(v, Move::Fm11)};
}

// Upper middle integral weights: p <= -1, q >= 0.
EdgeList n1_rule(Vertex v) {
  const auto [p, q] = v;
  if (p == -1 && q == 0) return {step(v, Move::Fm11)};
  if (p == -1) return {step(v, Move::F0m1), step(v, Move::Fm11)};
  if (p == -2 && q == 0) return {step(v, Move::F10), step(v, Move::Fm11)};
  if (p == -2) return {step(v, Move::F10, 2), step(v, Move::F0m1), step(v, Move::Fm11)};
  if (p == -3 && q == 0) return {step(v, Move::F10, 2), step(v, Move::Fm11), jump({-1, 1})};
  if (q == 0) return {step(v, Move::F10), step(v, Move::Fm11), jump({-1, -p - 2})};
  // Wall-translation target on the diagonal p+q = -2 is mu + (0,-1).
  if (p + q == -2) return {step(v, Move::F0m1), step(v, Move::Fm11)};
  if (p + q == -3) return {step(v, Move::F10, 2), step(v, Move::F0m1), step(v, Move::Fm11)};
  return all_moves(v);
}

// Lower middle integral weights: p >= 0, q <= -1.
EdgeList n2_rule(Vertex v) {
  const auto [p, q] = v;
  if (q == -1) return {step(v, Move::F10), step(v, Move::F0m1)};
  if (q == -2 && p == 0) return {step(v, Move::F0m1)};
  if (q == -2) return {step(v, Move::F10), step(v, Move::F0m1), step(v, Move::Fm11, 2)};
  if (p == 0 && q == -3) return {step(v, Move::F10, 2), step(v, Move::F0m1), jump({0, -1})};
  if (p == 0) return {step(v, Move::F10), step(v, Move::F0m1), jump({-q - 3, -1})};
  if (p + q == -2) return {step(v, Move::F0m1), step(v, Move::Fm11)};
  if (p + q == -3) return {step(v, Move::F10, 2), step(v, Move::F0m1), step(v, Move::Fm11)};
  return all_moves(v);
}

// Bottom integral weights: p, q <= -1.
EdgeList n3_rule(Vertex v) {
  const auto [p, q] = v;
  if (p == -1 && q == -1) return {step(v, Move::F0m1)};
  if (p == -2 && q == -1) return {step(v, Move::F10, 3), step(v, Move::F0m1)};
  if (q == -1) return {step(v, Move::F10), step(v, Move::F0m1)};
  if (p == -1 && q == -2) return {step(v, Move::F0m1), step(v, Move::Fm11, 2)};
  if (p == -1) return {step(v, Move::F0m1), step(v, Move::Fm11)};
  if (p == -2 && q == -2)
    return {step(v, Move::F10, 2), step(v, Move::F0m1), step(v, Move::Fm11, 2)};
  if (p == -2) return {step(v, Move::F10, 2), step(v, Move::F0m1), step(v, Move::Fm11)};
  if (q == -2) return {step(v, Move::F10), step(v, Move::F0m1), step(v, Move::Fm11, 2)};
  return all_moves(v);
}

// Partially integral cosets. `t` is the coordinate transverse to the wall
// (p for M1/M2, q for M3/M4, p+q for M5/M6).
EdgeList m_rule(CategoryId cat, Vertex v) {
  switch (cat) {
    case CategoryId::M1:
      if (v.p == 0) return {step(v, Move::F10), step(v, Move::F0m1)};
      return all_moves(v);
    case CategoryId::M2:
      if (v.p == -1) return {step(v, Move::F0m1), step(v, Move::Fm11)};
      if (v.p == -2) return {step(v, Move::F10, 2), step(v, Move::F0m1), step(v, Move::Fm11)};
      return all_moves(v);
    case CategoryId::M3:
      if (v.q == 0) return {step(v, Move::F10), step(v, Move::Fm11)};
      return all_moves(v);
    case CategoryId::M4:
      if (v.q == -1) return {step(v, Move::F10), step(v, Move::F0m1)};
      if (v.q == -2) return {step(v, Move::F10), step(v, Move::F0m1), step(v, Move::Fm11, 2)};
      return all_moves(v);
    case CategoryId::M5:
      if (v.p + v.q == 0) return {step(v, Move::F10), step(v, Move::Fm11)};
      return all_moves(v);
    case CategoryId::M6:
      if (v.p + v.q == -1) return {step(v, Move::F0m1), step(v, Move::Fm11)};
      if (v.p + v.q == -2) return {step(v, Move::F10, 2), step(v, Move::F0m1), step(v, Move::Fm11)};
      return all_moves(v);
    default: return {};
  }
}

// F-edges of a Whittaker orbit: translate the representative by each weight
// of F and canonicalize. Since sr permutes the weights of F, the result does
// not depend on which orbit member is translated.
EdgeList whittaker_rule(CategoryId cat, Vertex v, FunctorTag f) {
  EdgeList out;
  for (auto m : kFMoves) {
    const IntPair d = f == FunctorTag::F ? displacement(m) : -displacement(m);
    out.push_back({whittaker_canonical(cat, v + d), 1, f == FunctorTag::F ? m : negated(m)});
  }
  return out;
}

void require_vertex(CategoryId cat, Vertex v) {
  if (!in_vertex_set(cat, v)) invalid_vertex(cat, v);
}

}  // namespace

bool in_vertex_set(CategoryId cat, Vertex v) {
  const auto [p, q] = v;
  switch (cat) {
    case CategoryId::Regular: return p >= 0 && q >= 0;
    case CategoryId::N1: return p <= -1 && q >= 0;
    case CategoryId::N2: return p >= 0 && q <= -1;
    case CategoryId::N3: return p <= -1 && q <= -1;
    case CategoryId::M1: return p >= 0;
    case CategoryId::M2: return p <= -1;
    case CategoryId::M3: return q >= 0;
    case CategoryId::M4: return q <= -1;
    case CategoryId::M5: return p + q >= 0;
    case CategoryId::M6: return p + q <= -1;
    case CategoryId::GenericK: return true;
    case CategoryId::Whittaker1:
    case CategoryId::Whittaker2: return third_canonical(coset_of(cat), v) == v;
  }
  return false;
}

Vertex whittaker_canonical(CategoryId cat, IntPair off) {
  if (!is_whittaker(cat))
    throw Error(Errc::InvalidArgument, std::string(to_string(cat)) + " is not a Whittaker category");
  return third_canonical(coset_of(cat), off);
}

CategoryId swap_dual(CategoryId cat) {
  switch (cat) {
    case CategoryId::N1: return CategoryId::N2;
    case CategoryId::N2: return CategoryId::N1;
    case CategoryId::N3: return CategoryId::N3;
    case CategoryId::M2: return CategoryId::M4;
    case CategoryId::M4: return CategoryId::M2;
    case CategoryId::M6: return CategoryId::M6;
    default:
      throw Error(Errc::InvalidArgument,
                  std::string(to_string(cat)) + " has no swap-dual partner; its G-graph is the transpose");
  }
}

EdgeList out_edges_F(CategoryId cat, Vertex v) {
  require_vertex(cat, v);
  switch (cat) {
    case CategoryId::Regular: {
      EdgeList out{step(v, Move::F10)};
      if (v.p >= 1) out.push_back(step(v, Move::Fm11));
      if (v.q >= 1) out.push_back(step(v, Move::F0m1));
      return out;
    }
    case CategoryId::N1: return n1_rule(v);
    case CategoryId::N2: return n2_rule(v);
    case CategoryId::N3: return n3_rule(v);
    case CategoryId::GenericK: return all_moves(v);
    case CategoryId::Whittaker1:
    case CategoryId::Whittaker2: return whittaker_rule(cat, v, FunctorTag::F);
    default: return m_rule(cat, v);
  }
}

EdgeList out_edges_G(CategoryId cat, Vertex v) {
  require_vertex(cat, v);
  if (is_whittaker(cat)) return whittaker_rule(cat, v, FunctorTag::G);
  if (is_semisimple(cat)) {
    // Transpose of the F-graph; these categories have no long jumps, so every
    // F-source of v is v minus a weight of F.
    EdgeList out;
    for (auto m : kFMoves) {
      const Vertex u = v - displacement(m);
      if (!in_vertex_set(cat, u)) continue;
      for (const auto& e : out_edges_F(cat, u))
        if (e.to == v && e.move == m) out.push_back({u, e.mult, negated(m)});
    }
    return out;
  }
  EdgeList out;
  for (const auto& e : out_edges_F(swap_dual(cat), swap(v)))
    out.push_back({swap(e.to), e.mult, swapped(e.move)});
  return out;
}

EdgeList out_edges(CategoryId cat, FunctorTag f, Vertex v) {
  return f == FunctorTag::F ? out_edges_F(cat, v) : out_edges_G(cat, v);
}

Box default_window(CategoryId cat, std::int64_t side) {
  if (side < 1) throw Error(Errc::EmptyWindow, "window side must be positive");
  const std::int64_t n = side;
  const std::int64_t lo = -(n / 2), hi = lo + n - 1;
  switch (cat) {
    case CategoryId::Regular: return {0, n - 1, 0, n - 1};
    case CategoryId::N1: return {-n, -1, 0, n - 1};
    case CategoryId::N2: return {0, n - 1, -n, -1};
    case CategoryId::N3: return {-n, -1, -n, -1};
    case CategoryId::M1: return {0, n - 1, lo, hi};
    case CategoryId::M2: return {-n, -1, lo, hi};
    case CategoryId::M3: return {lo, hi, 0, n - 1};
    case CategoryId::M4: return {lo, hi, -n, -1};
    case CategoryId::M5:
    case CategoryId::M6:
    case CategoryId::GenericK: return {lo, hi, lo, hi};
    case CategoryId::Whittaker1:
    case CategoryId::Whittaker2: return {-n, -1, lo, hi};
  }
  return {};
}

ActionGraph::ActionGraph(CategoryId category, FunctorTag functor, Box window,
                         std::vector<Vertex> vertices, std::vector<Edge> edges)
    : category_(category),
      functor_(functor),
      window_(window),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], i).second) {
      std::ostringstream os;
      os << "duplicate vertex " << vertices_[i];
      throw Error(Errc::InvalidArgument, os.str());
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.from, a.to, a.move) < std::tie(b.from, b.to, b.move);
  });
  out_begin_.assign(vertices_.size() + 1, 0);
  for (const auto& e : edges_) {
    if (!contains(e.from) || !contains(e.to)) {
      std::ostringstream os;
      os << "edge " << e.from << "->" << e.to << " leaves the vertex list";
      throw Error(Errc::InvalidArgument, os.str());
    }
    ++out_begin_[index_.at(e.from) + 1];
  }
  for (std::size_t i = 1; i < out_begin_.size(); ++i) out_begin_[i] += out_begin_[i - 1];
}

std::size_t ActionGraph::index_of(Vertex v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) invalid_vertex(category_, v);
  return it->second;
}

std::span<const Edge> ActionGraph::out(std::size_t i) const {
  return std::span<const Edge>(edges_).subspan(out_begin_[i], out_begin_[i + 1] - out_begin_[i]);
}

namespace {

std::vector<Vertex> window_vertices(CategoryId cat, const Box& window) {
  std::vector<Vertex> out;
  for (std::int64_t p = window.pmin; p <= window.pmax; ++p)
    for (std::int64_t q = window.qmin; q <= window.qmax; ++q)
      if (in_vertex_set(cat, {p, q})) out.push_back({p, q});
  return out;
}

}  // namespace

ActionGraph generate(CategoryId cat, FunctorTag functor, const Box& window) {
  auto vertices = window_vertices(cat, window);
  if (vertices.empty()) throw Error(Errc::EmptyWindow, "no vertex of the category lies in the window");
  std::vector<Edge> edges;
  for (const auto& v : vertices)
    for (const auto& e : out_edges(cat, functor, v))
      if (window.contains(e.to)) edges.push_back({v, e.to, e.mult, e.move});
  return ActionGraph(cat, functor, window, std::move(vertices), std::move(edges));
}

std::vector<Vertex> interior(CategoryId cat, const Box& window, int depth) {
  if (depth < 1) throw Error(Errc::InvalidArgument, "interior depth must be at least 1");
  const auto all = window_vertices(cat, window);
  std::set<Vertex> current(all.begin(), all.end());
  for (int d = 0; d < depth; ++d) {
    std::set<Vertex> next;
    for (const auto& v : current) {
      bool inside = true;
      for (auto f : {FunctorTag::F, FunctorTag::G}) {
        for (const auto& e : out_edges(cat, f, v))
          if (!current.contains(e.to)) {
            inside = false;
            break;
          }
        if (!inside) break;
      }
      if (inside) next.insert(v);
    }
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

std::vector<Vertex> interior(const ActionGraph& graph, int depth) {
  return interior(graph.category(), graph.window(), depth);
}

}  // namespace sl3
