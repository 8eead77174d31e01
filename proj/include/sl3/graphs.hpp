#pragma once

// Action graphs of F = L((1,0)) and G = L((0,1)) on the thirteen module
// categories, restricted to finite boxes of vertex offsets.
//
// A vertex is an offset pair. For the Whittaker categories it is the
// canonical (lexicographically least) representative of a 3-element
// sr-orbit in the (1/3,1/3) or (2/3,2/3) coset.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sl3/category.hpp"
#include "sl3/weights.hpp"

namespace sl3 {

enum class FunctorTag : std::uint8_t { F, G };

std::string_view to_string(FunctorTag f) noexcept;

using Vertex = IntPair;

/// Unit moves are the weights of F, respectively of G. LongJump marks the
/// wall-crossing edges of N1/N2 that are not translations by a weight.
enum class Move : std::uint8_t { F10, F0m1, Fm11, G01, G1m1, Gm10, LongJump };

inline constexpr std::array<Move, 3> kFMoves{Move::F10, Move::F0m1, Move::Fm11};
inline constexpr std::array<Move, 3> kGMoves{Move::G01, Move::G1m1, Move::Gm10};

/// "(1,0)", "(0,-1)", ..., "long".
std::string_view to_string(Move m) noexcept;
std::optional<Move> parse_move(std::string_view s) noexcept;

/// Lattice displacement of a unit move. Precondition: m != LongJump.
IntPair displacement(Move m);

struct OutEdge {
  Vertex to;
  int mult = 1;
  Move move = Move::F10;

  friend bool operator==(const OutEdge&, const OutEdge&) = default;
};

using EdgeList = std::vector<OutEdge>;

/// Does v index an object of the category?
bool in_vertex_set(CategoryId cat, Vertex v);

/// Out-edges in the F-graph. Throws Error{InvalidVertex} outside the vertex set.
EdgeList out_edges_F(CategoryId cat, Vertex v);
EdgeList out_edges_G(CategoryId cat, Vertex v);
EdgeList out_edges(CategoryId cat, FunctorTag f, Vertex v);

/// The category paired with `cat` by the diagram automorphism (p,q) <-> (q,p).
/// Only defined for the six categories with double arrows.
CategoryId swap_dual(CategoryId cat);

/// Canonical vertex of the Whittaker orbit through an arbitrary offset.
Vertex whittaker_canonical(CategoryId cat, IntPair off);

/// Inclusive box of offsets.
struct Box {
  std::int64_t pmin = 0;
  std::int64_t pmax = -1;
  std::int64_t qmin = 0;
  std::int64_t qmax = -1;

  bool contains(Vertex v) const noexcept {
    return v.p >= pmin && v.p <= pmax && v.q >= qmin && v.q <= qmax;
  }
  bool empty() const noexcept { return pmin > pmax || qmin > qmax; }

  friend bool operator==(const Box&, const Box&) = default;
};

/// A side x side box placed across the walls of the category.
Box default_window(CategoryId cat, std::int64_t side);

struct Edge {
  Vertex from;
  Vertex to;
  int mult = 1;
  Move move = Move::F10;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite window of an action graph. Vertices are in row-major order of
/// offsets; edges are sorted by (from, to, move) and only join window
/// vertices (edges leaving the window are dropped).
class ActionGraph {
 public:
  ActionGraph(CategoryId category, FunctorTag functor, Box window, std::vector<Vertex> vertices,
              std::vector<Edge> edges);

  CategoryId category() const noexcept { return category_; }
  FunctorTag functor() const noexcept { return functor_; }
  const Box& window() const noexcept { return window_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(Vertex v) const { return index_.contains(v); }
  /// Position of v in vertices(); throws InvalidVertex if absent.
  std::size_t index_of(Vertex v) const;

  /// Edges leaving vertex number i, as a subrange of edges().
  std::span<const Edge> out(std::size_t i) const;

  friend bool operator==(const ActionGraph& a, const ActionGraph& b) {
    return a.category_ == b.category_ && a.functor_ == b.functor_ && a.window_ == b.window_ &&
           a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  CategoryId category_;
  FunctorTag functor_;
  Box window_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<Vertex, std::size_t> index_;
  std::vector<std::size_t> out_begin_;
};

/// Throws Error{EmptyWindow} if the box holds no vertex of the category.
ActionGraph generate(CategoryId cat, FunctorTag functor, const Box& window);

/// Vertices of the window whose F- and G-out-neighbourhoods up to `depth`
/// steps stay inside the window. Sorted like ActionGraph::vertices().
std::vector<Vertex> interior(CategoryId cat, const Box& window, int depth);
std::vector<Vertex> interior(const ActionGraph& graph, int depth);

}  // namespace sl3
