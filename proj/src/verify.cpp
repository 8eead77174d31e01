#include "sl3/verify.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sl3/eigvec.hpp"
#include "sl3/error.hpp"
#include "sl3/weights.hpp"

namespace sl3 {

namespace {

constexpr std::size_t kMaxCounterexamples = 32;

using Multiset = std::map<Vertex, std::int64_t>;

CheckReport start(std::string name, CategoryId cat, const Box& window) {
  return {std::move(name), std::string(to_string(cat)), window, true, {}, {}};
}

void fail_at(CheckReport& r, Vertex v) {
  r.pass = false;
  if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(v);
}

void require_pair(const ActionGraph& f, const ActionGraph& g) {
  if (f.functor() != FunctorTag::F || g.functor() != FunctorTag::G)
    throw Error(Errc::InvalidArgument, "expected an F-graph and a G-graph");
  if (f.category() != g.category() || !(f.window() == g.window()))
    throw Error(Errc::InvalidArgument, "F- and G-graphs must share category and window");
}

std::vector<Vertex> nonempty_interior(CategoryId cat, const Box& window, int depth) {
  auto inner = interior(cat, window, depth);
  if (inner.empty()) {
    std::ostringstream os;
    os << "depth-" << depth << " interior of the window is empty";
    throw Error(Errc::WindowTooSmall, os.str());
  }
  return inner;
}

Multiset out_multiset(const ActionGraph& g, Vertex v) {
  Multiset m;
  for (const auto& e : g.out(g.index_of(v))) m[e.to] += e.mult;
  return m;
}

Multiset rule_multiset(CategoryId cat, FunctorTag f, Vertex v) {
  Multiset m;
  for (const auto& e : out_edges(cat, f, v)) m[e.to] += e.mult;
  return m;
}

Multiset propagate(const ActionGraph& g, const Multiset& row) {
  Multiset out;
  for (const auto& [v, c] : row)
    for (const auto& e : g.out(g.index_of(v))) out[e.to] += c * e.mult;
  return out;
}

Multiset two_step(const ActionGraph& first, const ActionGraph& second, Vertex u) {
  return propagate(second, out_multiset(first, u));
}

LatticeMap compose(const LatticeMap& x, const LatticeMap& y) {  // x after y
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

LatticeMap inverse(const LatticeMap& m) {
  const auto det = m.a * m.d - m.b * m.c;  // +-1 for every map used here
  return {m.d * det, -m.b * det, -m.c * det, m.a * det};
}

std::string linear_form(std::int64_t x, std::int64_t y) {
  std::string out;
  for (const auto& [c, var] : {std::pair{x, 'p'}, std::pair{y, 'q'}}) {
    if (c == 0) continue;
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (c != 1 && c != -1) out += std::to_string(c < 0 ? -c : c);
    out += var;
  }
  return out.empty() ? "0" : out;
}

std::string describe(const LatticeMap& m) {
  return "(p,q) -> (" + linear_form(m.a, m.b) + ", " + linear_form(m.c, m.d) + ")";
}

}  // namespace

nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.name;
  j["category"] = r.category;
  j["window"] = {r.window.pmin, r.window.pmax, r.window.qmin, r.window.qmax};
  j["pass"] = r.pass;
  auto ce = nlohmann::ordered_json::array();
  for (const auto& v : r.counterexamples) ce.push_back({v.p, v.q});
  j["counterexamples"] = std::move(ce);
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

CheckReport check_pf(const ActionGraph& g) {
  const auto cat = g.category();
  auto r = start(std::string("pf_") + std::string(to_string(g.functor())), cat, g.window());
  std::size_t checked = 0;
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    const auto v = g.vertices()[i];
    const auto rule = out_edges(cat, g.functor(), v);
    if (!std::all_of(rule.begin(), rule.end(), [&](const OutEdge& e) { return g.window().contains(e.to); }))
      continue;
    ++checked;
    std::int64_t sum = 0;
    for (const auto& e : g.out(i)) sum += e.mult * pf_value(cat, e.to);
    if (sum != 3 * pf_value(cat, v)) fail_at(r, v);
  }
  r.detail = std::to_string(checked) + " window-complete vertices";
  return r;
}

CheckReport check_pf(CategoryId cat, FunctorTag functor, const Box& window) {
  return check_pf(generate(cat, functor, window));
}

CheckReport check_commute(const ActionGraph& f, const ActionGraph& g, int depth) {
  require_pair(f, g);
  auto r = start("commute", f.category(), f.window());
  const auto inner = nonempty_interior(f.category(), f.window(), depth);
  for (const auto& u : inner)
    if (two_step(f, g, u) != two_step(g, f, u)) fail_at(r, u);
  r.detail = std::to_string(inner.size()) + " interior vertices";
  return r;
}

CheckReport check_commute(CategoryId cat, const Box& window, int depth) {
  return check_commute(generate(cat, FunctorTag::F, window), generate(cat, FunctorTag::G, window),
                       depth);
}

CheckReport check_transpose(const ActionGraph& f, const ActionGraph& g) {
  require_pair(f, g);
  auto r = start("transpose", f.category(), f.window());
  std::map<Vertex, Multiset> f_in;
  for (const auto& e : f.edges()) f_in[e.to][e.from] += e.mult;
  const auto inner = nonempty_interior(f.category(), f.window(), 1);
  for (const auto& v : inner) {
    const auto it = f_in.find(v);
    const Multiset reversed = it == f_in.end() ? Multiset{} : it->second;
    if (out_multiset(g, v) != reversed) fail_at(r, v);
  }
  r.detail = std::to_string(inner.size()) + " interior vertices";
  return r;
}

CheckReport check_transpose(CategoryId cat, const Box& window) {
  if (!is_semisimple(cat))
    throw Error(Errc::NotSemisimpleCategory,
                std::string(to_string(cat)) + " has double arrows; G is not the transpose of F");
  return check_transpose(generate(cat, FunctorTag::F, window), generate(cat, FunctorTag::G, window));
}

CheckReport check_strong_connectivity(const ActionGraph& g, std::int64_t margin) {
  if (margin < 3) throw Error(Errc::InvalidArgument, "connectivity margin must be at least 3");
  const auto& w = g.window();
  const Box inner_box{w.pmin + margin, w.pmax - margin, w.qmin + margin, w.qmax - margin};
  std::vector<Vertex> inner;
  for (const auto& v : g.vertices())
    if (inner_box.contains(v)) inner.push_back(v);
  if (inner.empty()) throw Error(Errc::WindowTooSmall, "no vertex survives the connectivity margin");

  const auto n = g.vertices().size();
  std::vector<std::vector<std::size_t>> back(n);
  for (const auto& e : g.edges()) back[g.index_of(e.to)].push_back(g.index_of(e.from));
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::deque<std::size_t> queue{g.index_of(inner.front())};
    seen[queue.front()] = 1;
    while (!queue.empty()) {
      const auto i = queue.front();
      queue.pop_front();
      auto visit = [&](std::size_t k) {
        if (!seen[k]) {
          seen[k] = 1;
          queue.push_back(k);
        }
      };
      if (forward)
        for (const auto& e : g.out(i)) visit(g.index_of(e.to));
      else
        for (auto k : back[i]) visit(k);
    }
    return seen;
  };
  const auto fwd = reach(true);
  const auto bwd = reach(false);

  auto r = start(std::string("connectivity_") + std::string(to_string(g.functor())), g.category(), w);
  for (const auto& v : inner) {
    const auto i = g.index_of(v);
    if (!fwd[i] || !bwd[i]) fail_at(r, v);
  }
  r.detail = std::to_string(inner.size()) + " vertices at margin " + std::to_string(margin);
  return r;
}

CheckReport check_strong_connectivity(CategoryId cat, FunctorTag functor, const Box& window,
                                      std::int64_t margin) {
  return check_strong_connectivity(generate(cat, functor, window), margin);
}

LatticeMap iso_map(CategoryId left, CategoryId right) {
  static constexpr std::array<CategoryId, 3> kOdd{CategoryId::M1, CategoryId::M3, CategoryId::M5};
  static constexpr std::array<CategoryId, 3> kEven{CategoryId::M2, CategoryId::M4, CategoryId::M6};
  auto position = [](const std::array<CategoryId, 3>& fam, CategoryId c) -> int {
    for (int i = 0; i < 3; ++i)
      if (fam[i] == c) return i;
    return -1;
  };
  int i = position(kOdd, left), j = position(kOdd, right);
  if (i < 0 || j < 0) {
    i = position(kEven, left);
    j = position(kEven, right);
  }
  if (i < 0 || j < 0)
    throw Error(Errc::NoKnownMap, "no isomorphism is known between " + std::string(to_string(left)) +
                                      " and " + std::string(to_string(right)));
  // Step k carries family member k onto member k+1.
  const std::array<LatticeMap, 2> steps{LatticeMap{-1, -1, 1, 0}, LatticeMap{-1, 0, 1, 1}};
  LatticeMap m{1, 0, 0, 1};
  for (int k = std::min(i, j); k < std::max(i, j); ++k) m = compose(steps[k], m);
  return i <= j ? m : inverse(m);
}

CheckReport check_iso_family(CategoryId left, CategoryId right, const Box& window) {
  const auto psi = iso_map(left, right);
  auto r = start("iso", left, window);
  r.category = std::string(to_string(left)) + "->" + std::string(to_string(right));
  for (auto p = window.pmin; p <= window.pmax; ++p)
    for (auto q = window.qmin; q <= window.qmax; ++q)
      if (in_vertex_set(left, {p, q}) != in_vertex_set(right, psi({p, q}))) fail_at(r, {p, q});
  const auto inner = nonempty_interior(left, window, 1);
  for (auto f : {FunctorTag::F, FunctorTag::G}) {
    const auto g = generate(left, f, window);
    for (const auto& v : inner) {
      Multiset mapped;
      for (const auto& [to, m] : out_multiset(g, v)) mapped[psi(to)] += m;
      if (mapped != rule_multiset(right, f, psi(v))) fail_at(r, v);
    }
  }
  r.detail = describe(psi);
  return r;
}

CheckReport check_n1_n2_distinct(std::int64_t side) {
  if (side < 20) throw Error(Errc::WindowTooSmall, "the chain comparison needs windows of side >= 20");
  auto r = start("distinct", CategoryId::N1, default_window(CategoryId::N1, side));
  r.category = "n1,n2";
  std::ostringstream detail;
  for (auto cat : {CategoryId::N1, CategoryId::N2}) {
    const auto box = default_window(cat, side);
    const auto g = generate(cat, FunctorTag::F, box);
    Multiset in_mult;
    for (const auto& e : g.edges()) in_mult[e.to] += e.mult;
    std::set<Vertex> found, claimed;
    for (const auto& v : interior(cat, box, 2)) {
      if (in_mult[v] == 3) found.insert(v);
      const bool on_chain = cat == CategoryId::N1 ? (v.p == -2 && v.q >= 2) : (v.q == -2 && v.p >= 2);
      if (on_chain) claimed.insert(v);
    }
    for (const auto& v : found)
      if (!claimed.contains(v)) fail_at(r, v);
    for (const auto& v : claimed) {
      if (!found.contains(v)) fail_at(r, v);
      // N1: (-2,k+1) -> (-2,k). N2: (k,-2) -> (k+1,-2).
      const Vertex from = cat == CategoryId::N1 ? v + Vertex{0, 1} : v;
      const Vertex to = cat == CategoryId::N1 ? v : v + Vertex{1, 0};
      if (claimed.contains(from) && claimed.contains(to) && !out_multiset(g, from).contains(to))
        fail_at(r, from);
    }
    if (detail.tellp() > 0) detail << "; ";
    detail << to_string(cat) << ": " << found.size() << " interior vertices of in-multiplicity 3, "
           << claimed.size() << " on the claimed chain";
  }
  r.detail = detail.str();
  return r;
}

Vertex n1_to_n2(Vertex v) {
  const Weight w{CosetClass::Integral, v};
  return dot(v.p + v.q >= -1 ? WeylElem::R : WeylElem::S, w).off;
}

CheckReport check_n1_n2_isomorphism(std::int64_t side) {
  const auto box = default_window(CategoryId::N1, side);
  auto r = start("n1_n2_isomorphism", CategoryId::N1, box);
  r.category = "n1->n2";
  std::set<Vertex> image;
  for (auto p = box.pmin; p <= box.pmax; ++p)
    for (auto q = box.qmin; q <= box.qmax; ++q) {
      if (!in_vertex_set(CategoryId::N1, {p, q})) continue;
      const auto w = n1_to_n2({p, q});
      if (!in_vertex_set(CategoryId::N2, w) || !image.insert(w).second) fail_at(r, {p, q});
    }
  const auto target = default_window(CategoryId::N2, side);
  for (auto p = target.pmin; p <= target.pmax; ++p)
    for (auto q = target.qmin; q <= target.qmax; ++q) {
      const Weight w{CosetClass::Integral, {p, q}};
      bool hit = false;
      for (auto s : {WeylElem::R, WeylElem::S}) {
        const auto pre = dot(s, w).off;
        hit = hit || (in_vertex_set(CategoryId::N1, pre) && n1_to_n2(pre) == w.off);
      }
      if (!hit) fail_at(r, {p, q});
    }
  for (auto f : {FunctorTag::F, FunctorTag::G}) {
    for (const auto& v : interior(CategoryId::N1, box, 1)) {
      Multiset mapped;
      for (const auto& [to, m] : rule_multiset(CategoryId::N1, f, v)) mapped[n1_to_n2(to)] += m;
      if (mapped != rule_multiset(CategoryId::N2, f, n1_to_n2(v))) fail_at(r, v);
    }
  }
  r.detail = "r.mu on p+q >= -1, s.mu on p+q <= -2";
  return r;
}

std::optional<std::map<Vertex, std::int64_t>> theta_row(const ActionGraph& f, const ActionGraph& g,
                                                        HWLabel label, Vertex u) {
  require_pair(f, g);
  if (!f.contains(u)) return std::nullopt;
  const auto poly = upoly(label);
  std::int64_t max_y = 0;
  for (const auto& [m, c] : poly.terms()) max_y = std::max(max_y, m.y);
  std::vector<Multiset> g_powers{{{u, 1}}};
  for (std::int64_t b = 1; b <= max_y; ++b) g_powers.push_back(propagate(g, g_powers.back()));
  Multiset row;
  std::map<std::int64_t, std::vector<Multiset>> f_powers;  // y-exponent -> [x-exponent]
  for (const auto& [m, c] : poly.terms()) {
    auto& chain = f_powers[m.y];
    if (chain.empty()) chain.push_back(g_powers[m.y]);
    while (static_cast<std::int64_t>(chain.size()) <= m.x) chain.push_back(propagate(f, chain.back()));
    for (const auto& [v, k] : chain[m.x]) row[v] += c * k;
  }
  std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
  return row;
}

CheckReport check_theta_positivity(const ActionGraph& f, const ActionGraph& g, HWLabel label) {
  require_pair(f, g);
  if (label.i < 0 || label.j < 0 || label.i > 6 || label.j > 6)
    throw Error(Errc::InvalidArgument, "theta labels need entries in [0,6]");
  const auto cat = f.category();
  std::ostringstream name;
  name << "theta" << label;
  auto r = start(name.str(), cat, f.window());
  const int depth = static_cast<int>(std::max<std::int64_t>(1, label.i + label.j));
  const auto inner = nonempty_interior(cat, f.window(), depth);
  const auto d = dim(label);
  for (const auto& u : inner) {
    const auto row = *theta_row(f, g, label, u);
    std::int64_t sum = 0;
    bool ok = true;
    for (const auto& [v, k] : row) {
      ok = ok && k > 0;
      sum += k * pf_value(cat, v);
    }
    if (!ok || sum != d * pf_value(cat, u)) fail_at(r, u);
  }
  r.detail = std::to_string(inner.size()) + " interior vertices";
  return r;
}

CheckReport check_theta_positivity(CategoryId cat, HWLabel label, const Box& window) {
  return check_theta_positivity(generate(cat, FunctorTag::F, window),
                                generate(cat, FunctorTag::G, window), label);
}

CheckReport check_whittaker_degree(const ActionGraph& g) {
  if (!is_whittaker(g.category()))
    throw Error(Errc::InvalidArgument, "out-degree 3 is a Whittaker check");
  auto r = start(std::string("degree_") + std::string(to_string(g.functor())), g.category(), g.window());
  const auto inner = nonempty_interior(g.category(), g.window(), 1);
  for (const auto& v : inner) {
    std::int64_t total = 0;
    for (const auto& e : g.out(g.index_of(v))) total += e.mult;
    if (total != 3) fail_at(r, v);
  }
  r.detail = std::to_string(inner.size()) + " interior vertices";
  return r;
}

CheckReport check_whittaker_covering(CategoryId cat, FunctorTag functor, const Box& window) {
  if (!is_whittaker(cat)) throw Error(Errc::InvalidArgument, "covering is a Whittaker check");
  const auto coset = cat == CategoryId::Whittaker1 ? CosetClass::ThirdOne : CosetClass::ThirdTwo;
  auto r = start(std::string("covering_") + std::string(to_string(functor)), cat, window);
  std::size_t checked = 0;
  for (auto p = window.pmin; p <= window.pmax; ++p)
    for (auto q = window.qmin; q <= window.qmax; ++q) {
      const Vertex v{p, q};
      if (!in_vertex_set(cat, v)) continue;
      ++checked;
      const auto expected = rule_multiset(cat, functor, v);
      const auto lifts = dot_orbit(Weight{coset, v});
      if (lifts.size() != 3) fail_at(r, v);
      for (const auto& x : lifts) {
        Multiset projected;
        for (const auto& e : out_edges(CategoryId::GenericK, functor, x.off))
          projected[whittaker_canonical(cat, e.to)] += e.mult;
        if (projected != expected) fail_at(r, v);
      }
    }
  r.detail = std::to_string(checked) + " orbits, 3 lifts each";
  return r;
}

}  // namespace sl3
