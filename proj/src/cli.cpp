#include "sl3/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "sl3/category.hpp"
#include "sl3/eigvec.hpp"
#include "sl3/error.hpp"
#include "sl3/export.hpp"
#include "sl3/graphs.hpp"
#include "sl3/grothendieck.hpp"
#include "sl3/verify.hpp"
#include "sl3/weights.hpp"

namespace sl3::cli {

namespace {

using nlohmann::ordered_json;

const std::vector<std::string> kCheckNames{"pf",       "commute", "transpose", "connectivity", "iso",
                                           "distinct", "witness", "theta",     "whittaker"};

std::string pair_key(std::int64_t a, std::int64_t b) {
  return std::to_string(a) + "," + std::to_string(b);
}

ordered_json ubasis_json(const UBasisVec& v) {
  ordered_json j = ordered_json::object();
  for (const auto& [l, m] : v) j[pair_key(l.i, l.j)] = m;
  return j;
}

CategoryId category_arg(const std::string& s) {
  const auto c = parse_category(s);
  if (!c) throw Error(Errc::InvalidArgument, "unknown category '" + s + "'");
  return *c;
}

CosetClass coset_arg(const std::string& s) {
  const auto c = parse_coset_class(s);
  if (!c) throw Error(Errc::InvalidArgument, "unknown coset class '" + s + "'");
  return *c;
}

FunctorTag functor_arg(const std::string& s) {
  if (s == "F" || s == "f") return FunctorTag::F;
  if (s == "G" || s == "g") return FunctorTag::G;
  throw Error(Errc::InvalidArgument, "functor must be F or G");
}

HWLabel label_arg(std::int64_t i, std::int64_t j) {
  if (i < 0 || j < 0) throw Error(Errc::InvalidArgument, "highest weights need nonnegative entries");
  return {i, j};
}

ordered_json weight_json(const Weight& w) {
  return {{"class", std::string(to_string(w.cls))}, {"off", {w.off.p, w.off.q}}};
}

struct VerifyOptions {
  std::string category = "all";
  std::int64_t window = 24;
  std::vector<std::string> checks;
  unsigned jobs = 1;
};

using Task = std::function<std::vector<CheckReport>()>;

std::vector<Task> verify_tasks(const VerifyOptions& opt) {
  const bool all = opt.category == "all";
  std::vector<CategoryId> cats;
  if (all)
    cats.assign(kAllCategories.begin(), kAllCategories.end());
  else
    cats.push_back(category_arg(opt.category));
  auto wanted = [&](const std::string& name) {
    return std::find(opt.checks.begin(), opt.checks.end(), name) != opt.checks.end();
  };
  const auto n = opt.window;
  std::vector<Task> tasks;
  for (auto cat : cats) {
    const auto box = default_window(cat, n);
    if (wanted("pf"))
      tasks.push_back([=] {
        return std::vector{check_pf(cat, FunctorTag::F, box), check_pf(cat, FunctorTag::G, box)};
      });
    if (wanted("commute")) tasks.push_back([=] { return std::vector{check_commute(cat, box)}; });
    if (wanted("transpose") && is_semisimple(cat))
      tasks.push_back([=] { return std::vector{check_transpose(cat, box)}; });
    if (wanted("connectivity"))
      tasks.push_back([=] {
        return std::vector{check_strong_connectivity(cat, FunctorTag::F, box, 5),
                           check_strong_connectivity(cat, FunctorTag::G, box, 5)};
      });
    if (wanted("theta"))
      tasks.push_back([=] {
        const auto f = generate(cat, FunctorTag::F, box);
        const auto g = generate(cat, FunctorTag::G, box);
        std::vector<CheckReport> out;
        for (auto label : {HWLabel{1, 1}, HWLabel{2, 0}, HWLabel{0, 2}})
          out.push_back(check_theta_positivity(f, g, label));
        return out;
      });
    if (wanted("whittaker") && is_whittaker(cat))
      tasks.push_back([=] {
        std::vector<CheckReport> out;
        for (auto f : {FunctorTag::F, FunctorTag::G}) {
          out.push_back(check_whittaker_degree(generate(cat, f, box)));
          out.push_back(check_whittaker_covering(cat, f, box));
        }
        return out;
      });
  }
  if (wanted("iso")) {
    const std::vector<std::pair<CategoryId, CategoryId>> pairs{
        {CategoryId::M1, CategoryId::M3}, {CategoryId::M3, CategoryId::M5},
        {CategoryId::M1, CategoryId::M5}, {CategoryId::M2, CategoryId::M4},
        {CategoryId::M4, CategoryId::M6}, {CategoryId::M2, CategoryId::M6}};
    for (const auto& [l, r] : pairs) {
      if (!all && std::find(cats.begin(), cats.end(), l) == cats.end() &&
          std::find(cats.begin(), cats.end(), r) == cats.end())
        continue;
      tasks.push_back([=] { return std::vector{check_iso_family(l, r, default_window(l, n))}; });
    }
  }
  const bool touches_n =
      all || std::find_if(cats.begin(), cats.end(), [](CategoryId c) {
               return c == CategoryId::N1 || c == CategoryId::N2;
             }) != cats.end();
  if (wanted("distinct") && touches_n)
    tasks.push_back([=] { return std::vector{check_n1_n2_distinct(n)}; });
  if (wanted("witness") && touches_n)
    tasks.push_back([=] { return std::vector{check_n1_n2_isomorphism(n)}; });
  return tasks;
}

std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<CheckReport>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<CheckReport> flat;
  for (auto& r : results) flat.insert(flat.end(), r.begin(), r.end());
  return flat;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::InvalidArgument, "cannot open " + path + " for writing");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of sl3 module categories", "sl3"};
  app.require_subcommand(1);

  std::int64_t a = 0, b = 0, c = 0, d = 0;
  auto* tensor_cmd = app.add_subcommand("tensor", "Decompose L((i,j)) (x) L((k,l))");
  tensor_cmd->add_option("i", a)->required();
  tensor_cmd->add_option("j", b)->required();
  tensor_cmd->add_option("k", c)->required();
  tensor_cmd->add_option("l", d)->required();

  auto* dim_cmd = app.add_subcommand("dim", "Dimension of L((i,j))");
  dim_cmd->add_option("i", a)->required();
  dim_cmd->add_option("j", b)->required();

  auto* upoly_cmd = app.add_subcommand("upoly", "Coefficients of U_{i,j}, keyed by exponents of x,y");
  upoly_cmd->add_option("i", a)->required();
  upoly_cmd->add_option("j", b)->required();

  std::string coset = "integral";
  bool whittaker = false;
  auto* orbit_cmd = app.add_subcommand("orbit", "Dot orbit of a weight (use -- before negative p q)");
  orbit_cmd->add_option("--class", coset, "integral|s|r|w0|third1|third2|generic");
  orbit_cmd->add_option("p", a)->required();
  orbit_cmd->add_option("q", b)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Region, stabilizer and category filtration of L(lambda)");
  classify_cmd->add_option("--class", coset, "integral|s|r|w0|third1|third2|generic");
  classify_cmd->add_flag("--whittaker", whittaker, "Index third-coset weights by Whittaker orbits");
  classify_cmd->add_option("p", a)->required();
  classify_cmd->add_option("q", b)->required();

  std::string category;
  auto* eig_cmd = app.add_subcommand("eig", "Perron-Frobenius eigenvector entry at a vertex");
  eig_cmd->add_option("--category", category)->required();
  eig_cmd->add_option("p", a)->required();
  eig_cmd->add_option("q", b)->required();

  std::string functor = "F";
  std::vector<std::int64_t> box;
  std::int64_t window = 0;
  std::string format = "dot";
  std::string out_path;
  auto* graph_cmd = app.add_subcommand("graph", "Export a window of an action graph");
  graph_cmd->add_option("--category", category)->required();
  graph_cmd->add_option("--functor", functor, "F or G");
  auto* box_opt = graph_cmd->add_option("--box", box, "pmin pmax qmin qmax")->expected(4);
  graph_cmd->add_option("--window", window, "Side of the category's default window")->excludes(box_opt);
  graph_cmd->add_option("--format", format, "dot|json|csv");
  graph_cmd->add_option("--out", out_path, "Write to a file instead of stdout");

  VerifyOptions vopt;
  std::string checks;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant checks, one JSON line per report");
  verify_cmd->add_option("--category", vopt.category, "Category name or 'all'");
  verify_cmd->add_option("--window", vopt.window, "Side of each category's default window");
  verify_cmd->add_option("--checks", checks, "Comma-separated subset of " + [] {
    std::string s;
    for (const auto& n : kCheckNames) s += (s.empty() ? "" : ",") + n;
    return s;
  }());
  verify_cmd->add_option("--jobs", vopt.jobs, "Worker threads");

  std::string left, right;
  auto* iso_cmd = app.add_subcommand("iso", "Check the explicit isomorphism between two categories");
  iso_cmd->add_option("left", left)->required();
  iso_cmd->add_option("right", right)->required();
  iso_cmd->add_option("--window", window, "Side of the left category's default window");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*tensor_cmd) {
      out << ubasis_json(tensor(label_arg(a, b), label_arg(c, d))).dump() << "\n";
    } else if (*dim_cmd) {
      out << dim(label_arg(a, b)) << "\n";
    } else if (*upoly_cmd) {
      ordered_json j = ordered_json::object();
      const auto poly = upoly(label_arg(a, b));
      for (const auto& [m, k] : poly.terms()) j[pair_key(m.x, m.y)] = k;
      out << j.dump() << "\n";
    } else if (*orbit_cmd) {
      auto j = ordered_json::array();
      for (const auto& w : dot_orbit(Weight{coset_arg(coset), {a, b}})) j.push_back(weight_json(w));
      out << j.dump() << "\n";
    } else if (*classify_cmd) {
      const Weight w{coset_arg(coset), {a, b}};
      ordered_json j;
      j["weight"] = weight_json(w);
      j["region"] = std::string(to_string(region(w)));
      j["singular"] = is_singular(w);
      auto stab = ordered_json::array();
      for (auto s : stabilizer(w)) stab.push_back(std::string(to_string(s)));
      j["stabilizer"] = std::move(stab);
      auto cats = ordered_json::array();
      for (auto cat : category_of_simple(w, whittaker)) cats.push_back(std::string(to_string(cat)));
      j["categories"] = std::move(cats);
      out << j.dump() << "\n";
    } else if (*eig_cmd) {
      out << pf_value(category_arg(category), {a, b}) << "\n";
    } else if (*graph_cmd) {
      const auto cat = category_arg(category);
      const auto fmt = parse_export_format(format);
      if (!fmt) throw Error(Errc::InvalidArgument, "format must be dot, json or csv");
      Box w;
      if (!box.empty())
        w = {box[0], box[1], box[2], box[3]};
      else if (window > 0)
        w = default_window(cat, window);
      else
        throw Error(Errc::InvalidArgument, "graph needs --box or --window");
      if (w.empty()) throw Error(Errc::EmptyWindow, "box bounds are reversed");
      write_output(render(generate(cat, functor_arg(functor), w), *fmt), out_path, out);
    } else if (*verify_cmd) {
      if (checks.empty()) {
        vopt.checks = kCheckNames;
      } else {
        std::stringstream ss(checks);
        for (std::string item; std::getline(ss, item, ',');) {
          if (std::find(kCheckNames.begin(), kCheckNames.end(), item) == kCheckNames.end())
            throw Error(Errc::InvalidArgument, "unknown check '" + item + "'");
          vopt.checks.push_back(item);
        }
      }
      const auto reports = run_tasks(verify_tasks(vopt), vopt.jobs);
      bool pass = true;
      for (const auto& r : reports) {
        out << to_json(r).dump() << "\n";
        pass = pass && r.pass;
      }
      return pass ? kExitOk : kExitCheckFailed;
    } else if (*iso_cmd) {
      const auto l = category_arg(left);
      const auto r = check_iso_family(l, category_arg(right), default_window(l, window > 0 ? window : 20));
      out << to_json(r).dump() << "\n";
      return r.pass ? kExitOk : kExitCheckFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace sl3::cli
