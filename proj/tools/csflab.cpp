#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csflab/canonical.hpp"
#include "csflab/csf.hpp"
#include "csflab/enumerate.hpp"
#include "csflab/errors.hpp"
#include "csflab/expand.hpp"
#include "csflab/graph_io.hpp"
#include "csflab/jsonio.hpp"
#include "csflab/mpoly.hpp"
#include "csflab/reconstruct.hpp"
#include "csflab/routes.hpp"
#include "csflab/upoly.hpp"

namespace {

using namespace csflab;
using nlohmann::ordered_json;

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 1;
}

Graph load_graph(const std::string& g6, const std::string& edges_path) {
  if (!g6.empty()) return parse_graph6(g6);
  std::ifstream in(edges_path);
  if (!in) throw DomainError("cannot open edge list: " + edges_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

ChromaticBasis load_basis(const std::string& spec, int degree) {
  if (spec == "star") return ChromaticBasis::star(degree);
  if (spec == "path") return ChromaticBasis::path(degree);
  if (spec.rfind("file:", 0) == 0)
    return ChromaticBasis::from_file(spec.substr(5));
  throw DomainError("unknown basis \"" + spec +
                    "\" (expected star, path, or file:<path>)");
}

RoutingStrategy parse_strategy(const std::string& name) {
  if (name == "path") return RoutingStrategy::PathRouting;
  if (name == "star") return RoutingStrategy::StarRouting;
  if (name == "dnc") return RoutingStrategy::DncRouting;
  throw DomainError("unknown strategy \"" + name +
                    "\" (expected path, star, or dnc)");
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_csf(const Graph& g, bool json) {
  MPoly f = csf(g);
  if (json) {
    emit(mpoly_to_json(f));
    return 0;
  }
  std::cout << "n = " << f.degree() << "\n";
  for (const auto& [lambda, c] : f.coeffs())
    std::cout << "m[" << lambda.to_string() << "] = " << to_decimal_string(c)
              << "\n";
  return 0;
}

int run_chromatic(const Graph& g, int k, bool have_k, bool json) {
  MPoly f = csf(g);
  int n = g.vertex_count();
  if (have_k && k < 0) throw DomainError("chromatic requires k >= 0");
  std::vector<int> ks;
  if (have_k)
    ks.push_back(k);
  else
    for (int i = 0; i <= n; ++i) ks.push_back(i);
  if (json) {
    ordered_json values = ordered_json::object();
    for (int i : ks)
      values[std::to_string(i)] = to_decimal_string(specialize_ones(f, i));
    emit(ordered_json{{"n", n}, {"values", values}});
    return 0;
  }
  for (int i : ks)
    std::cout << "chi(" << i
              << ") = " << to_decimal_string(specialize_ones(f, i)) << "\n";
  return 0;
}

int run_upoly(const Graph& g, int k, bool have_k, bool general, bool json) {
  if (general) {
    UPolyXY u = u_polynomial_general(g);
    if (json) {
      emit(upoly_xy_to_json(u));
      return 0;
    }
    std::cout << "n = " << u.degree << "\n";
    for (const auto& [key, c] : u.coeffs)
      std::cout << "x[" << key.first.to_string() << "] y^" << key.second
                << " = " << to_decimal_string(c) << "\n";
    return 0;
  }
  UPoly u = have_k ? restricted_u(g, k) : u_polynomial_forest(g);
  if (json) {
    emit(upoly_to_json(u));
    return 0;
  }
  std::cout << "n = " << u.degree << "\n";
  for (const auto& [lambda, c] : u.coeffs)
    std::cout << "x[" << lambda.to_string() << "] = " << to_decimal_string(c)
              << "\n";
  return 0;
}

int run_expand(const Graph& g, const std::string& basis_spec,
               const std::string& strategy_name, bool json) {
  ChromaticBasis basis = load_basis(basis_spec, g.vertex_count());
  BasisExpansion x =
      basis.is_forest_basis()
          ? expand_in_forest_basis(g, basis, parse_strategy(strategy_name))
          : expand_via_linear_solve(g, basis);
  if (!expansion_reconstructs(x, basis, g))
    throw DomainError("internal: expansion failed its reconstruction check");
  if (json) {
    emit(expansion_to_json(x));
    return 0;
  }
  std::cout << "basis = " << x.basis_name << "\n";
  std::cout << "n = " << x.degree << "\n";
  for (const auto& [lambda, c] : x.coeffs)
    std::cout << "[" << lambda.to_string() << "] = " << to_decimal_string(c)
              << "\n";
  return 0;
}

ordered_json route_to_json(const Route& r) {
  ordered_json graphs = ordered_json::array();
  for (const Graph& g : r.graphs) graphs.push_back(to_graph6(g));
  ordered_json steps = ordered_json::array();
  for (const Step& s : r.steps)
    steps.push_back(
        ordered_json{{"v1", s.v1},
                     {"v2", s.v2},
                     {"v3", s.v3},
                     {"positive", to_graph6(s.positive_remainder)},
                     {"negative", to_graph6(s.negative_remainder)}});
  return ordered_json{{"first", to_graph6(r.first())},
                      {"last", to_graph6(r.last())},
                      {"step_count", r.step_count()},
                      {"graphs", graphs},
                      {"steps", steps}};
}

int run_route(const Graph& g, const std::string& to, bool json) {
  Route r = Route::single(g);
  if (to == "path")
    r = route_to_path_form(g);
  else if (to == "star")
    r = route_to_star_form(g);
  else if (to == "girth3")
    r = route_to_girth3(g);
  else
    r = route_between_forests(g, parse_graph6(to));
  r.validate();
  if (json) {
    emit(route_to_json(r));
    return 0;
  }
  for (std::size_t i = 0; i < r.graphs.size(); ++i) {
    std::cout << i << ": " << to_graph6(r.graphs[i]) << "\n";
    if (i < r.steps.size()) {
      const Step& s = r.steps[i];
      std::cout << "   step (" << s.v1 << "," << s.v2 << "," << s.v3
                << ") positive=" << to_graph6(s.positive_remainder)
                << " negative=" << to_graph6(s.negative_remainder) << "\n";
    }
  }
  return 0;
}

int run_reconstruct(const Graph& g, const std::string& lambda_text, int k,
                    bool json) {
  Partition lambda = Partition::parse(lambda_text);
  Rational value = reconstruct_coefficient(g, lambda, k);
  if (json) {
    emit(ordered_json{{"lambda", lambda.to_string()},
                      {"k", k},
                      {"value", to_decimal_string(value)}});
    return 0;
  }
  std::cout << "c[" << lambda.to_string() << "] from k=" << k
            << " census = " << to_decimal_string(value) << "\n";
  return 0;
}

int run_lambda_matrix(const std::string& family, int n, bool json) {
  GraphClass cls;
  if (family == "all")
    cls = GraphClass::All;
  else if (family == "forests")
    cls = GraphClass::Forests;
  else if (family == "trees")
    cls = GraphClass::Trees;
  else
    throw DomainError("unknown family \"" + family +
                      "\" (expected all, forests, or trees)");
  LambdaMatrix m = lambda_matrix(enumerate_graphs(n, cls));
  int rank = exact_rank(m);
  if (json) {
    emit(lambda_matrix_to_json(m, rank));
    return 0;
  }
  std::cout << "n = " << n << "\ncolumns =";
  for (const Partition& lambda : m.columns)
    std::cout << " [" << lambda.to_string() << "]";
  std::cout << "\n";
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    std::cout << to_graph6(m.rows[i]) << ":";
    for (const BigInt& v : m.entries[i])
      std::cout << " " << to_decimal_string(v);
    std::cout << "\n";
  }
  std::cout << "rank = " << rank << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify suites

struct SuiteResult {
  long long graphs = 0;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> complaints;

  void fail(const std::string& what) {
    ++failures;
    if (complaints.size() < 20) complaints.push_back(what);
  }
};

bool csf_step_identity(const Step& s) {
  return csf(s.source) ==
         add(subtract(csf(s.target), csf(s.negative_remainder)),
             csf(s.positive_remainder));
}

SuiteResult suite_step(int n) {
  SuiteResult res;
  for (int size = 1; size <= n; ++size) {
    for (const Graph& f : enumerate_graphs(size, GraphClass::Forests)) {
      ++res.graphs;
      for (const auto& [v1, v2, v3] : step_witnesses(f)) {
        Step s = make_step(f, v1, v2, v3);
        ++res.checks;
        if (!csf_step_identity(s))
          res.fail("step identity failed on " + to_graph6(f) + " witness (" +
                   std::to_string(v1) + "," + std::to_string(v2) + "," +
                   std::to_string(v3) + ")");
      }
    }
  }
  return res;
}

SuiteResult suite_march(int n) {
  SuiteResult res;
  std::vector<Graph> pool;
  for (int size = 2; size <= n; ++size)
    for (const Graph& g : enumerate_graphs(size, GraphClass::All))
      pool.push_back(g);
  res.graphs = static_cast<long long>(pool.size());
  std::mt19937_64 rng(20260822ULL);
  for (int trial = 0; trial < 250; ++trial) {
    Route r = Route::single(pool[rng() % pool.size()]);
    int length = static_cast<int>(rng() % 9);
    for (int i = 0; i < length; ++i) {
      auto witnesses = step_witnesses(r.last());
      if (witnesses.empty()) break;
      auto [v1, v2, v3] = witnesses[rng() % witnesses.size()];
      Step s = make_step(r.last(), v1, v2, v3);
      r.graphs.push_back(s.target);
      r.steps.push_back(std::move(s));
    }
    r.validate();
    March m = march(r);
    MPoly total = csf(r.last());
    for (const Graph& p : m.positive) total = add(total, csf(p));
    for (const Graph& neg : m.negative) total = subtract(total, csf(neg));
    ++res.checks;
    if (!(total == csf(r.first())))
      res.fail("march identity failed from " + to_graph6(r.first()));
  }
  return res;
}

SuiteResult suite_expansion(int n, const std::string& basis_spec,
                            const std::string& strategy_name) {
  SuiteResult res;
  RoutingStrategy strategy = parse_strategy(strategy_name);
  std::vector<std::string> basis_specs;
  if (basis_spec.empty()) {
    basis_specs = {"star", "path"};
  } else {
    basis_specs = {basis_spec};
  }
  for (int size = 1; size <= n; ++size) {
    std::vector<ChromaticBasis> bases;
    for (const std::string& spec : basis_specs)
      bases.push_back(load_basis(spec, size));
    for (const Graph& g : enumerate_graphs(size, GraphClass::All)) {
      ++res.graphs;
      for (const ChromaticBasis& basis : bases) {
        BasisExpansion x = expand_in_forest_basis(g, basis, strategy);
        ++res.checks;
        if (!expansion_reconstructs(x, basis, g))
          res.fail("expansion does not reconstruct csf on " + to_graph6(g) +
                   " in basis " + basis.name());
        ++res.checks;
        BasisExpansion solved = expand_via_linear_solve(g, basis);
        if (!(x.coeffs == solved.coeffs))
          res.fail("expansion disagrees with the linear solve on " +
                   to_graph6(g) + " in basis " + basis.name());
      }
    }
  }
  return res;
}

SuiteResult suite_upoly(int n) {
  SuiteResult res;
  for (int size = 1; size <= n; ++size) {
    for (const Graph& f : enumerate_graphs(size, GraphClass::Forests)) {
      ++res.graphs;
      UPoly uf = u_polynomial_forest(f);
      for (const auto& [v1, v2, v3] : step_witnesses(f)) {
        Step s = make_step(f, v1, v2, v3);
        ++res.checks;
        UPoly lhs{uf.degree, uf.coeffs};
        // U(source) + U(negative) == U(target) + U(positive)
        UPoly a = u_polynomial_forest(s.negative_remainder);
        UPoly b = u_polynomial_forest(s.target);
        UPoly c = u_polynomial_forest(s.positive_remainder);
        std::map<Partition, BigInt> left = lhs.coeffs, right = b.coeffs;
        for (const auto& [lam, v] : a.coeffs) left[lam] += v;
        for (const auto& [lam, v] : c.coeffs) right[lam] += v;
        if (!(left == right))
          res.fail("u-polynomial step relation failed on " + to_graph6(f));
      }
    }
  }
  return res;
}

SuiteResult suite_corner(int n, const std::string& basis_spec) {
  SuiteResult res;
  std::string spec = basis_spec.empty() ? "star" : basis_spec;
  for (int size = 1; size <= n; ++size) {
    ChromaticBasis basis = load_basis(spec, size);
    if (!basis.is_forest_basis())
      throw DomainError("corner suite requires a forest basis");
    for (const Graph& f : enumerate_graphs(size, GraphClass::Forests)) {
      ++res.graphs;
      Partition mu = part_of(f);
      BasisExpansion x = expand_in_forest_basis(f, basis);
      std::optional<int> corner = corner_number(f, basis);
      ++res.checks;
      if (!(x.coeff(mu) == 1))
        res.fail("leading coefficient is not 1 on " + to_graph6(f));
      // Below the corner the truncation is exactly the unit vector; at the
      // corner (when finite) it is not.
      ++res.checks;
      int below = corner ? *corner - 1 : size;
      BasisExpansion t = truncate_expansion(x, mu, below);
      bool unit = t.coeffs.size() == 1 && t.coeff(mu) == 1;
      if (!unit)
        res.fail("truncation below the corner is not the unit vector on " +
                 to_graph6(f));
      if (corner) {
        ++res.checks;
        BasisExpansion at = truncate_expansion(x, mu, *corner);
        if (at.coeffs.size() <= 1)
          res.fail("truncation at the corner picked up nothing on " +
                   to_graph6(f));
      }
    }
  }
  return res;
}

SuiteResult suite_theorem4(int n) {
  SuiteResult res;
  if (n < 3) throw DomainError("theorem4 suite requires n >= 3");
  for (const Graph& g : enumerate_graphs(n, GraphClass::All)) {
    ++res.graphs;
    for (int k = 2; k < n; ++k) {
      MatrixRelationReport report = verify_matrix_relation(g, k);
      ++res.checks;
      if (!report.all_equal())
        res.fail("matrix relation failed on " + to_graph6(g) +
                 " at k=" + std::to_string(k));
    }
  }
  return res;
}

SuiteResult suite_ranks(int n) {
  SuiteResult res;
  std::vector<Partition> parts = enumerate_partitions(n);
  int p = static_cast<int>(parts.size());

  std::vector<Graph> multipartite;
  for (const Partition& lambda : parts)
    multipartite.push_back(
        generate_special(SpecialFamily::CompleteMultipartite, lambda));
  LambdaMatrix km = lambda_matrix(multipartite);
  res.graphs += p;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      ++res.checks;
      if (j < i && km.entries[i][j] != 0)
        res.fail("multipartite matrix not upper triangular at row " +
                 parts[i].to_string());
      if (j == i && km.entries[i][j] != 1)
        res.fail("multipartite matrix diagonal not 1 at " +
                 parts[i].to_string());
    }
  }
  ++res.checks;
  if (exact_rank(km) != p)
    res.fail("multipartite matrix rank is not " + std::to_string(p));

  std::vector<Graph> forests = enumerate_graphs(n, GraphClass::Forests);
  res.graphs += static_cast<long long>(forests.size());
  ++res.checks;
  if (exact_rank(lambda_matrix(forests)) != p)
    res.fail("forest matrix rank is not " + std::to_string(p));

  std::vector<Graph> trees = enumerate_graphs(n, GraphClass::Trees);
  res.graphs += static_cast<long long>(trees.size());
  ++res.checks;
  if (exact_rank(lambda_matrix(trees)) != p - n + 1)
    res.fail("tree matrix rank is not " + std::to_string(p - n + 1));
  return res;
}

int run_verify(const std::string& suite, int n, bool have_n,
               const std::string& basis_spec,
               const std::string& strategy_name) {
  SuiteResult res;
  int used_n = n;
  if (suite == "step") {
    if (!have_n) used_n = 6;
    res = suite_step(used_n);
  } else if (suite == "march") {
    if (!have_n) used_n = 6;
    res = suite_march(used_n);
  } else if (suite == "expansion") {
    if (!have_n) used_n = 5;
    res = suite_expansion(used_n, basis_spec, strategy_name);
  } else if (suite == "upoly") {
    if (!have_n) used_n = 6;
    res = suite_upoly(used_n);
  } else if (suite == "corner") {
    if (!have_n) used_n = 6;
    res = suite_corner(used_n, basis_spec);
  } else if (suite == "theorem4") {
    if (!have_n) used_n = 5;
    res = suite_theorem4(used_n);
  } else if (suite == "ranks") {
    if (!have_n) used_n = 5;
    res = suite_ranks(used_n);
  } else {
    throw DomainError("unknown suite \"" + suite + "\"");
  }
  for (const std::string& complaint : res.complaints)
    std::cout << "FAIL: " << complaint << "\n";
  std::cout << "suite=" << suite << " n=" << used_n << " graphs=" << res.graphs
            << " checks=" << res.checks
            << " identities=" << (res.failures == 0 ? "OK" : "FAIL")
            << " failures=" << res.failures << "\n";
  return res.failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromatic symmetric functions of small graphs"};
  app.require_subcommand(1);

  std::string g6, edges_path, basis_spec, strategy_name = "path";
  std::string lambda_text, to_target, family = "all", suite;
  int n = 0, k = 0;
  bool json = false, general = false;

  auto add_graph_options = [&](CLI::App* sub) {
    sub->add_option("--g6", g6, "graph as a graph6 string");
    sub->add_option("--edges", edges_path, "path to an edge-list file");
    sub->add_flag("--json", json, "emit JSON");
  };

  CLI::App* c_csf = app.add_subcommand(
      "csf", "chromatic symmetric function in the monomial basis");
  add_graph_options(c_csf);

  CLI::App* c_expand =
      app.add_subcommand("expand", "expansion in a chromatic basis");
  add_graph_options(c_expand);
  c_expand->add_option("--basis", basis_spec, "star, path, or file:<path>")
      ->required();
  c_expand->add_option("--strategy", strategy_name, "path, star, or dnc");

  CLI::App* c_upoly = app.add_subcommand("upoly", "u-polynomial of a forest");
  add_graph_options(c_upoly);
  CLI::Option* upoly_k =
      c_upoly->add_option("--k", k, "restrict to subsets of at most k edges");
  c_upoly->add_flag("--general", general,
                    "two-variable form for arbitrary graphs");

  CLI::App* c_chromatic =
      app.add_subcommand("chromatic", "chromatic polynomial values");
  add_graph_options(c_chromatic);
  CLI::Option* chromatic_k =
      c_chromatic->add_option("--k", k, "number of colors");

  CLI::App* c_route = app.add_subcommand("route", "rewriting routes");
  add_graph_options(c_route);
  c_route
      ->add_option("--to", to_target,
                   "path, star, girth3, or a graph6 target forest")
      ->required();

  CLI::App* c_reconstruct = app.add_subcommand(
      "reconstruct", "monomial coefficient from k-vertex induced subgraphs");
  add_graph_options(c_reconstruct);
  c_reconstruct->add_option("--lambda", lambda_text, "partition \"a,b,c\"")
      ->required();
  c_reconstruct->add_option("--k", k, "induced subgraph size")->required();

  CLI::App* c_matrix =
      app.add_subcommand("lambda-matrix", "census matrix of a graph family");
  c_matrix->add_option("--family", family, "all, forests, or trees");
  c_matrix->add_option("--n", n, "vertex count")->required();
  c_matrix->add_flag("--json", json, "emit JSON");

  CLI::App* c_verify = app.add_subcommand("verify", "verification suites");
  c_verify
      ->add_option("--suite", suite,
                   "step, march, expansion, upoly, corner, theorem4, or ranks")
      ->required();
  CLI::Option* verify_n = c_verify->add_option("--n", n, "size parameter");
  c_verify->add_option("--basis", basis_spec, "star, path, or file:<path>");
  c_verify->add_option("--strategy", strategy_name, "path, star, or dnc");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    auto need_graph = [&](CLI::App* sub) {
      if ((g6.empty()) == (edges_path.empty()))
        throw CLI::ValidationError(sub->get_name(),
                                   "provide exactly one of --g6 / --edges");
      return load_graph(g6, edges_path);
    };
    if (app.got_subcommand(c_csf)) return run_csf(need_graph(c_csf), json);
    if (app.got_subcommand(c_expand))
      return run_expand(need_graph(c_expand), basis_spec, strategy_name, json);
    if (app.got_subcommand(c_upoly)) {
      if (general && upoly_k->count() > 0)
        return usage_error("--k cannot be combined with --general");
      return run_upoly(need_graph(c_upoly), k, upoly_k->count() > 0, general,
                       json);
    }
    if (app.got_subcommand(c_chromatic))
      return run_chromatic(need_graph(c_chromatic), k,
                           chromatic_k->count() > 0, json);
    if (app.got_subcommand(c_route))
      return run_route(need_graph(c_route), to_target, json);
    if (app.got_subcommand(c_reconstruct))
      return run_reconstruct(need_graph(c_reconstruct), lambda_text, k, json);
    if (app.got_subcommand(c_matrix)) return run_lambda_matrix(family, n, json);
    if (app.got_subcommand(c_verify))
      return run_verify(suite, n, verify_n->count() > 0, basis_spec,
                        strategy_name);
    return usage_error("no subcommand given");
  } catch (const CLI::ValidationError& e) {
    return usage_error(e.what());
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  }
}
