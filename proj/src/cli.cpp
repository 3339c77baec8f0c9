#include "drg/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "drg/corpus.hpp"
#include "drg/errors.hpp"
#include "drg/subconstituent.hpp"
#include "json.hpp"

namespace drg::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string edge_path;
  std::string fixture;
  std::string array_path;
  double tol = kDefaultTol;
  std::string format = "json";
  int idempotent = -1;  // -1 = all nontrivial idempotents
};

struct Loaded {
  std::optional<Graph> graph;
  std::optional<DistanceMatrices> dm;
  std::optional<IntersectionNumbers> num;
  IntersectionArray arr;
  SpectralData spec;
};

int source_count(const Options& o) {
  return (o.edge_path.empty() ? 0 : 1) + (o.fixture.empty() ? 0 : 1) +
         (o.array_path.empty() ? 0 : 1);
}

Loaded load_input(const Options& o, bool need_graph) {
  if (source_count(o) != 1)
    throw InputError(
        "exactly one input source required: an edge-list path, --fixture, or "
        "--array");
  Loaded load;
  if (!o.fixture.empty()) {
    load.graph = corpus::get_fixture(o.fixture).graph;
  } else if (!o.edge_path.empty()) {
    std::ifstream in(o.edge_path);
    if (!in) throw InputError("cannot open input file: " + o.edge_path);
    load.graph = parse_edge_list(in);
  } else {
    if (need_graph)
      throw InputError(
          "this command needs a graph input (edge-list path or --fixture)");
    std::ifstream in(o.array_path);
    if (!in) throw InputError("cannot open array file: " + o.array_path);
    load.arr = IntersectionArray::from_json(json::parse(in));
    load.spec = analyze_spectra(load.arr, o.tol);
    return load;
  }
  load.num = check_distance_regular(*load.graph);
  load.arr = IntersectionArray::from_intersection_numbers(*load.num);
  load.dm = distance_matrices(*load.graph);
  load.spec = analyze_spectra(load.arr, o.tol);
  return load;
}

std::vector<int> selected_idempotents(const Options& o, int d) {
  if (o.idempotent == -1) {
    std::vector<int> all(d);
    for (int j = 1; j <= d; ++j) all[j - 1] = j;
    return all;
  }
  if (o.idempotent < 1 || o.idempotent > d)
    throw InputError("--idempotent must lie in 1.." + std::to_string(d));
  return {o.idempotent};
}

json real_vector(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(round_sig(x));
  return a;
}

json tags_json(const Graph& g, const DistanceMatrices& dm) {
  const bool bip = is_bipartite(g);
  const bool anti = is_antipodal(dm);
  return json{
      {"bipartite", bip}, {"antipodal", anti}, {"primitive", !bip && !anti}};
}

bool krein_equal(const KreinTensor& a, const KreinTensor& b, double tol) {
  if (a.d != b.d) return false;
  const double bound = tol * std::max({1.0, a.scale, b.scale});
  for (int h = 0; h <= a.d; ++h)
    for (int i = 0; i <= a.d; ++i)
      for (int j = 0; j <= a.d; ++j) {
        if (std::abs(a.q(h, i, j) - b.q(h, i, j)) > bound) return false;
        if (a.zero(h, i, j) != b.zero(h, i, j)) return false;
      }
  return true;
}

// Classification reports plus the eigenvalue recurrence residual for
// q-polynomial orderings.
json reports_json(const SpectralData& spec, const KreinTensor& kt,
                  const std::vector<int>& js, double tol, bool* all_consistent,
                  bool* recurrence_ok) {
  json out = json::array();
  const double theta_bound = tol * std::max(1.0, max_abs(spec.theta));
  for (int j : js) {
    const auto rep = classify_idempotent(spec, kt, j, tol);
    json rj = rep.to_json();
    if (rep.q_polynomial) {
      const double res = eigenvalue_recurrence_check(spec, rep);
      rj["recurrence_residual"] = round_sig(res);
      if (recurrence_ok && res > theta_bound) *recurrence_ok = false;
    }
    if (all_consistent && !rep.theorem_consistent) *all_consistent = false;
    out.push_back(std::move(rj));
  }
  return out;
}

// Residual summary of the base-vertex identities over every vertex of the
// graph; every quantity is compared in the form residual <= bound.
struct LemmaSummary {
  double context = 0;     // projector identities of the context
  double hadamard = 0;    // entrywise action residual / max(1, |v|)
  double triple = 0;      // triple product residual / (|E_h x| max(1,|q|))
  double span = 0;        // collinearity residual (already relative)
  double commutator = 0;  // relative commutator residual
  long long vanishing_violations = 0;
  int commutator_checks = 0;
  bool pass(double tol) const {
    return context <= tol && hadamard <= tol && triple <= tol && span <= tol &&
           commutator <= 1e-6 && vanishing_violations == 0;
  }
  json to_json(double tol) const {
    return json{{"context_max", round_sig(context)},
                {"hadamard_max", round_sig(hadamard)},
                {"triple_max", round_sig(triple)},
                {"span_max", round_sig(span)},
                {"commutator_max", round_sig(commutator)},
                {"commutator_checks", commutator_checks},
                {"vanishing_violations", vanishing_violations},
                {"bounds",
                 json{{"context", tol},
                      {"hadamard", tol},
                      {"triple", tol},
                      {"span", tol},
                      {"commutator", 1e-6}}}};
  }
};

LemmaSummary lemma_suite(const Loaded& load, const KreinTensor& kt,
                         double tol, int vectors_per_idempotent) {
  const auto& dm = *load.dm;
  const auto& spec = load.spec;
  const auto E = all_idempotents(dm, spec);
  const int d = spec.d();

  std::vector<std::optional<TTRWitness>> witnesses(d + 1);
  for (int j = 1; j <= d; ++j)
    witnesses[j] = ttr_witness(dual_eigenvalues(spec, j), tol);

  LemmaSummary sum;
  for (int x = 0; x < dm.n; ++x) {
    const auto ctx = build_context(dm, spec, x);
    sum.context = std::max(sum.context, context_projector_residual(ctx, E));

    Lcg rng(0x5eedull * 1000003ull + static_cast<std::uint64_t>(x));
    for (int j = 0; j <= d; ++j) {
      for (int t = 0; t < vectors_per_idempotent; ++t) {
        const Eigen::VectorXd v =
            t == 0 ? Eigen::VectorXd::Ones(dm.n) : rng.vector(dm.n);
        const double res = hadamard_action_residual(ctx, E[j], j, v) /
                           std::max(1.0, max_abs(v));
        sum.hadamard = std::max(sum.hadamard, res);
      }
    }

    for (int h = 0; h <= d; ++h) {
      const double ehx = max_abs(Eigen::VectorXd(E[h].col(x)));
      for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
          const double res = triple_product_residual(ctx, E, kt, h, i, j);
          sum.triple =
              std::max(sum.triple,
                       res / (ehx * std::max(1.0, std::abs(kt.q(h, i, j)))));
          if (!kt.is_zero(h, i, j))
            sum.span = std::max(
                sum.span, span_collinearity_residual(ctx, E, h, i, j));
        }
    }

    sum.vanishing_violations += static_cast<long long>(
        vanishing_checks(ctx, dm, *load.num, E, kt, tol).size());

    for (int j = 1; j <= d; ++j)
      if (witnesses[j]) {
        sum.commutator = std::max(
            sum.commutator,
            commutator_relative_residual(ctx, dm, j, witnesses[j]));
        ++sum.commutator_checks;
      }
  }
  return sum;
}

// Plain-text rendering of the JSON summaries: nested "key: value" lines.
void render_text(const json& j, std::ostream& out, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() &&
                                (value[0].is_object() || value[0].is_array()))) {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      } else {
        out << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object() || item.is_array()) {
        out << pad << "-\n";
        render_text(item, out, indent + 2);
      } else {
        out << pad << "- " << item.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

int emit(const json& j, const Options& o, std::ostream& out, int code) {
  if (o.format == "text")
    render_text(j, out);
  else
    out << j.dump(2) << "\n";
  return code;
}

int cmd_ingest(const Options& o, std::ostream& out) {
  const Loaded load = load_input(o, false);
  json j{{"array", load.arr.to_json()},
         {"d", load.arr.d()},
         {"n", load.arr.vertex_count()},
         {"valencies", load.arr.valencies()}};
  if (load.graph) j["tags"] = tags_json(*load.graph, *load.dm);
  return emit(j, o, out, 0);
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Loaded load = load_input(o, false);
  const auto& spec = load.spec;
  const KreinTensor kt = krein_from_spectra(spec, o.tol);

  json duals = json::array();
  for (int j = 1; j <= spec.d(); ++j)
    duals.push_back(json{
        {"j", j},
        {"theta_star", real_vector(dual_eigenvalues(spec, j).theta_star)}});

  json j{{"array", load.arr.to_json()},
         {"d", spec.d()},
         {"n", spec.n},
         {"eigenvalues", real_vector(spec.theta)},
         {"multiplicities", real_vector(spec.m)},
         {"valencies", load.arr.valencies()},
         {"dual_eigenvalues", std::move(duals)},
         {"krein", kt.to_json()}};

  int code = 0;
  if (load.graph) {
    const KreinTensor oracle = krein_oracle(*load.dm, spec, o.tol);
    const bool consistent = krein_equal(kt, oracle, o.tol);
    j["krein_oracle_consistent"] = consistent;
    j["tags"] = tags_json(*load.graph, *load.dm);
    if (!consistent) code = 1;
  }
  return emit(j, o, out, code);
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Loaded load = load_input(o, false);
  const KreinTensor kt = krein_from_spectra(load.spec, o.tol);
  bool consistent = true;
  json reports = reports_json(load.spec, kt,
                              selected_idempotents(o, load.spec.d()), o.tol,
                              &consistent, nullptr);
  json j{{"d", load.spec.d()},
         {"n", load.spec.n},
         {"reports", std::move(reports)},
         {"theorem_consistent_all", consistent}};
  return emit(j, o, out, consistent ? 0 : 1);
}

int cmd_verify_theorem(const Options& o, std::ostream& out) {
  const Loaded load = load_input(o, false);
  const KreinTensor kt = krein_from_spectra(load.spec, o.tol);
  bool consistent = true;
  bool recurrence_ok = true;
  std::vector<int> all_j(load.spec.d());
  for (int j = 1; j <= load.spec.d(); ++j) all_j[j - 1] = j;
  json reports =
      reports_json(load.spec, kt, all_j, o.tol, &consistent, &recurrence_ok);

  json j{{"d", load.spec.d()},
         {"n", load.spec.n},
         {"reports", std::move(reports)},
         {"theorem_consistent_all", consistent},
         {"recurrence_ok", recurrence_ok}};
  bool pass = consistent && recurrence_ok;
  if (load.graph) {
    const bool degeneracy_ok = dual_degeneracy_consistent(
        load.spec, is_bipartite(*load.graph), is_antipodal(*load.dm), o.tol);
    j["degeneracy_ok"] = degeneracy_ok;
    pass = pass && degeneracy_ok;
  }
  j["pass"] = pass;
  return emit(j, o, out, pass ? 0 : 1);
}

int cmd_check_lemmas(const Options& o, std::ostream& out) {
  const Loaded load = load_input(o, true);
  const KreinTensor kt = krein_from_spectra(load.spec, o.tol);
  const LemmaSummary sum = lemma_suite(load, kt, o.tol, 3);
  json j = sum.to_json(o.tol);
  j["n"] = load.spec.n;
  j["d"] = load.spec.d();
  const bool pass = sum.pass(o.tol);
  j["pass"] = pass;
  return emit(j, o, out, pass ? 0 : 1);
}

int cmd_diagram(const Options& o, std::ostream& out) {
  const Loaded load = load_input(o, false);
  const KreinTensor kt = krein_from_spectra(load.spec, o.tol);
  for (int j : selected_idempotents(o, load.spec.d()))
    out << representation_diagram(kt, j).to_dot();
  return 0;
}

int cmd_corpus_run(const Options& o, std::ostream& out) {
  json fixtures = json::array();
  bool pass_all = true;
  for (const auto& name : corpus::fixture_names()) {
    const corpus::Fixture fixture = corpus::get_fixture(name);
    Loaded load;
    load.graph = fixture.graph;
    load.num = check_distance_regular(fixture.graph);
    load.arr = IntersectionArray::from_intersection_numbers(*load.num);
    load.dm = distance_matrices(fixture.graph);
    load.spec = analyze_spectra(load.arr, o.tol);

    const KreinTensor kt = krein_from_spectra(load.spec, o.tol);
    const KreinTensor oracle = krein_oracle(*load.dm, load.spec, o.tol);
    const bool oracle_consistent = krein_equal(kt, oracle, o.tol);
    const bool degeneracy_ok = dual_degeneracy_consistent(
        load.spec, fixture.bipartite, fixture.antipodal, o.tol);

    bool consistent = true;
    bool recurrence_ok = true;
    std::vector<int> all_j(load.spec.d());
    for (int j = 1; j <= load.spec.d(); ++j) all_j[j - 1] = j;
    json reports = reports_json(load.spec, kt, all_j, o.tol, &consistent,
                                &recurrence_ok);

    const LemmaSummary sum = lemma_suite(load, kt, o.tol, 2);

    const bool pass = oracle_consistent && degeneracy_ok && consistent &&
                      recurrence_ok && sum.pass(o.tol);
    pass_all = pass_all && pass;
    fixtures.push_back(json{{"name", name},
                            {"n", load.spec.n},
                            {"d", load.spec.d()},
                            {"array", load.arr.to_json()},
                            {"tags",
                             json{{"bipartite", fixture.bipartite},
                                  {"antipodal", fixture.antipodal},
                                  {"primitive", fixture.primitive}}},
                            {"krein_oracle_consistent", oracle_consistent},
                            {"degeneracy_ok", degeneracy_ok},
                            {"theorem_consistent_all", consistent},
                            {"recurrence_ok", recurrence_ok},
                            {"reports", std::move(reports)},
                            {"lemmas", sum.to_json(o.tol)},
                            {"pass", pass}});
  }
  json j{{"fixtures", std::move(fixtures)}, {"pass", pass_all}};
  return emit(j, o, out, pass_all ? 0 : 1);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "spectral and q-polynomial structure of distance-regular graphs"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&o](CLI::App* cmd, bool with_idempotent) {
    cmd->add_option("input", o.edge_path, "edge-list file");
    cmd->add_option("--fixture", o.fixture, "corpus fixture name");
    cmd->add_option("--array", o.array_path, "intersection-array JSON file");
    cmd->add_option("--tol", o.tol, "comparison tolerance");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    if (with_idempotent)
      cmd->add_option("--idempotent", o.idempotent,
                      "idempotent index (default: all)");
  };

  CLI::App* ingest = app.add_subcommand(
      "ingest", "validate a graph and print its intersection array");
  add_common(ingest, false);
  CLI::App* analyze = app.add_subcommand(
      "analyze", "eigenvalues, multiplicities, dual eigenvalues, Krein "
                 "parameters");
  add_common(analyze, false);
  CLI::App* classify = app.add_subcommand(
      "classify", "three-condition classification of each idempotent");
  add_common(classify, true);
  CLI::App* verify = app.add_subcommand(
      "verify-theorem",
      "assert the characterization agrees with the diagram for every "
      "idempotent");
  add_common(verify, false);
  CLI::App* lemmas = app.add_subcommand(
      "check-lemmas", "base-vertex identity suite over every vertex");
  add_common(lemmas, false);
  CLI::App* diagram = app.add_subcommand(
      "diagram", "DOT export of the representation diagram");
  add_common(diagram, true);
  CLI::App* corpus_cmd =
      app.add_subcommand("corpus", "operations on the bundled fixtures");
  corpus_cmd->require_subcommand(1);
  CLI::App* corpus_run = corpus_cmd->add_subcommand(
      "run", "full validation suite over every fixture");
  corpus_run->add_option("--tol", o.tol, "comparison tolerance");
  corpus_run->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(ingest)) return cmd_ingest(o, out);
    if (app.got_subcommand(analyze)) return cmd_analyze(o, out);
    if (app.got_subcommand(classify)) return cmd_classify(o, out);
    if (app.got_subcommand(verify)) return cmd_verify_theorem(o, out);
    if (app.got_subcommand(lemmas)) return cmd_check_lemmas(o, out);
    if (app.got_subcommand(diagram)) return cmd_diagram(o, out);
    if (app.got_subcommand(corpus_cmd)) {
      if (corpus_cmd->got_subcommand(corpus_run)) return cmd_corpus_run(o, out);
    }
    err << "usage error: no subcommand selected\n";
    return 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    err << "alarm: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "alarm: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace drg::cli
