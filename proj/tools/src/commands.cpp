#include <cmath>
#include <fstream>
#include <optional>
#include <string>

#include "stabur/errors.hpp"
#include "stabur/graphstate.hpp"
#include "stabur/io.hpp"
#include "stabur/oracle.hpp"
#include "stabur/stabgroup.hpp"
#include "stabur/urelations.hpp"
#include "stabur_cli/cli.hpp"

namespace stabur::cli {

namespace {

// Enumeration cross-check limit for the intersection path.
constexpr int kEnumerationLimit = 20;

struct Input {
  std::string path;
  InputKind kind = InputKind::kGroup;
  std::optional<StabilizerGroup> group;
  std::optional<Graph> graph;

  int num_qubits() const { return group ? group->num_qubits() : graph->num_vertices(); }
  StabilizerGroup as_group() const { return group ? *group : graph_group(*graph); }
};

Input load(const std::string& path) {
  Input in;
  in.path = path;
  const std::string text = read_text_file(path);
  in.kind = detect_input_kind(text);
  try {
    if (in.kind == InputKind::kGraph) {
      in.graph = parse_graph(text);
    } else {
      in.group = parse_group(text);
    }
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.position());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return in;
}

std::pair<Input, Input> load_pair(const RunConfig& config) {
  if (config.inputs.size() != 2) throw UsageError(config.command + " expects two input files");
  Input a = load(config.inputs[0]);
  Input b = load(config.inputs[1]);
  if (a.kind != b.kind) {
    throw ValidationError("cannot compare a graph file with a generator-list file");
  }
  if (a.num_qubits() != b.num_qubits()) {
    throw DimensionError("inputs act on " + std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
  }
  return {std::move(a), std::move(b)};
}

Json dyadic_json(const Dyadic& d) { return Json{{"num", d.num()}, {"log2_den", d.log2_den()}}; }

struct Checks {
  Json list = Json::array();
  bool ok = true;

  void add(const std::string& name, bool pass, Json detail = nullptr) {
    Json entry{{"name", name}, {"pass", pass}};
    if (!detail.is_null()) entry["detail"] = std::move(detail);
    list.push_back(std::move(entry));
    ok = ok && pass;
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

}  // namespace

EntropySpec entropy_spec(const RunConfig& config) {
  if (config.entropy == "tsallis" && !config.q_given) {
    throw UsageError("--q is required with --entropy tsallis");
  }
  if (config.entropy != "tsallis" && config.q_given) {
    throw UsageError("--q is only meaningful with --entropy tsallis");
  }
  return parse_entropy_spec(config.entropy, config.q);
}

double presented(double value) { return std::stod(format_real(value)); }

Json cmd_bound(const RunConfig& config) {
  const auto [a, b] = load_pair(config);
  const int n = a.num_qubits();
  const StabilizerGroup s = a.as_group();
  const StabilizerGroup t = b.as_group();
  const IntersectionBasis basis = intersection_basis(s, t);
  const OverlapReport overlap = overlap_squared(s, t);
  const double bound = mu_bound_stabilizer(s, t);
  Checks checks;

  Json report;
  Json r_exact;
  report["command"] = "bound";
  double r = std::exp2(-(n - basis.c) / 2.0);
  if (a.kind == InputKind::kGraph) {
    report["method"] = "recurrence";
    const Graph sum = graph_sum(*a.graph, *b.graph);
    const AmplitudeTable table = amplitude_transform(sum);
    AmplitudeRecurrence recurrence(sum);
    bool same = true;
    for (std::uint64_t y = 0; y < table.values.size(); ++y) same = same && recurrence(y) == table.values[y];
    checks.add("recurrence_vs_transform", same);
    const double graph_bound = -std::log2(table.r_max.to_double());
    checks.add("graph_sum_vs_intersection", graph_bound == bound,
               Json{{"graph", presented(graph_bound)}, {"intersection", presented(bound)}});
    r = table.r_max.to_double();
    r_exact = dyadic_json(table.r_max);
  } else {
    report["method"] = "intersection";
  }
  if (n <= kEnumerationLimit) {
    const Intersection slow = intersect_by_enumeration(s, t);
    checks.add("intersection_vs_enumeration",
               slow.c == basis.c && slow.p == overlap.p && slow.q == overlap.q,
               Json{{"c", slow.c}, {"p", slow.p}, {"q", slow.q}});
  }
  if (n <= config.max_n) {
    const auto da = stabilizer_basis_dense(s);
    const auto db = stabilizer_basis_dense(t);
    const double dense = mu_bound_general(da, db);
    checks.add("oracle", std::abs(dense - bound) <= 1e-9, Json{{"oracle_bound_bits", presented(dense)}});
  }

  report["n"] = n;
  report["bound_bits"] = presented(bound);
  report["r"] = presented(r);
  if (!r_exact.is_null()) report["r_exact"] = r_exact;
  report["c"] = basis.c;
  report["p"] = overlap.p;
  report["q"] = overlap.q;
  report["overlap_squared"] = dyadic_json(overlap.overlap_squared);
  report["agreement"] = checks.ok;
  report["checks"] = checks.list;
  report["ok"] = checks.ok;
  return report;
}

Json cmd_tightness(const RunConfig& config) {
  if (entropy_spec(config).kind != EntropyKind::kShannon) {
    throw UsageError("tightness compares against the Maassen-Uffink bound, which is stated for "
                     "the Shannon entropy");
  }
  const auto [a, b] = load_pair(config);
  const StabilizerGroup s = a.as_group();
  const StabilizerGroup t = b.as_group();
  if (s.num_qubits() > config.max_n) {
    throw ResourceError("tightness needs the dense oracle; n = " + std::to_string(s.num_qubits()) +
                        " exceeds --max-n " + std::to_string(config.max_n));
  }
  const URReport ur = check_tightness(s, t, config.max_n);
  Checks checks;
  checks.add("tight", ur.tight);
  checks.add("all_basis_states_attain", ur.all_basis_states_attain);
  if (a.kind == InputKind::kGraph) {
    checks.add("graph_bound_matches", mu_bound_graphs(*a.graph, *b.graph) == ur.bound);
  }

  Json values = Json::array();
  for (const auto& v : ur.basis_values) {
    values.push_back(Json{{"basis", std::string(1, v.basis)},
                          {"label", bit_string(v.label.bits, s.num_qubits())},
                          {"value", presented(v.value)}});
  }
  Json report;
  report["command"] = "tightness";
  report["n"] = s.num_qubits();
  report["entropy"] = "shannon";
  report["bound"] = presented(ur.bound);
  report["achieved"] = presented(ur.achieved);
  report["tight"] = ur.tight;
  report["witness"] = ur.witness;
  report["all_basis_states_attain"] = ur.all_basis_states_attain;
  report["basis_values"] = std::move(values);
  report["agreement"] = checks.ok;
  report["checks"] = checks.list;
  report["ok"] = checks.ok;
  return report;
}

Json cmd_matching(const RunConfig& config) {
  const EntropySpec spec = entropy_spec(config);
  const auto [a, b] = load_pair(config);
  const StabilizerGroup s = a.as_group();
  const StabilizerGroup t = b.as_group();
  const SymmetricDifference m = symmetric_difference(s, t);
  const MatchingResult matching = perfect_matching(m);

  bool all_anticommute = true;
  std::string csv = "k,l,s_element,t_element\n";
  for (const auto& [k, l] : matching.pairs) {
    all_anticommute = all_anticommute && !commutes(m.observables[k], m.observables[l]);
    csv += std::to_string(k) + "," + std::to_string(l) + "," + m.observables[k].str() + "," +
           m.observables[l].str() + "\n";
  }

  GroupUROptions options;
  options.seed = config.seed;
  options.max_qubits = config.max_n;
  options.random_states = s.num_qubits() <= config.max_n ? (config.samples >= 0 ? config.samples : 1000) : 0;
  const URReport ur = group_ur_verify(s, t, spec, options);

  Checks checks;
  checks.add("pairs_anticommute", all_anticommute);
  checks.add("basis_states_attain_bound", ur.all_basis_states_attain);
  if (ur.random_samples > 0) {
    checks.add("random_states_respect_bound", ur.random_min >= ur.bound - kTightnessTolerance,
               Json{{"random_min", presented(ur.random_min)}});
  }
  if (!config.out.empty()) write_file(config.out, csv);

  Json report;
  report["command"] = "matching";
  report["n"] = s.num_qubits();
  report["L"] = m.size();
  report["pairs"] = matching.pairs.size();
  report["entropy"] = spec.describe();
  report["bound"] = presented(ur.bound);
  report["achieved"] = presented(ur.achieved);
  report["tight"] = ur.tight;
  report["witness"] = ur.witness;
  report["random_samples"] = ur.random_samples;
  report["random_min"] = ur.random_samples > 0 ? Json(presented(ur.random_min)) : Json(nullptr);
  if (!config.out.empty()) report["pairs_csv"] = config.out;
  report["agreement"] = checks.ok;
  report["checks"] = checks.list;
  report["ok"] = checks.ok;
  return report;
}

Json cmd_boundary(const RunConfig& config, std::string& csv) {
  const EntropySpec spec = entropy_spec(config);
  const int samples = config.samples >= 0 ? config.samples : 101;
  const auto arc = boundary_curve(spec, samples);
  const auto full = expand_quadrants(arc);
  csv = curve_csv(full, spec);
  if (!config.out.empty()) write_file(config.out, csv);
  Json report;
  report["command"] = "boundary";
  report["entropy"] = spec.describe();
  report["samples"] = samples;
  report["points"] = full.size();
  if (!config.out.empty()) report["out"] = config.out;
  report["ok"] = true;
  return report;
}

}  // namespace stabur::cli
