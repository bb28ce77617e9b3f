#include "slee/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "slee/families.hpp"
#include "slee/graph.hpp"
#include "slee/search.hpp"
#include "slee/spectra.hpp"
#include "slee/walks.hpp"

namespace slee {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct InputOptions {
  std::vector<std::string> inline_graphs;
  std::string input_path;
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
  cmd->add_option("graphs", opts.inline_graphs, "inline graph6 strings");
  cmd->add_option("-i,--input", opts.input_path,
                  "file with one graph6 string per line");
}

// One graph per line; blank lines are skipped. Throws Errc::parse_error
// with the offending line number in the message.
std::vector<Graph> load_graphs(const InputOptions& opts, std::istream& in) {
  if (!opts.inline_graphs.empty() && !opts.input_path.empty())
    throw Error(Errc::invalid_parameter,
                "give graphs inline or via --input, not both");
  std::vector<std::string> lines;
  if (!opts.inline_graphs.empty()) {
    lines = opts.inline_graphs;
  } else {
    std::ifstream file;
    std::istream* src = &in;
    if (!opts.input_path.empty()) {
      file.open(opts.input_path);
      if (!file)
        throw Error(Errc::invalid_parameter,
                    "cannot open input file: " + opts.input_path);
      src = &file;
    }
    std::string line;
    while (std::getline(*src, line)) lines.push_back(line);
  }

  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string text = lines[i];
    while (!text.empty() && (text.back() == '\r' || text.back() == '\n' ||
                             text.back() == ' ' || text.back() == '\t'))
      text.pop_back();
    if (text.empty()) continue;
    try {
      graphs.push_back(parse_graph6(text));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return graphs;
}

std::string csv_escape_join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ';';
    out += parts[i];
  }
  return out;
}

int cmd_compute(const InputOptions& input, const std::string& format,
                double tol, std::istream& in, std::ostream& out) {
  const std::vector<Graph> graphs = load_graphs(input, in);
  if (graphs.empty()) return kExitOk;

  struct Row {
    int n, m;
    std::string ee, lee, slee, series;
    std::vector<std::string> spectrum;
  };
  std::vector<Row> rows;
  for (const Graph& g : graphs) {
    const EstradaIndices idx = estrada_indices(g);
    Row row;
    row.n = g.order();
    row.m = g.size();
    row.ee = format_real(idx.ee);
    row.lee = format_real(idx.lee);
    row.slee = format_real(idx.slee);
    row.series = format_real(slee_series(g, tol));
    const Spectrum q =
        eigenvalues(build_matrix(g, MatrixKind::signless_laplacian));
    for (double v : q.values) row.spectrum.push_back(format_real(v));
    rows.push_back(std::move(row));
  }

  if (format == "csv") {
    out << "n,m,EE,LEE,SLEE,slee_series,q_spectrum\n";
    for (const Row& row : rows)
      out << row.n << ',' << row.m << ',' << row.ee << ',' << row.lee << ','
          << row.slee << ',' << row.series << ','
          << csv_escape_join(row.spectrum) << '\n';
  } else {
    ordered_json arr = ordered_json::array();
    for (const Row& row : rows) {
      ordered_json j;
      j["n"] = row.n;
      j["m"] = row.m;
      j["EE"] = row.ee;
      j["LEE"] = row.lee;
      j["SLEE"] = row.slee;
      j["slee_series"] = row.series;
      j["q_spectrum"] = row.spectrum;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_moments(const InputOptions& input, int k_max, std::istream& in,
                std::ostream& out) {
  if (k_max < 0)
    throw Error(Errc::invalid_parameter, "--kmax must be >= 0");
  const std::vector<Graph> graphs = load_graphs(input, in);
  if (graphs.empty()) return kExitOk;
  ordered_json arr = ordered_json::array();
  for (const Graph& g : graphs) {
    const MomentTable table = moment_table(g, k_max);
    ordered_json j;
    j["n"] = g.order();
    j["m"] = g.size();
    j["k_max"] = k_max;
    std::vector<std::string> traces;
    for (const BigInt& t : table.traces) traces.push_back(t.str());
    j["traces"] = traces;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
  return kExitOk;
}

int cmd_walks(const InputOptions& input, int k_max, std::istream& in,
              std::ostream& out) {
  if (k_max < 0)
    throw Error(Errc::invalid_parameter, "--kmax must be >= 0");
  const std::vector<Graph> graphs = load_graphs(input, in);
  if (graphs.empty()) return kExitOk;
  ordered_json arr = ordered_json::array();
  for (const Graph& g : graphs) {
    const MomentTable table = moment_table(g, k_max);
    ordered_json j;
    j["n"] = g.order();
    j["k_max"] = k_max;
    ordered_json tables = ordered_json::array();
    for (int k = 0; k <= k_max; ++k) {
      const IntMatrix& power =
          table.power_entries[static_cast<std::size_t>(k)];
      ordered_json entry;
      entry["k"] = k;
      entry["trace"] = table.traces[static_cast<std::size_t>(k)].str();
      ordered_json matrix = ordered_json::array();
      for (int x = 0; x < g.order(); ++x) {
        std::vector<std::string> row;
        for (int y = 0; y < g.order(); ++y)
          row.push_back(power.at(x, y).str());
        matrix.push_back(row);
      }
      entry["matrix"] = std::move(matrix);
      tables.push_back(std::move(entry));
    }
    j["counts"] = std::move(tables);
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
  return kExitOk;
}

ClassFilter parse_filter(const std::string& text) {
  if (text == "all" || text == "all_connected")
    return ClassFilter::all_connected();
  const auto eq = text.find('=');
  if (eq != std::string::npos) {
    const std::string head = text.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(text.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(Errc::invalid_parameter,
                  "bad filter parameter in '" + text + "'");
    }
    if (head == "diameter") return ClassFilter::diameter(value);
    if (head == "cut" || head == "cut_vertices")
      return ClassFilter::cut_vertices(value);
  }
  throw Error(Errc::invalid_parameter,
              "unknown filter '" + text +
                  "' (expected all, diameter=<d> or cut=<r>)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"signless Laplacian Estrada index toolkit"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand(
      "compute", "EE, LEE, SLEE and the Q-spectrum for graph6 input");
  InputOptions compute_input;
  add_input_options(compute, compute_input);
  std::string format = "json";
  compute->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  double series_tol = 1e-10;
  compute->add_option("--tol", series_tol, "series truncation tolerance")
      ->check(CLI::PositiveNumber);

  // moments
  auto* moments =
      app.add_subcommand("moments", "exact spectral moments T_0..T_kmax");
  InputOptions moments_input;
  add_input_options(moments, moments_input);
  int moments_kmax = 10;
  moments->add_option("--kmax", moments_kmax, "largest moment index");

  // walks
  auto* walks = app.add_subcommand(
      "walks", "exact semi-edge walk count matrices Q^0..Q^kmax");
  InputOptions walks_input;
  add_input_options(walks, walks_input);
  int walks_kmax = 6;
  walks->add_option("--kmax", walks_kmax, "largest walk length");

  // family
  auto* family = app.add_subcommand(
      "family", "emit family members as graph6 lines");
  std::string family_kind;
  family->add_option("kind", family_kind, "h | h1 | g | path | complete | complete_minus_edge")
      ->required()
      ->check(CLI::IsMember(
          {"h", "h1", "g", "path", "complete", "complete_minus_edge"}));
  int family_n = 0, family_d = 0, family_j = 0, family_r = 0;
  family->add_option("--n", family_n, "order")->required();
  family->add_option("--d", family_d, "diameter (h, h1)");
  family->add_option("--j", family_j, "window spread (h)");
  family->add_option("--r", family_r, "cut vertices (g)");

  // sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "exhaustive labeled SLEE maximization under a filter");
  int sweep_n = 0;
  std::string sweep_filter = "all";
  std::string sweep_predicted;
  int sweep_workers = 0;
  sweep_cmd->add_option("--n", sweep_n, "order (<= 7)")->required();
  sweep_cmd->add_option("--filter", sweep_filter,
                        "all | diameter=<d> | cut=<r>");
  sweep_cmd->add_option("--predicted", sweep_predicted,
                        "graph6 of the expected maximizer");
  sweep_cmd->add_option("--workers", sweep_workers,
                        "parallel workers (0 = hardware)");

  // verify
  auto* verify = app.add_subcommand("verify", "run a checker; exit 0 iff it passes");
  verify->require_subcommand(1);

  auto* v_diam = verify->add_subcommand(
      "theorem-diameter", "diameter-class maximizer matches the H family");
  int vd_n = 0, vd_d = 0, vd_workers = 0;
  v_diam->add_option("--n", vd_n)->required();
  v_diam->add_option("--d", vd_d)->required();
  v_diam->add_option("--workers", vd_workers);

  auto* v_cut = verify->add_subcommand(
      "theorem-cut", "cut-vertex-class maximizer matches the G family");
  int vc_n = 0, vc_r = 0, vc_workers = 0;
  v_cut->add_option("--n", vc_n)->required();
  v_cut->add_option("--r", vc_r)->required();
  v_cut->add_option("--workers", vc_workers);

  auto* v_add = verify->add_subcommand(
      "lemma-edge-add", "SLEE strictly grows under edge addition");
  int va_n = 8, va_samples = 500;
  unsigned va_seed = 20240901;
  v_add->add_option("--n", va_n, "largest order sampled");
  v_add->add_option("--samples", va_samples);
  v_add->add_option("--seed", va_seed);

  auto* v_shift = verify->add_subcommand(
      "lemma-shift", "edge shifting raises SLEE when dominance holds");
  InputOptions shift_input;
  add_input_options(v_shift, shift_input);
  int vs_v = 0, vs_u = 0, vs_kmax = -1;
  std::vector<int> vs_ws;
  v_shift->add_option("--v", vs_v)->required();
  v_shift->add_option("--u", vs_u)->required();
  v_shift->add_option("--ws", vs_ws, "shared endpoints w_i")->required();
  v_shift->add_option("--kmax", vs_kmax, "dominance depth (-1 = 2n^2)");

  auto* v_reloc = verify->add_subcommand(
      "lemma-relocate", "pendent-path relocation battery");

  auto* v_descent = verify->add_subcommand(
      "h-descent", "H family members descend toward the extremal member");
  int vh_n = 0, vh_d = 0, vh_j = 0;
  v_descent->add_option("--n", vh_n)->required();
  v_descent->add_option("--d", vh_d)->required();
  v_descent->add_option("--j", vh_j)->required();

  auto* v_nb = verify->add_subcommand(
      "neighbor-bound", "off-path vertices have <= 3 diametral-path neighbors");
  int vn_n = 0;
  v_nb->add_option("--n", vn_n, "check all connected graphs up to this order")
      ->required();

  auto* v_mw = verify->add_subcommand(
      "moment-walk", "enumerated walk counts equal traces/entries of Q^k");
  int vm_n = 5, vm_kmax = 6;
  v_mw->add_option("--n", vm_n, "largest order");
  v_mw->add_option("--kmax", vm_kmax, "largest walk length");

  try {
    std::vector<const char*> argv;
    argv.push_back("slee");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (compute->parsed())
      return cmd_compute(compute_input, format, series_tol, in, out);
    if (moments->parsed())
      return cmd_moments(moments_input, moments_kmax, in, out);
    if (walks->parsed()) return cmd_walks(walks_input, walks_kmax, in, out);

    if (family->parsed()) {
      std::vector<Graph> members;
      if (family_kind == "h") {
        members = enumerate_h_family(family_n, family_d, family_j);
      } else if (family_kind == "h1") {
        members.push_back(h_extremal(family_n, family_d));
      } else if (family_kind == "g") {
        members.push_back(g_extremal(family_n, family_r));
      } else if (family_kind == "path") {
        members.push_back(path(family_n));
      } else if (family_kind == "complete") {
        members.push_back(complete(family_n));
      } else {
        members.push_back(complete_minus_edge(family_n));
      }
      for (const Graph& g : members) out << write_graph6(g) << '\n';
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      std::optional<Graph> predicted;
      if (!sweep_predicted.empty()) predicted = parse_graph6(sweep_predicted);
      const SearchReport report =
          sweep(sweep_n, parse_filter(sweep_filter), predicted, sweep_workers);
      out << report.to_json().dump(2) << '\n';
      if (predicted && !(report.matched_prediction && *report.matched_prediction))
        return kExitVerifyFailed;
      return kExitOk;
    }

    if (verify->parsed()) {
      if (v_diam->parsed()) {
        const SearchReport report =
            verify_theorem_diameter(vd_n, vd_d, vd_workers);
        out << report.to_json().dump(2) << '\n';
        const bool ok = report.iso_classes == 1 &&
                        report.matched_prediction && *report.matched_prediction;
        return ok ? kExitOk : kExitVerifyFailed;
      }
      if (v_cut->parsed()) {
        const SearchReport report = verify_theorem_cut(vc_n, vc_r, vc_workers);
        out << report.to_json().dump(2) << '\n';
        const bool ok = report.iso_classes == 1 &&
                        report.matched_prediction && *report.matched_prediction;
        return ok ? kExitOk : kExitVerifyFailed;
      }
      if (v_add->parsed()) {
        const EdgeAdditionReport report =
            verify_edge_addition(va_n, va_samples, va_seed);
        out << report.to_json().dump(2) << '\n';
        return report.passed ? kExitOk : kExitVerifyFailed;
      }
      if (v_shift->parsed()) {
        const std::vector<Graph> graphs = load_graphs(shift_input, in);
        if (graphs.size() != 1)
          throw Error(Errc::invalid_parameter,
                      "lemma-shift needs exactly one input graph");
        const EdgeShiftReport report =
            verify_edge_shift(graphs[0], vs_v, vs_u, vs_ws, vs_kmax);
        out << report.to_json().dump(2) << '\n';
        return report.passed ? kExitOk : kExitVerifyFailed;
      }
      if (v_reloc->parsed()) {
        const auto reports = relocation_battery();
        ordered_json arr = ordered_json::array();
        bool all_ok = true;
        for (const auto& report : reports) {
          arr.push_back(report.to_json());
          all_ok = all_ok && report.passed &&
                   report.cut_before == report.cut_after;
        }
        out << arr.dump(2) << '\n';
        return all_ok ? kExitOk : kExitVerifyFailed;
      }
      if (v_descent->parsed()) {
        const DescentReport report = verify_h_descent(vh_n, vh_d, vh_j);
        out << report.to_json().dump(2) << '\n';
        return report.passed ? kExitOk : kExitVerifyFailed;
      }
      if (v_nb->parsed()) {
        const NeighborBoundSweepReport report = verify_neighbor_bound_all(vn_n);
        out << report.to_json().dump(2) << '\n';
        return report.passed ? kExitOk : kExitVerifyFailed;
      }
      if (v_mw->parsed()) {
        const MomentWalkReport report = verify_moment_walk(vm_n, vm_kmax);
        out << report.to_json().dump(2) << '\n';
        return report.passed ? kExitOk : kExitVerifyFailed;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand handled\n";
  return kExitUsage;
}

}  // namespace slee
