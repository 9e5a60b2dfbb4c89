#include "ctwkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>

#include "ctwkit/atomizer.hpp"
#include "ctwkit/brambles.hpp"
#include "ctwkit/cycles.hpp"
#include "ctwkit/errors.hpp"
#include "ctwkit/io.hpp"
#include "ctwkit/navi.hpp"
#include "ctwkit/pipeline.hpp"

namespace ctwkit::cli {

namespace {

struct Options {
  std::string graph, td, out, report, bramble, navi;
  bool longest = false, list = false, connected = false;
  int max_n = 0;
  int exact_limit = kDefaultExactTreewidthLimit;
};

std::optional<TreeDecomposition> load_td(const Options& o, const Graph& g) {
  if (o.td.empty()) return std::nullopt;
  auto d = io::read_td_file(o.td);
  if (d.vertex_universe() != g.vertex_count())
    throw FormatError(o.td + ": decomposition is over " + std::to_string(d.vertex_universe()) +
                      " vertices, graph has " + std::to_string(g.vertex_count()));
  return d;
}

void print_fatness(std::ostream& out, const Fatness& f) {
  // Only the non-zero tail is interesting; print size:count pairs.
  const int n = static_cast<int>(f.counts.size()) - 1;
  bool first = true;
  for (int h = 0; h <= n; ++h)
    if (f.counts[static_cast<std::size_t>(h)] != 0) {
      out << (first ? "" : " ") << n - h << ':' << f.counts[static_cast<std::size_t>(h)];
      first = false;
    }
}

int cmd_validate(const Options& o, std::ostream& out) {
  Graph g = io::read_gr_file(o.graph);
  auto d = *load_td(o, g);
  auto r = validate(g, d, 1);
  if (!r.valid()) {
    out << r.first_violation << '\n';
    return kInvalid;
  }
  out << "valid width " << r.width << " connected_parts " << (r.connected_parts ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_atomize(const Options& o, std::ostream& out) {
  Graph g = io::read_gr_file(o.graph);
  auto seed = load_td(o, g);
  TreeDecomposition d = seed ? *seed : exact_treewidth(g, o.exact_limit).decomposition;
  auto r = atomize_with_log(g, d);
  io::write_td_file(o.out, r.decomposition);
  out << "moves " << r.moves.size() << " width " << d.width() << " -> " << r.decomposition.width() << '\n';
  out << "fatness ";
  print_fatness(out, fatness(g, r.decomposition));
  out << '\n';
  return kOk;
}

int cmd_connectify(const Options& o, std::ostream& out) {
  Graph g = io::read_gr_file(o.graph);
  auto result = ctw_upper_bound(g, load_td(o, g), o.exact_limit);
  if (!o.out.empty()) io::write_td_file(o.out, result.ctd);
  const std::string report = io::report_json(result);
  if (!o.report.empty()) {
    std::ofstream f(o.report);
    if (!f) throw Error("cannot write " + o.report);
    f << report;
  } else {
    out << report;
  }
  if (!o.navi.empty()) {
    std::ofstream f(o.navi);
    if (!f) throw Error("cannot write " + o.navi);
    io::write_navi(f, build_geodesic_navi(g));
  }
  return kOk;
}

int cmd_cycles(const Options& o, std::ostream& out) {
  Graph g = io::read_gr_file(o.graph);
  const DistanceMatrix dist = distance_matrix(g);
  if (o.longest && !o.list) {
    out << "longest " << longest_geodesic_cycle(g, dist) << '\n';
    return kOk;
  }
  auto cycles = enumerate_geodesic_cycles(g, dist);
  if (o.list) io::write_cycles(out, cycles);
  if (o.longest) out << "longest " << (cycles.empty() ? 1 : cycles.back().length()) << '\n';
  if (!o.list && !o.longest) out << "geodesic_cycles " << cycles.size() << '\n';
  return kOk;
}

int cmd_bramble(const Options& o, std::ostream& out) {
  Graph g = io::read_gr_file(o.graph);
  Bramble b = io::read_bramble_file(o.bramble, g.vertex_count());
  auto check = validate_bramble(g, b);
  if (!check.ok) {
    out << "invalid bramble: " << check.first_violation << '\n';
    return kInvalid;
  }
  Cover c = o.connected ? minimum_connected_cover(g, b) : minimum_cover(g, b);
  out << (o.connected ? "connected_order " : "order ") << c.size << '\n' << "cover";
  c.vertices.for_each([&](Vertex v) { out << ' ' << v + 1; });
  out << '\n';
  return kOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  Graph g = io::read_gr_file(o.graph);
  const int tw = exact_treewidth(g, o.exact_limit).width;
  const int k = longest_geodesic_cycle(g);
  out << "tw=" << tw << " k=" << k << " bound=" << theorem1_bound(tw, k) << '\n';
  return kOk;
}

int cmd_exact_ctw(const Options& o, std::ostream& out) {
  Graph g = io::read_gr_file(o.graph);
  auto r = exact_ctw_with_witness(g, o.max_n > 0 ? o.max_n : exact_ctw_limit());
  out << "ctw " << r.width << '\n';
  if (!o.out.empty()) io::write_td_file(o.out, r.decomposition);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected tree-width toolkit", "ctwkit"};
  app.require_subcommand(1);
  Options o;
  int (*action)(const Options&, std::ostream&) = nullptr;

  auto graph_opt = [&o](CLI::App* sub) { sub->add_option("--graph", o.graph, "graph in .gr format")->required(); };
  auto limit_opt = [&o](CLI::App* sub) {
    sub->add_option("--exact-limit", o.exact_limit, "largest graph for exact treewidth");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a tree decomposition");
  graph_opt(validate_cmd);
  validate_cmd->add_option("--td", o.td, "decomposition in .td format")->required();
  validate_cmd->callback([&] { action = cmd_validate; });

  auto* atomize_cmd = app.add_subcommand("atomize", "refine a decomposition to an atomic one");
  graph_opt(atomize_cmd);
  atomize_cmd->add_option("--td", o.td, "seed decomposition (default: exact treewidth)");
  atomize_cmd->add_option("--out", o.out, "output .td")->required();
  limit_opt(atomize_cmd);
  atomize_cmd->callback([&] { action = cmd_atomize; });

  auto* connectify_cmd = app.add_subcommand("connectify", "build a connected decomposition");
  graph_opt(connectify_cmd);
  connectify_cmd->add_option("--td", o.td, "seed decomposition (default: exact treewidth)");
  connectify_cmd->add_option("--out", o.out, "output .td");
  connectify_cmd->add_option("--report", o.report, "JSON report (default: stdout)");
  connectify_cmd->add_option("--navi", o.navi, "dump the geodesic navi here");
  limit_opt(connectify_cmd);
  connectify_cmd->callback([&] { action = cmd_connectify; });

  auto* cycles_cmd = app.add_subcommand("geodesic-cycles", "enumerate geodesic cycles");
  graph_opt(cycles_cmd);
  cycles_cmd->add_flag("--longest", o.longest, "print the longest length");
  cycles_cmd->add_flag("--list", o.list, "print every cycle");
  cycles_cmd->callback([&] { action = cmd_cycles; });

  auto* bramble_cmd = app.add_subcommand("bramble-order", "order of a bramble");
  graph_opt(bramble_cmd);
  bramble_cmd->add_option("--bramble", o.bramble, "bramble JSON")->required();
  bramble_cmd->add_flag("--connected", o.connected, "connected order instead");
  bramble_cmd->callback([&] { action = cmd_bramble; });

  auto* bound_cmd = app.add_subcommand("bound", "treewidth, longest geodesic cycle and the resulting bound");
  graph_opt(bound_cmd);
  limit_opt(bound_cmd);
  bound_cmd->callback([&] { action = cmd_bound; });

  auto* ctw_cmd = app.add_subcommand("exact-ctw", "exact connected tree-width of a small graph");
  graph_opt(ctw_cmd);
  ctw_cmd->add_option("--max-n", o.max_n, "vertex limit (default 8 or CTWKIT_MAX_N)");
  ctw_cmd->add_option("--out", o.out, "witness .td");
  ctw_cmd->callback([&] { action = cmd_exact_ctw; });

  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFormat;
  }

  try {
    return action(o, out);
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kFormat;
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kLimit;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace ctwkit::cli
