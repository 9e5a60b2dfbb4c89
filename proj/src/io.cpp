#include "ctwkit/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ctwkit/errors.hpp"

namespace ctwkit::io {

namespace {

// Splits the next meaningful line (not blank, not a `c` comment) into tokens.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (tokens.empty() || tokens[0] == "c") continue;
      return true;
    }
    return false;
  }

  int line() const { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const { throw FormatError(what, line_no_); }

  long long number(const std::string& token) const {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      fail("expected an integer, got '" + token + "'");
    }
    if (used != token.size()) fail("expected an integer, got '" + token + "'");
    return v;
  }

  // 1-indexed id in [1, bound], returned 0-indexed.
  int index(const std::string& token, long long bound, const char* what) const {
    long long v = number(token);
    if (v < 1 || v > bound) fail(std::string(what) + " " + token + " out of range 1.." + std::to_string(bound));
    return static_cast<int>(v - 1);
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return in;
}

}  // namespace

Graph read_gr(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> tok;
  if (!r.next(tok)) r.fail("missing 'p tw <n> <m>' header");
  if (tok.size() != 4 || tok[0] != "p" || tok[1] != "tw") r.fail("expected 'p tw <n> <m>' header");
  const long long n = r.number(tok[2]);
  const long long m = r.number(tok[3]);
  if (n < 0 || m < 0 || n > (1 << 24)) r.fail("bad graph size in header");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (r.next(tok)) {
    if (tok.size() != 2) r.fail("expected an edge line '<u> <v>'");
    if (static_cast<long long>(edges.size()) == m) r.fail("more edges than the header declares");
    int u = r.index(tok[0], n, "vertex");
    int v = r.index(tok[1], n, "vertex");
    if (u == v) r.fail("loop at vertex " + tok[0]);
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second) r.fail("duplicate edge " + tok[0] + " " + tok[1]);
    edges.push_back(e);
  }
  if (static_cast<long long>(edges.size()) != m)
    r.fail("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

Graph read_gr_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_gr(in);
}

void write_gr(std::ostream& out, const Graph& g) {
  out << "p tw " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

TreeDecomposition read_td(std::istream& in) {
  LineReader r(in);
  std::vector<std::string> tok;
  if (!r.next(tok)) r.fail("missing 's td <bags> <max bag size> <n>' header");
  if (tok.size() != 5 || tok[0] != "s" || tok[1] != "td") r.fail("expected 's td <bags> <max bag size> <n>' header");
  const long long nb = r.number(tok[2]);
  const long long max_bag = r.number(tok[3]);
  const long long n = r.number(tok[4]);
  if (nb < 0 || max_bag < 0 || n < 0 || n > (1 << 24) || nb > (1 << 24)) r.fail("bad sizes in header");

  std::vector<VertexSet> bags(static_cast<std::size_t>(nb));
  std::vector<char> defined(static_cast<std::size_t>(nb), 0);
  std::vector<std::pair<int, int>> tree_edges;
  while (r.next(tok)) {
    if (tok[0] == "b") {
      if (tok.size() < 2) r.fail("bag line without an id");
      int id = r.index(tok[1], nb, "bag id");
      if (defined[static_cast<std::size_t>(id)]) r.fail("bag " + tok[1] + " defined twice");
      if (static_cast<long long>(tok.size()) - 2 > max_bag) r.fail("bag " + tok[1] + " exceeds the declared size");
      defined[static_cast<std::size_t>(id)] = 1;
      VertexSet bag(static_cast<int>(n));
      for (std::size_t i = 2; i < tok.size(); ++i) bag.insert(r.index(tok[i], n, "vertex"));
      bags[static_cast<std::size_t>(id)] = std::move(bag);
    } else {
      if (tok.size() != 2) r.fail("expected a tree edge line '<i> <j>'");
      int a = r.index(tok[0], nb, "bag id");
      int b = r.index(tok[1], nb, "bag id");
      if (a == b) r.fail("tree edge joins bag " + tok[0] + " to itself");
      tree_edges.emplace_back(a, b);
    }
  }
  for (long long i = 0; i < nb; ++i)
    if (!defined[static_cast<std::size_t>(i)]) throw FormatError("bag " + std::to_string(i + 1) + " is never defined");

  TreeDecomposition d(static_cast<int>(n));
  for (auto& bag : bags) d.add_node(std::move(bag));
  for (auto [a, b] : tree_edges) d.add_edge(a, b);
  return d;
}

TreeDecomposition read_td_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_td(in);
}

void write_td(std::ostream& out, const TreeDecomposition& d) {
  out << "s td " << d.node_count() << ' ' << d.width() + 1 << ' ' << d.vertex_universe() << '\n';
  for (NodeId t = 0; t < d.node_count(); ++t) {
    out << "b " << t + 1;
    d.bag(t).for_each([&](Vertex v) { out << ' ' << v + 1; });
    out << '\n';
  }
  for (auto [a, b] : d.edges()) out << a + 1 << ' ' << b + 1 << '\n';
}

void write_td_file(const std::filesystem::path& path, const TreeDecomposition& d) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_td(out, d);
}

Bramble read_bramble(std::istream& in, int n) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("bramble JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("sets") || !j["sets"].is_array())
    throw FormatError("bramble JSON needs an object with a 'sets' array");
  Bramble b;
  for (const auto& s : j["sets"]) {
    if (!s.is_array()) throw FormatError("bramble set " + std::to_string(b.sets.size() + 1) + " is not an array");
    VertexSet set(n);
    for (const auto& v : s) {
      if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > n)
        throw FormatError("bramble set " + std::to_string(b.sets.size() + 1) + " has a bad vertex " + v.dump());
      set.insert(static_cast<Vertex>(v.get<long long>() - 1));
    }
    b.sets.push_back(std::move(set));
  }
  return b;
}

Bramble read_bramble_file(const std::filesystem::path& path, int n) {
  auto in = open(path);
  return read_bramble(in, n);
}

void write_bramble(std::ostream& out, const Bramble& b) {
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& s : b.sets) {
    nlohmann::json one = nlohmann::json::array();
    s.for_each([&](Vertex v) { one.push_back(v + 1); });
    sets.push_back(std::move(one));
  }
  out << nlohmann::json{{"sets", sets}}.dump() << '\n';
}

void write_navi(std::ostream& out, const SubNavi& navi) {
  for (const auto& [key, p] : navi.paths()) {
    out << "path " << key.first + 1 << ' ' << key.second + 1 << " :";
    for (Vertex v : p) out << ' ' << v + 1;
    out << '\n';
  }
}

void write_cycles(std::ostream& out, const std::vector<Cycle>& cycles) {
  for (const auto& c : cycles) {
    out << "cycle " << c.length() << " :";
    for (Vertex v : c.vertices()) out << ' ' << v + 1;
    out << '\n';
  }
}

std::string report_json(const PipelineResult& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["tw"] = r.tw;
  j["tw_certified"] = r.tw_certified;
  j["k"] = r.k;
  j["l_navi"] = r.l_navi;
  j["width_before"] = r.width_before;
  j["width_after"] = r.width_after;
  j["theorem1_bound"] = r.theorem1_bound;
  j["bound_satisfied"] = r.bound_satisfied;
  return j.dump(2) + "\n";
}

}  // namespace ctwkit::io
