#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ctwkit/brambles.hpp"
#include "ctwkit/cycles.hpp"
#include "ctwkit/graph.hpp"
#include "ctwkit/navi.hpp"
#include "ctwkit/pipeline.hpp"
#include "ctwkit/tree_decomposition.hpp"

namespace ctwkit::io {

// All text formats use 1-indexed vertices; in memory they are 0-indexed.
// Parse failures throw FormatError carrying the offending line number.

/// `c` comments, header `p tw <n> <m>`, then m lines `<u> <v>`.
Graph read_gr(std::istream& in);
Graph read_gr_file(const std::filesystem::path& path);
void write_gr(std::ostream& out, const Graph& g);

/// Header `s td <bags> <max bag size> <n>`, lines `b <id> <v>...`, then
/// tree edges `<i> <j>` over bag ids.
TreeDecomposition read_td(std::istream& in);
TreeDecomposition read_td_file(const std::filesystem::path& path);
void write_td(std::ostream& out, const TreeDecomposition& d);
void write_td_file(const std::filesystem::path& path, const TreeDecomposition& d);

/// `{"sets": [[1,4,5],[2,3]]}`; `n` bounds the vertex ids.
Bramble read_bramble(std::istream& in, int n);
Bramble read_bramble_file(const std::filesystem::path& path, int n);
void write_bramble(std::ostream& out, const Bramble& b);

/// `path <x> <y> : <v0> ... <vk>`, one line per key in key order.
void write_navi(std::ostream& out, const SubNavi& navi);

/// `cycle <len> : <v0> ... <v_len-1>` in the order given.
void write_cycles(std::ostream& out, const std::vector<Cycle>& cycles);

/// Pipeline certificate as pretty-printed JSON with a fixed field order.
std::string report_json(const PipelineResult& r);

}  // namespace ctwkit::io
