#pragma once

// File formats: graph6 / edge-list ingest, graph and polynomial arguments,
// root CSV, JSON output and SVG scatter plots.

#include "indstab/graph.hpp"
#include "indstab/poly.hpp"
#include "indstab/roots.hpp"
#include "indstab/scan.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace indstab {

class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat
{
  graph6,
  edgelist,
};

auto parse_graph_format(std::string_view s) -> GraphFormat;

struct LineError
{
  int line = 0;
  std::string message;
};

struct IngestResult
{
  std::vector<Graph> graphs;
  std::vector<LineError> errors;
};

// graph6: one graph per line, optional ">>graph6<<" header. Edge lists: blocks
// separated by blank lines, vertex count first, then "u v" lines; '#' starts a
// comment. Bad lines are reported and their graph skipped; a corrupt header
// (graph6) throws IoError.
auto ingest(std::istream& in, GraphFormat format) -> IngestResult;
auto ingest_file(const std::string& path, GraphFormat format) -> IngestResult;

// A graph given on the command line: a family spec ("star:300") resolved by
// closed form, or a graph6 string.
struct GraphArg
{
  std::string label;
  std::optional<Graph> graph;
  std::optional<FamilySpec> spec;
  IntPoly poly;
  long long order = 0;
};

auto parse_graph_arg(const std::string& text) -> GraphArg;

// Polynomial files: a JSON array of coefficients (ascending), or integers
// separated by whitespace or commas.
auto parse_poly_text(const std::string& text) -> IntPoly;
auto read_poly_file(const std::string& path) -> IntPoly;

auto read_text_file(const std::string& path) -> std::string;
void write_text_file(const std::string& path, const std::string& text);

// graph_id,re,im,residual with 17 significant digits.
void write_roots_csv(std::ostream& out, const std::vector<RootRow>& rows);
auto read_roots_csv(std::istream& in) -> std::vector<RootRow>;
auto root_rows(const std::string& graph_id, const ComplexRootSet& rs) -> std::vector<RootRow>;

struct PlotOptions
{
  double re_min = -3.5, re_max = 1.5, im_min = -3, im_max = 3;
  int width = 600;
  std::string title;
  double point_radius = 1.6;
};

// Scatter plot; the viewport grows to whole units when a root falls outside.
auto svg_plot(const std::vector<RootRow>& rows, PlotOptions options = {}) -> std::string;

} // namespace indstab
