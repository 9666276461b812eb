#include "indstab/io.hpp"

#include "indstab/indpoly.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace indstab {

auto parse_graph_format(std::string_view s) -> GraphFormat
{
  if (s == "graph6" || s == "g6")
    return GraphFormat::graph6;
  if (s == "edgelist" || s == "edges")
    return GraphFormat::edgelist;
  throw IoError("unknown graph format '" + std::string(s) + "'");
}

namespace {

auto blank(const std::string& line) -> bool
{
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

auto strip_comment(std::string line) -> std::string
{
  if (auto hash = line.find('#'); hash != std::string::npos)
    line.erase(hash);
  return line;
}

auto ingest_graph6(std::istream& in) -> IngestResult
{
  IngestResult out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (blank(line))
      continue;
    if (line.starts_with(">>")) {
      if (!line.starts_with(">>graph6<<"))
        throw IoError("line " + std::to_string(number) + ": unrecognised header '" + line + "'");
      line.erase(0, 10);
      if (blank(line))
        continue;
    }
    try {
      out.graphs.push_back(from_graph6(line));
    } catch (const std::exception& e) {
      out.errors.push_back({ number, e.what() });
    }
  }
  return out;
}

auto ingest_edgelist(std::istream& in) -> IngestResult
{
  IngestResult out;
  std::string line;
  int number = 0;
  std::string block;
  int block_start = 0;
  int bad_line = 0;
  std::string bad_message;
  auto flush = [&] {
    if (block.empty())
      return;
    if (bad_line == 0) {
      try {
        out.graphs.push_back(from_edge_list(block));
      } catch (const std::exception& e) {
        out.errors.push_back({ block_start, e.what() });
      }
    } else {
      out.errors.push_back({ bad_line, bad_message });
    }
    block.clear();
    bad_line = 0;
  };
  while (std::getline(in, line)) {
    ++number;
    line = strip_comment(line);
    if (blank(line)) {
      flush();
      continue;
    }
    if (block.empty()) {
      block_start = number;
      std::istringstream ls(line);
      long n = 0;
      std::string extra;
      if (!(ls >> n) || (ls >> extra) || n < 1)
        throw IoError("line " + std::to_string(number) + ": expected a vertex count, got '" + line + "'");
    } else if (bad_line == 0) {
      std::istringstream ls(line);
      long u = 0, v = 0;
      std::string extra;
      if (!(ls >> u >> v) || (ls >> extra)) {
        bad_line = number;
        bad_message = "bad edge line '" + line + "'";
      }
    }
    block += line;
    block += '\n';
  }
  flush();
  return out;
}

} // namespace

auto ingest(std::istream& in, GraphFormat format) -> IngestResult
{
  return format == GraphFormat::graph6 ? ingest_graph6(in) : ingest_edgelist(in);
}

auto ingest_file(const std::string& path, GraphFormat format) -> IngestResult
{
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open " + path);
  return ingest(in, format);
}

auto parse_graph_arg(const std::string& text) -> GraphArg
{
  GraphArg arg;
  arg.label = text;
  if (text.find(':') != std::string::npos) {
    const auto spec = FamilySpec::parse(text);
    arg.spec = spec;
    arg.order = spec.order();
    if (arg.order <= max_vertices)
      arg.graph = family(spec);
    try {
      arg.poly = indpoly_closed(spec).poly;
    } catch (const std::invalid_argument&) {
      if (!arg.graph)
        throw;
      arg.poly = indpoly(*arg.graph).poly;
    }
    return arg;
  }
  arg.graph = from_graph6(text);
  arg.order = arg.graph->order();
  arg.poly = indpoly(*arg.graph).poly;
  return arg;
}

auto parse_poly_text(const std::string& text) -> IntPoly
{
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw IoError("empty polynomial");
  if (text[first] == '[') {
    try {
      return int_poly_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw IoError(std::string("bad polynomial JSON: ") + e.what());
    }
  }
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<BigInt> c;
  std::string token;
  while (in >> token) {
    BigInt v;
    if (v.set_str(token, 10) != 0)
      throw IoError("bad coefficient '" + token + "'");
    c.push_back(v);
  }
  return IntPoly(std::move(c));
}

auto read_text_file(const std::string& path) -> std::string
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot write " + path);
  out << text;
  if (!out)
    throw IoError("write failed for " + path);
}

auto read_poly_file(const std::string& path) -> IntPoly
{
  return parse_poly_text(read_text_file(path));
}

void write_roots_csv(std::ostream& out, const std::vector<RootRow>& rows)
{
  out << "graph_id,re,im,residual\n";
  std::ostringstream line;
  line << std::setprecision(17);
  for (const auto& r : rows) {
    line.str("");
    // graph6 never contains commas or quotes; family labels may.
    if (r.graph_id.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : r.graph_id)
        quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      line << quoted << '"';
    } else {
      line << r.graph_id;
    }
    line << ',' << r.root.real() << ',' << r.root.imag() << ',' << r.residual << '\n';
    out << line.str();
  }
}

namespace {

auto split_csv(const std::string& line) -> std::vector<std::string>
{
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  return fields;
}

auto to_double(const std::string& s, int line) -> double
{
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size())
      throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw IoError("line " + std::to_string(line) + ": bad number '" + s + "'");
  }
}

} // namespace

auto read_roots_csv(std::istream& in) -> std::vector<RootRow>
{
  std::string line;
  if (!std::getline(in, line))
    throw IoError("empty roots CSV");
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  if (line != "graph_id,re,im,residual")
    throw IoError("unexpected roots CSV header '" + line + "'");
  std::vector<RootRow> rows;
  int number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (blank(line))
      continue;
    auto f = split_csv(line);
    if (f.size() != 4)
      throw IoError("line " + std::to_string(number) + ": expected 4 fields");
    rows.push_back({ f[0], Complex(to_double(f[1], number), to_double(f[2], number)), to_double(f[3], number) });
  }
  return rows;
}

auto root_rows(const std::string& graph_id, const ComplexRootSet& rs) -> std::vector<RootRow>
{
  std::vector<RootRow> rows;
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    rows.push_back({ graph_id, rs.roots[i], rs.residuals[i] });
  return rows;
}

namespace {

auto fmt(double v) -> std::string
{
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << v;
  return s.str();
}

auto escape_xml(const std::string& s) -> std::string
{
  std::string out;
  for (char c : s) {
    switch (c) {
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '&': out += "&amp;"; break;
    case '"': out += "&quot;"; break;
    default: out += c;
    }
  }
  return out;
}

} // namespace

auto svg_plot(const std::vector<RootRow>& rows, PlotOptions o) -> std::string
{
  for (const auto& r : rows) {
    const double re = r.root.real(), im = r.root.imag();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw IoError("non-finite root for " + r.graph_id);
    o.re_min = std::min(o.re_min, std::floor(re - 0.5));
    o.re_max = std::max(o.re_max, std::ceil(re + 0.5));
    o.im_min = std::min(o.im_min, std::floor(im - 0.5));
    o.im_max = std::max(o.im_max, std::ceil(im + 0.5));
  }
  const double margin = 40;
  const double scale = (o.width - 2 * margin) / (o.re_max - o.re_min);
  const double height = (o.im_max - o.im_min) * scale + 2 * margin;
  auto px = [&](double re) { return margin + (re - o.re_min) * scale; };
  auto py = [&](double im) { return margin + (o.im_max - im) * scale; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << o.width << "\" height=\"" << fmt(height)
    << "\" viewBox=\"0 0 " << o.width << ' ' << fmt(height) << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!o.title.empty())
    s << "<text x=\"" << fmt(o.width / 2.0) << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"14\">" << escape_xml(o.title) << "</text>\n";

  s << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (double x = std::ceil(o.re_min); x <= o.re_max; x += 1)
    s << "<line x1=\"" << fmt(px(x)) << "\" y1=\"" << fmt(py(o.im_max)) << "\" x2=\"" << fmt(px(x)) << "\" y2=\""
      << fmt(py(o.im_min)) << "\"/>\n";
  for (double y = std::ceil(o.im_min); y <= o.im_max; y += 1)
    s << "<line x1=\"" << fmt(px(o.re_min)) << "\" y1=\"" << fmt(py(y)) << "\" x2=\"" << fmt(px(o.re_max))
      << "\" y2=\"" << fmt(py(y)) << "\"/>\n";
  s << "</g>\n";

  s << "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#555555\">\n";
  for (double x = std::ceil(o.re_min); x <= o.re_max; x += 1)
    s << "<text x=\"" << fmt(px(x)) << "\" y=\"" << fmt(py(o.im_min) + 14) << "\" text-anchor=\"middle\">" << x
      << "</text>\n";
  for (double y = std::ceil(o.im_min); y <= o.im_max; y += 1)
    s << "<text x=\"" << fmt(px(o.re_min) - 6) << "\" y=\"" << fmt(py(y) + 3) << "\" text-anchor=\"end\">" << y
      << "</text>\n";
  s << "</g>\n";

  // Real axis, then the imaginary axis drawn heavier: the stability boundary.
  s << "<line class=\"real-axis\" x1=\"" << fmt(px(o.re_min)) << "\" y1=\"" << fmt(py(0)) << "\" x2=\""
    << fmt(px(o.re_max)) << "\" y2=\"" << fmt(py(0)) << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
  s << "<line class=\"imaginary-axis\" x1=\"" << fmt(px(0)) << "\" y1=\"" << fmt(py(o.im_max)) << "\" x2=\""
    << fmt(px(0)) << "\" y2=\"" << fmt(py(o.im_min)) << "\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";

  s << "<g class=\"roots\" fill=\"#1f4e99\" fill-opacity=\"0.6\">\n";
  std::ostringstream c;
  c << std::fixed << std::setprecision(3);
  for (const auto& r : rows) {
    c.str("");
    c << "<circle cx=\"" << px(r.root.real()) << "\" cy=\"" << py(r.root.imag()) << "\" r=\"" << o.point_radius
      << "\"/>\n";
    s << c.str();
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

} // namespace indstab
