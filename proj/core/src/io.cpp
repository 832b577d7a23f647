#include "stabur/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "stabur/errors.hpp"

namespace stabur {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Line {
  std::size_t number;
  std::string_view content;
};

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view raw =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) lines.push_back({number, raw});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

bool parse_int(std::string_view s, int& out) {
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::string at_line(std::size_t line, const std::string& message) {
  return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

InputKind detect_input_kind(std::string_view text) {
  const auto lines = content_lines(text);
  int n = 0;
  if (!lines.empty() && parse_int(lines.front().content, n)) return InputKind::kGraph;
  return InputKind::kGroup;
}

std::vector<PauliOperator> parse_generator_list(std::string_view text) {
  std::vector<PauliOperator> out;
  for (const Line& line : content_lines(text)) {
    try {
      out.push_back(PauliOperator::parse(line.content));
    } catch (const ParseError& e) {
      throw ParseError(at_line(line.number, e.what()), line.number);
    }
  }
  if (out.empty()) throw ParseError("no generators found", 0);
  return out;
}

StabilizerGroup parse_group(std::string_view text) { return validate_group(parse_generator_list(text)); }

Graph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty graph file", 0);
  int n = 0;
  if (!parse_int(lines.front().content, n) || n < 0) {
    throw ParseError(at_line(lines.front().number, "expected vertex count"), lines.front().number);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const auto space = line.content.find_first_of(" \t");
    int i = 0;
    int j = 0;
    if (space == std::string_view::npos || !parse_int(trim(line.content.substr(0, space)), i) ||
        !parse_int(trim(line.content.substr(space + 1)), j)) {
      throw ParseError(at_line(line.number, "expected edge \"i j\""), line.number);
    }
    edges.emplace_back(i, j);
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string format_generator_list(const StabilizerGroup& g) {
  std::string out;
  for (const auto& gen : g.generators()) out += gen.str() + "\n";
  return out;
}

std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + "\n";
  for (const auto& [i, j] : g.edges()) out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

std::string bit_string(std::uint64_t y, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if ((y >> q) & 1) out[q] = '1';
  }
  return out;
}

std::string amplitude_csv(const AmplitudeTable& table) {
  std::string out = "y,numerator,log2_den,sign\n";
  for (std::size_t y = 0; y < table.values.size(); ++y) {
    const Dyadic& v = table.values[y];
    out += bit_string(y, table.n) + "," + std::to_string(v.abs().num()) + "," +
           std::to_string(v.log2_den()) + "," + std::to_string(v.sign()) + "\n";
  }
  return out;
}

std::string format_real(double value) {
  if (value == 0.0) return "0";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string curve_csv(std::span<const CurvePoint> points, const EntropySpec& spec) {
  std::string out = "a1,a2,entropy_kind,q\n";
  const std::string q = spec.kind == EntropyKind::kTsallis ? format_real(spec.q) : "";
  for (const auto& p : points) {
    out += format_real(p.a1) + "," + format_real(p.a2) + "," + spec.kind_name() + "," + q + "\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace stabur
