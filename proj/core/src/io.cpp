#include "orlicz/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "orlicz/errors.hpp"
#include "orlicz/young_json.hpp"

namespace orlicz {

namespace {

struct Field {
  std::string text;
  int column = 1;
};

struct Line {
  std::vector<Field> fields;
  int number = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Non-blank lines split on commas, keeping 1-based positions.
std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (trim(raw).empty()) continue;
    Line line;
    line.number = number;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = raw.find(',', start);
      const std::string piece = raw.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const auto lead = piece.find_first_not_of(" \t");
      const int col = static_cast<int>(start + (lead == std::string::npos ? 0 : lead)) + 1;
      line.fields.push_back({trim(piece), col});
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

bool try_number(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

double number_at(const Line& line, std::size_t i) {
  const Field& f = line.fields[i];
  double v = 0.0;
  if (!try_number(f.text, v)) {
    throw ParseError("expected a number, found \"" + f.text + "\"", line.number, f.column);
  }
  if (!std::isfinite(v)) throw ParseError("value must be finite", line.number, f.column);
  return v;
}

void expect_fields(const Line& line, std::size_t n) {
  if (line.fields.size() != n) {
    const int col = line.fields.size() > n ? line.fields[n].column : line.fields.back().column;
    throw ParseError("expected " + std::to_string(n) + " comma-separated fields, found " +
                         std::to_string(line.fields.size()),
                     line.number, col);
  }
}

bool is_header(const Line& line, const std::vector<std::string>& names) {
  if (line.fields.size() != names.size()) return false;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (line.fields[i].text != names[i]) return false;
  }
  return true;
}

// Reads the geometry row, either after a header with the given names or on its
// own. Returns the index of the first sample line.
std::size_t read_geometry(const std::vector<Line>& lines, const std::vector<std::string>& names,
                          std::vector<double>& values) {
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  std::size_t i = 0;
  if (is_header(lines[0], names)) {
    i = 1;
    if (lines.size() < 2) {
      throw ParseError("missing geometry row after header", lines[0].number + 1, 1);
    }
  }
  const Line& row = lines[i];
  expect_fields(row, names.size());
  for (std::size_t k = 0; k < names.size(); ++k) values.push_back(number_at(row, k));
  return i + 1;
}

void non_negative(double v, const Line& line, std::size_t i) {
  if (v < 0.0) throw ParseError("value must be non-negative", line.number, line.fields[i].column);
}

std::pair<int, int> offset_to_line_col(const std::string& text, std::size_t offset) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

MeasureStepFunction parse_step_csv(const std::string& text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  if (!is_header(lines[0], {"value", "measure"})) {
    throw ParseError("expected header \"value,measure\"", lines[0].number, 1);
  }
  MeasureStepFunction f;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_fields(line, 2);
    const double v = number_at(line, 0);
    const double m = number_at(line, 1);
    non_negative(v, line, 0);
    if (!(m > 0.0)) throw ParseError("measure must be positive", line.number, line.fields[1].column);
    f.cells.push_back({v, m});
  }
  return f;
}

GridFunction1D parse_grid_csv(const std::string& text) {
  const std::vector<Line> lines = split_lines(text);
  std::vector<double> geom;
  const std::size_t first = read_geometry(lines, {"origin", "cell_width"}, geom);
  GridFunction1D g;
  g.origin = geom[0];
  g.cell_width = geom[1];
  if (!(g.cell_width > 0.0)) {
    const Line& row = lines[first - 1];
    throw ParseError("cell_width must be positive", row.number, row.fields[1].column);
  }
  for (std::size_t i = first; i < lines.size(); ++i) {
    expect_fields(lines[i], 1);
    const double v = number_at(lines[i], 0);
    non_negative(v, lines[i], 0);
    g.samples.push_back(v);
  }
  return g;
}

GridFieldND parse_field_csv(const std::string& text) {
  const std::vector<Line> lines = split_lines(text);
  std::vector<double> geom;
  const std::size_t first = read_geometry(lines, {"dim", "side", "cell_volume"}, geom);
  const Line& row = lines[first - 1];
  GridFieldND f;
  if (geom[0] != std::floor(geom[0]) || geom[0] < 1 || geom[0] > 3) {
    throw ParseError("dim must be 1, 2 or 3", row.number, row.fields[0].column);
  }
  if (geom[1] != std::floor(geom[1]) || geom[1] < 1) {
    throw ParseError("side must be a positive integer", row.number, row.fields[1].column);
  }
  f.dim = static_cast<int>(geom[0]);
  f.side = static_cast<std::size_t>(geom[1]);
  if ((f.side & (f.side - 1)) != 0) {
    throw ParseError("side must be a power of two", row.number, row.fields[1].column);
  }
  f.cell_volume = geom[2];
  if (!(f.cell_volume > 0.0)) {
    throw ParseError("cell_volume must be positive", row.number, row.fields[2].column);
  }
  for (std::size_t i = first; i < lines.size(); ++i) {
    for (std::size_t k = 0; k < lines[i].fields.size(); ++k) {
      const double v = number_at(lines[i], k);
      non_negative(v, lines[i], k);
      f.samples.push_back(v);
    }
  }
  std::size_t expected = 1;
  for (int d = 0; d < f.dim; ++d) expected *= f.side;
  if (f.samples.size() != expected) {
    const int last = lines.empty() ? 1 : lines.back().number;
    throw ParseError("expected " + std::to_string(expected) + " samples, found " +
                         std::to_string(f.samples.size()),
                     last, 1);
  }
  return f;
}

namespace {

nlohmann::json parse_json_located(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, col] = offset_to_line_col(text, offset);
    std::string what = e.what();
    const auto at = what.find("syntax error");
    throw ParseError(at == std::string::npos ? what : what.substr(at), line, col);
  }
}

// Re-throws a location-free ParseError pointing at the first quoted token of
// its message, when the source contains it.
[[noreturn]] void relocate(const ParseError& e, const std::string& text) {
  const std::string what = e.what();
  const auto q1 = what.find('"');
  const auto q2 = q1 == std::string::npos ? q1 : what.find('"', q1 + 1);
  std::size_t offset = 0;
  if (q2 != std::string::npos) {
    const auto at = text.find(what.substr(q1, q2 - q1 + 1));
    if (at != std::string::npos) offset = at;
  }
  const auto [line, col] = offset_to_line_col(text, offset);
  throw ParseError(what, line, col);
}

std::string text_or_file(const std::string& path_or_json) {
  const std::string t = trim(path_or_json);
  if (!t.empty() && t.front() == '{') return t;
  return read_file(path_or_json);
}

}  // namespace

YoungFunction parse_young_text(const std::string& json_text) {
  const nlohmann::json desc = parse_json_located(json_text);
  try {
    return parse_young(desc);
  } catch (const ParseError& e) {
    relocate(e, json_text);
  }
}

WeightFunction load_weight(const std::string& path_or_json) {
  const std::string text = text_or_file(path_or_json);
  const nlohmann::json desc = parse_json_located(text);
  try {
    if (!desc.is_object() || !desc.contains("kind") || !desc["kind"].is_string()) {
      throw ParseError("weight description needs a string field \"kind\"", 0, 0);
    }
    const std::string kind = desc["kind"].get<std::string>();
    if (kind == "power") {
      if (!desc.contains("exponent") || !desc["exponent"].is_number()) {
        throw ParseError("power weight needs a numeric field \"exponent\"", 0, 0);
      }
      return power_weight(desc["exponent"].get<double>());
    }
    if (kind == "orlicz") {
      if (!desc.contains("phi")) throw ParseError("orlicz weight needs a field \"phi\"", 0, 0);
      return orlicz_weight(parse_young(desc["phi"]));
    }
    throw ParseError("unknown weight kind \"" + kind + "\"", 0, 0);
  } catch (const ParseError& e) {
    relocate(e, text);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

YoungFunction load_young(const std::string& path_or_json) {
  return parse_young_text(text_or_file(path_or_json));
}

}  // namespace orlicz
