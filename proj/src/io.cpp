#include "netginv/io.hpp"

#include "netginv/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace netginv::io {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> fields;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      std::size_t end = pos;
      while (end < raw.size() && !std::isspace(static_cast<unsigned char>(raw[end]))) ++end;
      if (end > pos) line.fields.push_back(raw.substr(pos, end - pos));
      pos = end;
    }
    if (!line.fields.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t parse_index(const Line& line, std::size_t field) {
  const std::string_view s = line.fields[field];
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line.number, "expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return value;
}

double parse_real(const Line& line, std::size_t field) {
  const std::string_view s = line.fields[field];
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    throw ParseError(line.number, "expected a finite number, got '" + std::string(s) + "'");
  }
  return value;
}

void expect_fields(const Line& line, std::size_t count) {
  if (line.fields.size() != count) {
    throw ParseError(line.number, "'" + std::string(line.fields[0]) + "' record takes " +
                                      std::to_string(count - 1) + " fields, got " +
                                      std::to_string(line.fields.size() - 1));
  }
}

}  // namespace

Network parse_network(std::string_view text) {
  const auto lines = tokenize(text);
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::optional<double>> weights;
  std::size_t weight_count = 0;
  std::size_t last_line = 0;

  for (const auto& line : lines) {
    last_line = line.number;
    const std::string_view tag = line.fields[0];
    if (tag == "n") {
      expect_fields(line, 2);
      if (n) throw ParseError(line.number, "vertex count given twice");
      n = parse_index(line, 1);
      if (*n == 0) throw ParseError(line.number, "vertex count must be positive");
      weights.assign(*n, std::nullopt);
      continue;
    }
    if (!n) throw ParseError(line.number, "'n <count>' must come first");
    if (tag == "e") {
      expect_fields(line, 4);
      const std::size_t i = parse_index(line, 1);
      const std::size_t j = parse_index(line, 2);
      const double c = parse_real(line, 3);
      if (i >= *n || j >= *n) throw ParseError(line.number, "edge endpoint out of range 0.." + std::to_string(*n - 1));
      if (!seen.emplace(std::min(i, j), std::max(i, j)).second) {
        throw ParseError(line.number, "duplicate edge (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      edges.push_back({i, j, c});
    } else if (tag == "w") {
      expect_fields(line, 3);
      const std::size_t i = parse_index(line, 1);
      const double value = parse_real(line, 2);
      if (i >= *n) throw ParseError(line.number, "weight index out of range 0.." + std::to_string(*n - 1));
      if (weights[i]) throw ParseError(line.number, "duplicate weight for vertex " + std::to_string(i));
      weights[i] = value;
      ++weight_count;
    } else {
      throw ParseError(line.number, "unknown record '" + std::string(tag) + "'");
    }
  }
  if (!n) throw ParseError(last_line + 1, "missing 'n <count>' header");
  std::optional<std::vector<double>> vertex_weights;
  if (weight_count > 0) {
    if (weight_count != *n) throw ParseError(last_line, "weights given for only some vertices");
    vertex_weights.emplace();
    for (const auto& w : weights) vertex_weights->push_back(*w);
  }
  return Network(*n, std::move(edges), {}, std::move(vertex_weights));
}

ConnectionSpec parse_connection(std::string_view text) {
  ConnectionSpec spec;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& line : tokenize(text)) {
    if (line.fields[0] != "c") throw ParseError(line.number, "unknown record '" + std::string(line.fields[0]) + "'");
    expect_fields(line, 4);
    const Connection c{parse_index(line, 1), parse_index(line, 2), parse_real(line, 3)};
    if (!seen.emplace(c.x, c.y).second) {
      throw ParseError(line.number, "duplicate connection (" + std::to_string(c.x) + ", " + std::to_string(c.y) + ")");
    }
    spec.edges.push_back(c);
  }
  return spec;
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_network(const Network& net) {
  std::ostringstream out;
  out << "n " << net.order() << '\n';
  if (net.vertex_weights()) {
    const auto& w = *net.vertex_weights();
    for (std::size_t i = 0; i < w.size(); ++i) out << "w " << i << ' ' << format_number(w[i]) << '\n';
  }
  for (const auto& e : net.edges()) out << "e " << e.x << ' ' << e.y << ' ' << format_number(e.c) << '\n';
  return out.str();
}

std::string format_connection(const ConnectionSpec& conn) {
  std::ostringstream out;
  for (const auto& c : conn.edges) out << "c " << c.x << ' ' << c.y << ' ' << format_number(c.a) << '\n';
  return out.str();
}

std::string format_matrix_text(const Matrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_number(m(i, j));
    }
    out += '\n';
  }
  return out;
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return {{"order", m.rows()}, {"rows", std::move(rows)}};
}

nlohmann::json group_inverse_to_json(const GroupInverseResult& result) {
  auto j = matrix_to_json(result.ginv.matrix());
  j["residuals"] = {{"commute", result.residual_commute},
                    {"projector", result.residual_projector},
                    {"kernel", result.residual_kernel}};
  return j;
}

}  // namespace netginv::io
