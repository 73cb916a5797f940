#include "tropical/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tropical {

namespace {

struct Rows {
  std::vector<std::vector<Rat>> rows;
  std::vector<std::size_t> lines;
  std::optional<int> declared_dim;
};

std::vector<Rat> parse_row(const std::string& text, std::size_t line) {
  std::istringstream tokens(text);
  std::vector<Rat> row;
  std::string token;
  while (tokens >> token) {
    try {
      row.push_back(parse_rational(token));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
  }
  return row;
}

Rows read_rows(std::istream& in) {
  Rows result;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    std::istringstream probe(text);
    std::string first;
    if (!(probe >> first)) continue;
    if (first == "dim") {
      if (result.declared_dim || !result.rows.empty()) throw ParseError("misplaced 'dim' header", line);
      std::string value, extra;
      if (!(probe >> value) || (probe >> extra)) throw ParseError("expected 'dim <d>'", line);
      try {
        std::size_t used = 0;
        const int d = std::stoi(value, &used);
        if (used != value.size()) throw ParseError("invalid dimension '" + value + "'", line);
        if (d < 1) throw DimensionError("line " + std::to_string(line) + ": dimension must be at least 1");
        result.declared_dim = d;
      } catch (const std::logic_error&) {
        throw ParseError("invalid dimension '" + value + "'", line);
      }
      continue;
    }
    auto row = parse_row(text, line);
    if (!result.rows.empty() && row.size() != result.rows.front().size()) {
      throw ParseError("expected " + std::to_string(result.rows.front().size()) + " entries, got " +
                           std::to_string(row.size()),
                       line);
    }
    result.rows.push_back(std::move(row));
    result.lines.push_back(line);
  }
  if (result.rows.empty()) throw ParseError("no data rows");
  return result;
}

TropPoint<Rat> make_point(const std::vector<Rat>& row, CoordinateMode mode) {
  if (mode == CoordinateMode::affine) {
    if (row.empty()) throw DimensionError("an affine point needs at least one coordinate");
    return from_affine(Eigen::Map<const Vector<Rat>>(row.data(), static_cast<Eigen::Index>(row.size())));
  }
  return canonicalize(row);
}

}  // namespace

std::vector<TropPoint<Rat>> parse_points(std::istream& in, CoordinateMode mode) {
  const Rows data = read_rows(in);
  const std::size_t arity = data.rows.front().size();
  const long d = mode == CoordinateMode::affine ? static_cast<long>(arity) : static_cast<long>(arity) - 1;
  if (data.declared_dim && *data.declared_dim != d) {
    throw ParseError("rows have dimension " + std::to_string(d) + " but the header declares " +
                         std::to_string(*data.declared_dim),
                     data.lines.front());
  }
  if (d < 1) throw DimensionError("line " + std::to_string(data.lines.front()) + ": points need d >= 1");
  std::vector<TropPoint<Rat>> points;
  points.reserve(data.rows.size());
  for (const auto& row : data.rows) points.push_back(make_point(row, mode));
  return points;
}

std::vector<TropPoint<Rat>> parse_points(const std::filesystem::path& path, CoordinateMode mode) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return parse_points(in, mode);
}

TropMatrix<Rat> parse_matrix(std::istream& in) {
  const Rows data = read_rows(in);
  const auto n = static_cast<Eigen::Index>(data.rows.size());
  if (static_cast<Eigen::Index>(data.rows.front().size()) != n) {
    throw DimensionError("matrix is " + std::to_string(n) + "x" + std::to_string(data.rows.front().size()) +
                         ", expected square");
  }
  TropMatrix<Rat> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = data.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

TropPoint<Rat> parse_point(const std::string& text, CoordinateMode mode) {
  std::string spaced = text;
  for (char& c : spaced) {
    if (c == ',') c = ' ';
  }
  const auto row = parse_row(spaced, 0);
  if (row.empty()) throw ParseError("empty point");
  if (mode == CoordinateMode::projective && row.size() < 2) {
    throw DimensionError("a point of TP^d needs at least 2 coordinates");
  }
  return make_point(row, mode);
}

std::string format_point(const TropPoint<Rat>& p, CoordinateMode mode) {
  std::string out;
  if (mode == CoordinateMode::affine) {
    const Vector<Rat> chart = affine_chart(p);
    for (Eigen::Index i = 0; i < chart.size(); ++i) out += (i ? " " : "") + to_string(chart(i));
  } else {
    for (Eigen::Index i = 0; i < p.size(); ++i) out += (i ? " " : "") + to_string(p[i]);
  }
  return out;
}

void write_points(std::ostream& out, const std::vector<TropPoint<Rat>>& points, CoordinateMode mode) {
  for (const auto& p : points) out << format_point(p, mode) << '\n';
}

}  // namespace tropical
