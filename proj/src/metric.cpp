#include "pnspan/metric.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "pnspan/errors.hpp"

namespace pnspan {
namespace {

struct Line {
  std::size_t number;
  std::string text;
};

// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] == '#') continue;
    lines.push_back({number, text});
  }
  return lines;
}

std::vector<double> parse_numbers(const Line& line) {
  std::vector<double> values;
  std::istringstream tokens(line.text);
  std::string tok;
  while (tokens >> tok) {
    double v = 0.0;
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
      throw ParseError(line.number, "invalid number '" + tok + "'");
    }
    values.push_back(v);
  }
  return values;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::Symmetry: return "symmetry";
    case Axiom::ZeroDiagonal: return "zero_diagonal";
    case Axiom::Positivity: return "positivity";
    case Axiom::Triangle: return "triangle";
  }
  return "unknown";
}

EuclideanSpace::EuclideanSpace(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw DimensionMismatchError("euclidean dimension must be positive");
  if (coords_.size() % dim_ != 0) {
    throw DimensionMismatchError("coordinate count is not a multiple of the dimension");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) throw ParameterError("non-finite coordinate");
  }
  std::map<std::vector<double>, std::size_t> seen;
  for (std::size_t i = 0; i < size(); ++i) {
    auto p = point(static_cast<PointId>(i));
    auto [it, inserted] = seen.emplace(std::vector<double>(p.begin(), p.end()), i);
    if (!inserted) throw DuplicatePointError(it->second, i);
  }
}

EuclideanSpace EuclideanSpace::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ParameterError("point set is empty");
  const std::size_t dim = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) {
      throw DimensionMismatchError("point " + std::to_string(i) + " has " +
                                   std::to_string(rows[i].size()) + " coordinates, expected " +
                                   std::to_string(dim));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return EuclideanSpace(dim, std::move(flat));
}

double EuclideanSpace::distance(PointId u, PointId v) const {
  const double* a = coords_.data() + static_cast<std::size_t>(u) * dim_;
  const double* b = coords_.data() + static_cast<std::size_t>(v) * dim_;
  double s = 0.0;
  for (std::size_t k = 0; k < dim_; ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return std::sqrt(s);
}

HammingSpace::HammingSpace(const std::vector<std::string>& rows) {
  if (rows.empty()) throw ParameterError("point set is empty");
  bits_ = rows.front().size();
  if (bits_ == 0) throw DimensionMismatchError("bit strings must be non-empty");
  words_ = (bits_ + 63) / 64;
  n_ = rows.size();
  data_.assign(n_ * words_, 0);
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < n_; ++i) {
    const auto& row = rows[i];
    if (row.size() != bits_) {
      throw DimensionMismatchError("point " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                   " bits, expected " + std::to_string(bits_));
    }
    for (std::size_t b = 0; b < bits_; ++b) {
      if (row[b] == '1') {
        data_[i * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
      } else if (row[b] != '0') {
        throw ParameterError("point " + std::to_string(i) + " contains a non-bit character");
      }
    }
    auto [it, inserted] = seen.emplace(row, i);
    if (!inserted) throw DuplicatePointError(it->second, i);
  }
}

std::string HammingSpace::point_string(PointId id) const {
  std::string s(bits_, '0');
  for (std::size_t b = 0; b < bits_; ++b) {
    if ((data_[id * words_ + b / 64] >> (b % 64)) & 1U) s[b] = '1';
  }
  return s;
}

double HammingSpace::distance(PointId u, PointId v) const {
  const std::uint64_t* a = data_.data() + static_cast<std::size_t>(u) * words_;
  const std::uint64_t* b = data_.data() + static_cast<std::size_t>(v) * words_;
  int count = 0;
  for (std::size_t w = 0; w < words_; ++w) count += std::popcount(a[w] ^ b[w]);
  return static_cast<double>(count);
}

TableSpace::TableSpace(std::vector<std::vector<double>> matrix) : n_(matrix.size()) {
  if (n_ == 0) throw ParameterError("distance table is empty");
  m_.reserve(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (matrix[i].size() != n_) {
      throw DimensionMismatchError("table row " + std::to_string(i) + " has " +
                                   std::to_string(matrix[i].size()) + " entries, expected " +
                                   std::to_string(n_));
    }
    m_.insert(m_.end(), matrix[i].begin(), matrix[i].end());
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double d = m_[i * n_ + j];
      if (!std::isfinite(d) || d < 0) throw ParameterError("table entries must be finite and nonnegative");
      if (i == j && d != 0) throw ParameterError("table diagonal must be zero");
      if (d != m_[j * n_ + i]) {
        throw ParameterError("table is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      if (i < j && d == 0) throw DuplicatePointError(i, j);
    }
  }
}

EuclideanSpace parse_euclidean(std::istream& in, std::optional<std::size_t> dim) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParameterError("point set is empty");
  std::vector<double> flat;
  std::size_t arity = dim.value_or(0);
  for (const auto& line : lines) {
    auto row = parse_numbers(line);
    if (arity == 0) arity = row.size();
    if (row.size() != arity) {
      throw DimensionMismatchError("line " + std::to_string(line.number) + ": expected " +
                                   std::to_string(arity) + " coordinates, got " +
                                   std::to_string(row.size()));
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return EuclideanSpace(arity, std::move(flat));
}

HammingSpace parse_hamming(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw ParameterError("point set is empty");
  std::vector<std::string> rows;
  std::size_t bits = 0;
  for (const auto& line : lines) {
    std::istringstream tokens(line.text);
    std::string tok, extra;
    tokens >> tok;
    if (tokens >> extra) throw ParseError(line.number, "expected a single bit string");
    if (tok.find_first_not_of("01") != std::string::npos) {
      throw ParseError(line.number, "bit strings may contain only '0' and '1'");
    }
    if (bits == 0) bits = tok.size();
    if (tok.size() != bits) {
      throw DimensionMismatchError("line " + std::to_string(line.number) + ": expected " +
                                   std::to_string(bits) + " bits, got " + std::to_string(tok.size()));
    }
    rows.push_back(std::move(tok));
  }
  return HammingSpace(rows);
}

TableSpace parse_table(std::istream& in) {
  std::vector<std::vector<double>> rows;
  for (const auto& line : content_lines(in)) rows.push_back(parse_numbers(line));
  return TableSpace(std::move(rows));
}

EuclideanSpace load_euclidean(const std::filesystem::path& path, std::optional<std::size_t> dim) {
  auto in = open_or_throw(path);
  return parse_euclidean(in, dim);
}

HammingSpace load_hamming(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_hamming(in);
}

TableSpace load_table(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse_table(in);
}

void write_euclidean(std::ostream& out, const EuclideanSpace& space) {
  for (std::size_t i = 0; i < space.size(); ++i) {
    const auto p = space.point(static_cast<PointId>(i));
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << ' ';
      out << ScalarTraits<double>::to_text(p[k]);
    }
    out << '\n';
  }
}

void write_hamming(std::ostream& out, const HammingSpace& space) {
  for (std::size_t i = 0; i < space.size(); ++i) out << space.point_string(static_cast<PointId>(i)) << '\n';
}

}  // namespace pnspan
