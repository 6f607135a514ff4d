// SPDX-License-Identifier: Apache-2.0

#include "spectra/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

struct Header {
  bool coordinate = false;  // otherwise array
  bool complex_field = false;
  bool pattern = false;
  enum class Symmetry { general, symmetric, hermitian, skew } symmetry = Symmetry::general;
};

Header parse_header(const std::string& line) {
  std::istringstream ss(line);
  std::string banner, object, format, field, symmetry;
  ss >> banner >> object >> format >> field >> symmetry;
  if (to_lower(banner) != "%%matrixmarket" || to_lower(object) != "matrix") {
    throw ParseError("not a Matrix Market matrix file");
  }
  Header h;
  format = to_lower(format);
  if (format == "coordinate") {
    h.coordinate = true;
  } else if (format == "array") {
    h.coordinate = false;
  } else {
    throw ParseError("unsupported Matrix Market format '" + format + "'");
  }
  field = to_lower(field);
  if (field == "complex") {
    h.complex_field = true;
  } else if (field == "real" || field == "integer") {
    h.complex_field = false;
  } else if (field == "pattern") {
    throw ParseError("pattern matrices carry no values");
  } else {
    throw ParseError("unsupported Matrix Market field '" + field + "'");
  }
  symmetry = to_lower(symmetry);
  if (symmetry == "general") {
    h.symmetry = Header::Symmetry::general;
  } else if (symmetry == "symmetric") {
    h.symmetry = Header::Symmetry::symmetric;
  } else if (symmetry == "hermitian") {
    h.symmetry = Header::Symmetry::hermitian;
  } else if (symmetry == "skew-symmetric") {
    throw ParseError("skew-symmetric matrices cannot be Hermitian");
  } else {
    throw ParseError("unsupported Matrix Market symmetry '" + symmetry + "'");
  }
  return h;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
}

std::string next_data_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    strip_cr(line);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) {
      continue;  // blank
    }
    if (line[first] == '%') {
      continue;  // comment
    }
    return line;
  }
  throw ParseError("unexpected end of file");
}

cplx read_value(std::istringstream& ss, bool complex_field) {
  double re = 0.0;
  double im = 0.0;
  if (!(ss >> re)) {
    throw ParseError("malformed numeric value");
  }
  if (complex_field && !(ss >> im)) {
    throw ParseError("complex entry is missing its imaginary part");
  }
  return {re, im};
}

void place(std::vector<cplx>& m, std::vector<char>& seen, int n, int i, int j, cplx v,
           Header::Symmetry sym) {
  const auto idx = [n](int r, int c) { return static_cast<std::size_t>(r) * n + c; };
  if (seen[idx(i, j)]) {
    throw ParseError("duplicate entry at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
  }
  m[idx(i, j)] = v;
  seen[idx(i, j)] = 1;
  if (i != j && sym != Header::Symmetry::general) {
    const cplx mirror = (sym == Header::Symmetry::hermitian) ? std::conj(v) : v;
    if (seen[idx(j, i)]) {
      throw ParseError("duplicate entry at (" + std::to_string(j + 1) + ", " + std::to_string(i + 1) + ")");
    }
    m[idx(j, i)] = mirror;
    seen[idx(j, i)] = 1;
  }
}

}  // namespace

HermitianOperator read_matrix_market(std::istream& in) {
  std::string header_line;
  if (!std::getline(in, header_line)) {
    throw ParseError("empty file");
  }
  strip_cr(header_line);
  const Header h = parse_header(header_line);

  std::istringstream size_line(next_data_line(in));
  long rows = 0;
  long cols = 0;
  long nnz = 0;
  if (!(size_line >> rows >> cols)) {
    throw ParseError("malformed size line");
  }
  if (h.coordinate && !(size_line >> nnz)) {
    throw ParseError("coordinate size line is missing the entry count");
  }
  if (rows != cols) {
    throw NotSquare("matrix is " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (rows < 1) {
    throw ParseError("matrix dimension must be positive");
  }
  const int n = static_cast<int>(rows);
  std::vector<cplx> entries(static_cast<std::size_t>(n) * n, cplx(0.0));

  if (h.coordinate) {
    std::vector<char> seen(entries.size(), 0);
    for (long e = 0; e < nnz; ++e) {
      std::istringstream ss(next_data_line(in));
      long i = 0;
      long j = 0;
      if (!(ss >> i >> j)) {
        throw ParseError("malformed coordinate entry");
      }
      if (i < 1 || i > n || j < 1 || j > n) {
        throw ParseError("coordinate index out of range");
      }
      place(entries, seen, n, static_cast<int>(i - 1), static_cast<int>(j - 1),
            read_value(ss, h.complex_field), h.symmetry);
    }
  } else {
    // Array format is column-major; symmetric/hermitian files store the lower
    // triangle (including the diagonal) only.
    const bool lower_only = h.symmetry != Header::Symmetry::general;
    std::vector<char> seen(entries.size(), 0);
    for (int j = 0; j < n; ++j) {
      for (int i = lower_only ? j : 0; i < n; ++i) {
        std::istringstream ss(next_data_line(in));
        place(entries, seen, n, i, j, read_value(ss, h.complex_field), h.symmetry);
      }
    }
  }
  return HermitianOperator::from_entries(std::move(entries), n);
}

HermitianOperator load_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileNotFound("cannot open '" + path + "'");
  }
  try {
    return read_matrix_market(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace spectra
