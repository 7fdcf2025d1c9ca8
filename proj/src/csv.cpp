#include "plingam/csv.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace plingam {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path, bool allow_missing) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::ParseError, path.string() + ": missing header row", 1, 1);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();

  CsvTable table;
  table.header = split_fields(line);
  const std::size_t d = table.header.size();
  if (d == 0) {
    throw Error(ErrorCode::ParseError, path.string() + ": empty header", 1, 1);
  }
  for (auto& h : table.header) h = trimmed(h);

  std::vector<double> buffer;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != d) {
      throw Error(ErrorCode::ParseError,
                  path.string() + ":" + std::to_string(line_no) + ": expected " +
                      std::to_string(d) + " fields, got " + std::to_string(fields.size()),
                  line_no, static_cast<long>(fields.size()));
    }
    for (std::size_t c = 0; c < d; ++c) {
      const std::string cell = trimmed(fields[c]);
      if (cell.empty() || cell == "nan" || cell == "NaN" || cell == "NA") {
        if (!allow_missing) {
          throw Error(ErrorCode::ParseError,
                      path.string() + ":" + std::to_string(line_no) + ": missing value in column " +
                          table.header[c],
                      line_no, static_cast<long>(c + 1));
        }
        buffer.push_back(std::numeric_limits<double>::quiet_NaN());
        continue;
      }
      double v = 0.0;
      const char* begin = cell.data();
      const char* end = begin + cell.size();
      const auto [ptr, ec] = std::from_chars(begin, end, v);
      if (ec != std::errc() || ptr != end) {
        throw Error(ErrorCode::ParseError,
                    path.string() + ":" + std::to_string(line_no) + ": cannot parse '" + cell +
                        "' in column " + table.header[c],
                    line_no, static_cast<long>(c + 1));
      }
      buffer.push_back(v);
    }
  }

  const auto rows = static_cast<Eigen::Index>(buffer.size() / d);
  table.values.resize(rows, static_cast<Eigen::Index>(d));
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(d); ++c) {
      table.values(r, c) = buffer[static_cast<std::size_t>(r) * d + static_cast<std::size_t>(c)];
    }
  }
  return table;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const Eigen::MatrixXd& values) {
  if (static_cast<Eigen::Index>(header.size()) != values.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "write_csv: header size mismatch");
  }
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  }
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c) out << ',';
    out << header[c];
  }
  out << '\n';
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
      if (c) out << ',';
      out << format_double(values(r, c));
    }
    out << '\n';
  }
  if (!out.good()) {
    throw Error(ErrorCode::IoError, "write failed: " + path.string());
  }
}

void write_adjacency(const std::filesystem::path& path, const Eigen::MatrixXd& weights,
                     const std::vector<std::string>& names) {
  write_csv(path, names, weights);
}

void write_order(const std::filesystem::path& path, const CausalOrder& order) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot write " + path.string());
  }
  for (int v : order.order) out << v << '\n';
  if (!out.good()) {
    throw Error(ErrorCode::IoError, "write failed: " + path.string());
  }
}

std::string digest_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string());
  }
  std::uint64_t hash = 0xcbf29ce484222325ULL;  // FNV-1a 64
  char chunk[4096];
  while (in.read(chunk, sizeof(chunk)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      hash ^= static_cast<unsigned char>(chunk[i]);
      hash *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace plingam
