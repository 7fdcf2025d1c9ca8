#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

#include "plingam/types.hpp"

namespace plingam {

// CSV dialect: comma separated, mandatory header row, decimal point, no
// quoting or locale handling. Doubles are written with %.17g so a read
// back reproduces the exact value.

struct CsvTable {
  std::vector<std::string> header;
  Eigen::MatrixXd values;
};

// allow_missing maps empty cells (and "nan") to NaN instead of failing;
// anything else non-numeric raises ParseError(line, col), 1-based.
CsvTable read_csv(const std::filesystem::path& path, bool allow_missing = false);

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const Eigen::MatrixXd& values);

// Adjacency CSV stores weights(i, j) at row i, column j, header = names.
void write_adjacency(const std::filesystem::path& path, const Eigen::MatrixXd& weights,
                     const std::vector<std::string>& names);

// One variable index per line.
void write_order(const std::filesystem::path& path, const CausalOrder& order);

std::string format_double(double v);  // %.17g

// FNV-1a 64 content hash as 16 hex digits, used by run manifests.
std::string digest_file(const std::filesystem::path& path);

}  // namespace plingam
