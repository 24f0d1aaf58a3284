#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "config.hpp"
#include "mellinlab/types.hpp"

namespace mellinlab::cli {

using Cell = std::variant<std::string, long long, double, cplx>;

/// `re+imj` with 17 significant digits.
std::string format_complex(cplx z);
/// Accepts `a`, `a+bj`, `a-bi`, `bj`, `a,b`.
cplx parse_complex(const std::string& text);
/// Splits on `sep`; list items are never `a,b` pairs.
std::vector<std::string> split_list(const std::string& text, char sep = ',');

class Table {
 public:
  Table(std::string name, std::vector<std::string> columns);
  void add(std::vector<Cell> row);
  bool empty() const noexcept { return rows_.empty(); }
  void write(std::ostream& out, OutputFormat format) const;

 private:
  std::string name_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace mellinlab::cli
