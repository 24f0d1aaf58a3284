#include "output.hpp"

#include <algorithm>
#include <regex>

#include <fmt/format.h>
#include <json.hpp>

namespace mellinlab::cli {

// adding +0.0 folds a signed zero into +0
std::string format_complex(cplx z) { return fmt::format("{:.17g}{:+.17g}j", z.real() + 0.0, z.imag() + 0.0); }

cplx parse_complex(const std::string& raw) {
  std::string t;
  std::remove_copy_if(raw.begin(), raw.end(), std::back_inserter(t), [](char c) { return c == ' '; });
  static const std::string num = R"([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)";
  static const std::regex real_only("(" + num + ")");
  static const std::regex imag_only("(" + num + ")?[ij]");
  static const std::regex both("(" + num + ")([-+](?:\\d+\\.?\\d*|\\.\\d+)(?:[eE][-+]?\\d+)?)?[ij]");
  std::smatch m;
  if (std::regex_match(t, m, real_only)) return {std::stod(m[1]), 0.0};
  if (std::regex_match(t, m, both) && m[2].matched) return {std::stod(m[1]), std::stod(m[2])};
  if (std::regex_match(t, m, imag_only)) {
    std::string c = m[1].matched ? m[1].str() : "1";
    if (c == "+" || c == "-") c += "1";
    return {0.0, std::stod(c)};
  }
  throw ConfigError("cannot parse complex number '" + raw + "'");
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

Table::Table(std::string name, std::vector<std::string> columns) : name_(std::move(name)), columns_(std::move(columns)) {}

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw std::logic_error("Table: row width mismatch in " + name_);
  rows_.push_back(std::move(row));
}

namespace {

std::string text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>)
          return v;
        else if constexpr (std::is_same_v<T, long long>)
          return std::to_string(v);
        else if constexpr (std::is_same_v<T, double>)
          return fmt::format("{:.17g}", v);
        else
          return format_complex(v);
      },
      c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

void Table::write(std::ostream& out, OutputFormat format) const {
  switch (format) {
    case OutputFormat::csv: {
      for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
      out << '\n';
      for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(text(r[i]));
        out << '\n';
      }
      break;
    }
    case OutputFormat::json_lines: {
      for (const auto& r : rows_) {
        nlohmann::ordered_json j;
        j["table"] = name_;
        for (std::size_t i = 0; i < r.size(); ++i) {
          if (auto d = std::get_if<double>(&r[i]))
            j[columns_[i]] = *d;
          else if (auto n = std::get_if<long long>(&r[i]))
            j[columns_[i]] = *n;
          else
            j[columns_[i]] = text(r[i]);
        }
        out << j.dump() << '\n';
      }
      break;
    }
    case OutputFormat::table: {
      std::vector<std::size_t> width(columns_.size());
      for (std::size_t i = 0; i < columns_.size(); ++i) width[i] = columns_[i].size();
      std::vector<std::vector<std::string>> cells;
      for (const auto& r : rows_) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < r.size(); ++i) {
          line.push_back(text(r[i]));
          width[i] = std::max(width[i], line.back().size());
        }
        cells.push_back(std::move(line));
      }
      out << "[" << name_ << "]\n";
      auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "  " : "") << fmt::format("{:<{}}", line[i], width[i]);
        out << '\n';
      };
      emit(columns_);
      for (const auto& line : cells) emit(line);
      out << '\n';
      break;
    }
  }
}

}  // namespace mellinlab::cli
