#include "table.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace cograte::cli {

std::string format_number(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json j;
  j["command"] = table.command;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  return j.dump(2) + "\n";
}

std::string to_gnuplot_stub(const Table& table, const std::string& csv_name) {
  std::string out;
  out += "set datafile separator ','\n";
  out += "set key autotitle columnhead\n";
  out += "set xlabel '" + (table.columns.empty() ? std::string() : table.columns[0]) + "'\n";
  out += "plot ";
  for (std::size_t c = 1; c < table.columns.size(); ++c) {
    if (c > 1) out += ", ";
    out += "'" + csv_name + "' using 1:" + std::to_string(c + 1) + " with lines";
  }
  out += "\n";
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path.string());
  }
  out << content;
}

}  // namespace

std::vector<std::string> write_table(const Table& table, const OutputSpec& spec) {
  if (spec.format != "csv" && spec.format != "json" && spec.format != "both") {
    throw std::invalid_argument("format must be csv, json or both");
  }
  std::filesystem::path csv_path =
      spec.path.empty() ? table.command + ".csv" : spec.path;
  if (csv_path.is_relative()) {
    if (const char* dir = std::getenv("COGRATE_OUT_DIR"); dir != nullptr && *dir) {
      csv_path = std::filesystem::path(dir) / csv_path;
    }
  }
  std::filesystem::path json_path = csv_path;
  json_path.replace_extension(".json");
  std::filesystem::path gp_path = csv_path;
  gp_path.replace_extension(".gp");

  std::vector<std::string> written;
  if (spec.format == "csv" || spec.format == "both") {
    write_file(csv_path, to_csv(table));
    written.push_back(csv_path.string());
  }
  if (spec.format == "json" || spec.format == "both") {
    write_file(json_path, to_json(table));
    written.push_back(json_path.string());
  }
  if (spec.gnuplot) {
    write_file(gp_path, to_gnuplot_stub(table, csv_path.filename().string()));
    written.push_back(gp_path.string());
  }
  return written;
}

}  // namespace cograte::cli
