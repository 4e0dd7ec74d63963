#pragma once

#include <string>
#include <vector>

namespace cograte::cli {

/// One emitted dataset: a header row plus numeric rows. The first column is
/// the swept variable (or the primary input for single-record commands).
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Numbers render with 12 significant digits ('%.12g', C locale), so emitted
/// files are reproducible byte for byte for identical inputs.
std::string format_number(double v);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);
std::string to_gnuplot_stub(const Table& table, const std::string& csv_name);

/// Where and in which formats to write a table.
struct OutputSpec {
  std::string path;    // CSV path; empty = default "<command>.csv"
  std::string format;  // csv | json | both
  bool gnuplot = false;
};

/// Resolves the CSV path (applying the COGRATE_OUT_DIR environment variable
/// to relative paths), writes the requested formats, and returns the list of
/// files written.
std::vector<std::string> write_table(const Table& table, const OutputSpec& spec);

}  // namespace cograte::cli
