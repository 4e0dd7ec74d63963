#include "args.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "cograte/channel.hpp"

namespace cograte::cli {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) {
    throw std::invalid_argument("malformed number: '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  for (;;) {
    const auto next = s.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(s.substr(pos));
      return parts;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

std::vector<double> arithmetic_range(double start, double step, double stop) {
  if (step == 0.0) throw std::invalid_argument("range step must be nonzero");
  const double span = (stop - start) / step;
  if (span < -0.5) {
    throw std::invalid_argument("range is empty (step points away from stop)");
  }
  const auto count = static_cast<long>(std::floor(span + 0.5)) + 1;
  if (count > 10'000'000) throw std::invalid_argument("range has too many points");
  std::vector<double> values(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) values[static_cast<std::size_t>(i)] = start + step * i;
  return values;
}

std::vector<double> geometric_range(double start, double factor, double stop) {
  if (!(start > 0.0) || !(stop > 0.0)) {
    throw std::invalid_argument("geometric range needs positive endpoints");
  }
  if (!(factor > 0.0) || factor == 1.0) {
    throw std::invalid_argument("geometric factor must be positive and != 1");
  }
  const double span = std::log(stop / start) / std::log(factor);
  if (span < -0.5) {
    throw std::invalid_argument("geometric range is empty");
  }
  const auto count = static_cast<long>(std::floor(span + 0.5)) + 1;
  if (count > 10'000'000) throw std::invalid_argument("range has too many points");
  std::vector<double> values(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    values[static_cast<std::size_t>(i)] = start * std::pow(factor, static_cast<double>(i));
  }
  return values;
}

}  // namespace

std::vector<double> parse_values(const std::string& text) {
  if (text.find(',') != std::string::npos) {
    std::vector<double> values;
    for (const auto& part : split(text, ',')) values.push_back(parse_number(part));
    if (values.empty()) throw std::invalid_argument("empty value list");
    return values;
  }
  // ':' may also appear in a leading sign-less number only as a separator.
  const auto parts = split(text, ':');
  if (parts.size() == 1) return {parse_number(text)};
  if (parts.size() != 3) {
    throw std::invalid_argument("range must be start:step:stop, got '" + text + "'");
  }
  const double start = parse_number(parts[0]);
  const std::string step_text = trim(parts[1]);
  const double stop = parse_number(parts[2]);
  if (!step_text.empty() && step_text[0] == '*') {
    return geometric_range(start, parse_number(step_text.substr(1)), stop);
  }
  return arithmetic_range(start, parse_number(step_text), stop);
}

double Param::scalar() const {
  if (values.size() != 1) {
    throw std::invalid_argument("parameter '" + label + "' must be a single value here");
  }
  return values[0];
}

Param resolve_power(const std::string& name, const std::string& db_text,
                    const std::string& linear_text, double fallback_linear) {
  if (!db_text.empty() && !linear_text.empty()) {
    throw std::invalid_argument("supply only one of --" + name + "-db and --" +
                                name + "-linear");
  }
  Param param;
  if (!db_text.empty()) {
    param.label = name + "_db";
    param.display = parse_values(db_text);
    for (const double db : param.display) param.values.push_back(db_to_linear(db));
  } else if (!linear_text.empty()) {
    param.label = name;
    param.values = parse_values(linear_text);
    param.display = param.values;
  } else if (fallback_linear >= 0.0) {
    param.label = name;
    param.values = {fallback_linear};
    param.display = param.values;
  } else {
    throw std::invalid_argument("missing required --" + name + "-db or --" +
                                name + "-linear");
  }
  return param;
}

Param resolve_plain(const std::string& name, const std::string& text,
                    double fallback) {
  Param param;
  param.label = name;
  if (!text.empty()) {
    param.values = parse_values(text);
  } else if (fallback >= 0.0) {
    param.values = {fallback};
  } else {
    throw std::invalid_argument("missing required --" + name);
  }
  param.display = param.values;
  return param;
}

std::vector<std::pair<std::string, std::string>> parse_config_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string text = trim(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": expected key = value");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": empty key or value");
    }
    entries.emplace_back(key, value);
  }
  return entries;
}

std::vector<std::string> config_to_args(
    const std::vector<std::pair<std::string, std::string>>& entries) {
  std::string command;
  std::vector<std::string> args;
  for (const auto& [key, value] : entries) {
    if (key == "command") {
      command = value;
      continue;
    }
    std::string flag = "--";
    for (const char ch : key) flag += (ch == '_') ? '-' : ch;
    if (key == "gnuplot") {
      if (value == "true" || value == "1" || value == "yes" || value == "on") {
        args.push_back(flag);
      } else if (value != "false" && value != "0" && value != "no" && value != "off") {
        throw std::invalid_argument("config: gnuplot must be a boolean, got '" + value + "'");
      }
      continue;
    }
    args.push_back(flag);
    args.push_back(value);
  }
  if (command.empty()) {
    throw std::invalid_argument("config: missing 'command' key");
  }
  if (command == "sweep") {
    throw std::invalid_argument("config: command cannot be 'sweep'");
  }
  args.insert(args.begin(), command);
  return args;
}

}  // namespace cograte::cli
