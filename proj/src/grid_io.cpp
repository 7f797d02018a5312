#include "steiner/grid_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace steiner {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_grid(std::ostream& os, const GridFunction& f,
                std::span<const std::string> stanza) {
  const int n = f.resolution();
  os << n << " " << format_double(f.half_width()) << "\n";
  for (const std::string& line : stanza) os << "# " << line << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) os << " ";
      os << format_double(f.at(i, j));
    }
    os << "\n";
  }
}

void write_grid_file(const std::string& path, const GridFunction& f,
                     std::span<const std::string> stanza) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_grid(os, f, stanza);
  if (!os) throw std::runtime_error("write failed: " + path);
}

namespace {

// Tokens of all non-comment lines.
std::vector<std::string> read_tokens(std::istream& is) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(is, line)) {
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

double parse_double(const std::string& tok) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + tok.size())
    throw std::runtime_error("grid file: bad number '" + tok + "'");
  return v;
}

}  // namespace

GridFunction read_grid(std::istream& is) {
  const std::vector<std::string> tokens = read_tokens(is);
  if (tokens.size() < 2) throw std::runtime_error("grid file: missing header");
  int n = 0;
  {
    const auto& t = tokens[0];
    const auto res = std::from_chars(t.data(), t.data() + t.size(), n);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size() || n <= 0)
      throw std::runtime_error("grid file: bad resolution '" + t + "'");
  }
  const double half_width = parse_double(tokens[1]);
  const std::size_t expected = 2 + static_cast<std::size_t>(n) * n;
  if (tokens.size() != expected)
    throw std::runtime_error("grid file: expected " +
                             std::to_string(expected - 2) + " samples, got " +
                             std::to_string(tokens.size() - 2));
  std::vector<double> values;
  values.reserve(expected - 2);
  for (std::size_t t = 2; t < tokens.size(); ++t)
    values.push_back(parse_double(tokens[t]));
  try {
    return GridFunction::from_values(n, half_width, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("grid file: ") + e.what());
  }
}

GridFunction read_grid_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return read_grid(is);
}

void write_pgm(std::ostream& os, const GridFunction& f) {
  const int n = f.resolution();
  const double maxv = f.max_value();
  os << "P2\n";
  os << "# max sample " << format_double(maxv)
     << " maps to 255; top row is y = +" << format_double(f.half_width())
     << "\n";
  os << n << " " << n << "\n255\n";
  for (int i = n - 1; i >= 0; --i) {
    for (int j = 0; j < n; ++j) {
      int pix = 0;
      if (maxv > 0.0)
        pix = static_cast<int>(std::lround(f.at(i, j) / maxv * 255.0));
      pix = std::max(0, std::min(255, pix));
      if (j > 0) os << " ";
      os << pix;
    }
    os << "\n";
  }
}

void write_pgm_file(const std::string& path, const GridFunction& f) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_pgm(os, f);
  if (!os) throw std::runtime_error("write failed: " + path);
}

void write_profile_csv(std::ostream& os, const GridFunction& f,
                       std::span<const std::string> stanza) {
  for (const std::string& line : stanza) os << "# " << line << "\n";
  os << "rank,radius,value\n";
  for (const RadialSample& s : radial_profile(f))
    os << s.rank << "," << format_double(s.radius) << ","
       << format_double(s.value) << "\n";
}

void write_profile_csv_file(const std::string& path, const GridFunction& f,
                            std::span<const std::string> stanza) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_profile_csv(os, f, stanza);
  if (!os) throw std::runtime_error("write failed: " + path);
}

}  // namespace steiner
