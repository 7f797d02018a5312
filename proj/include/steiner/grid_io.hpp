#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "steiner/grid.hpp"

namespace steiner {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

/// Text grid format: first line "n L", then n lines of n space-separated
/// samples, row 0 (lowest y) first. Lines starting with '#' are comments
/// and are ignored by the reader; the writer places the stanza lines there.
/// Values are written in shortest round-trip form, so read(write(f)) == f
/// bit for bit.
void write_grid(std::ostream& os, const GridFunction& f,
                std::span<const std::string> stanza = {});
void write_grid_file(const std::string& path, const GridFunction& f,
                     std::span<const std::string> stanza = {});
GridFunction read_grid(std::istream& is);
GridFunction read_grid_file(const std::string& path);

/// 8-bit ASCII PGM (P2) scaled so the maximum sample maps to 255; the
/// scale is recorded in the comment line. Top image row is the highest y.
void write_pgm(std::ostream& os, const GridFunction& f);
void write_pgm_file(const std::string& path, const GridFunction& f);

/// "rank,radius,value" CSV of the radial profile in canonical fill order.
void write_profile_csv(std::ostream& os, const GridFunction& f,
                       std::span<const std::string> stanza = {});
void write_profile_csv_file(const std::string& path, const GridFunction& f,
                            std::span<const std::string> stanza = {});

}  // namespace steiner
