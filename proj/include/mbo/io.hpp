/// @file io.hpp
/// @brief File formats: PGM (P5) labels, raw fractional fields, CSV tables.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mbo/geometry.hpp"
#include "mbo/phase_field.hpp"

namespace mbo {

/// Write phase labels (argmax membership) as binary PGM, one byte per vertex,
/// row-major; grid dimensions come from the geometry.
void write_label_pgm(const std::string& path, const DiscreteGeometry& geom, const PhaseField& u);

/// Read a PGM (P5) label image; dimensions must match the grid.
std::vector<int> read_label_pgm(const std::string& path, const DiscreteGeometry& geom);

/// Raw fractional field: one-line text header "MBOF1 P n_vertices" followed by
/// P * n_vertices little-endian 64-bit reals, phase-major.
void write_raw_field(const std::string& path, const PhaseField& u);
PhaseField read_raw_field(const std::string& path);

/// CSV of n reals (comma- and/or newline-separated).
std::vector<double> read_csv_reals(const std::string& path);

}  // namespace mbo
