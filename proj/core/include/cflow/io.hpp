#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cflow/fields.hpp"

namespace cflow {

/// Scalar field file: one JSON header line with the grid metadata,
/// then count little-endian 64-bit floats in storage order.
void write_field(const std::filesystem::path& path, const ScalarField& f);
ScalarField read_field(const std::filesystem::path& path);

/// Vector fields are stored as one scalar field file per component,
/// suffixed _c0, _c1 (, _c2) before the extension.
void write_vector_field(const std::filesystem::path& base, const VectorField& f);
VectorField read_vector_field(const std::filesystem::path& base, const Grid& g);
std::filesystem::path vector_component_path(const std::filesystem::path& base, int d);

/// Masks: binary PGM (P5), 0 = outside, 255 = inside, row j=0 written
/// first. In 3D, a directory of per-slice PGMs plus a stack.json manifest.
void write_mask(const std::filesystem::path& path, const SetMask& m);
SetMask read_mask(const std::filesystem::path& path, const Grid& g);

/// CSV with header `t,r` and 12 significant digits.
void write_radius_csv(const std::filesystem::path& path,
                      const std::vector<std::pair<double, double>>& rows);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace cflow
