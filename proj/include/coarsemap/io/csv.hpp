#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "coarsemap/decay_matrix.hpp"

namespace coarsemap::io {

/// 17 significant digits, which reproduces every double exactly.
std::string format_value(double v);

/// Reads the matrix format
///
///   site,<id_0>,...,<id_{n-1}>
///   <id_i>,v_i0,...,v_i,n-1
///
/// Row labels must repeat the header labels in the same order. Blank lines
/// are ignored. Malformed input raises ParseError naming the line and the
/// 1-based column (field index); the table itself is then validated by
/// build_decay_matrix.
DecayMatrix read_decay_matrix(std::istream& in, bool symmetrize = false);
DecayMatrix read_decay_matrix(const std::filesystem::path& path, bool symmetrize = false);

void write_decay_matrix(std::ostream& out, const DecayMatrix& f);
void write_decay_matrix(const std::filesystem::path& path, const DecayMatrix& f);

}  // namespace coarsemap::io
