#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "coarsemap/relation.hpp"

namespace coarsemap::io {

/// Undirected DOT graph. Nodes are filled with one colour per component
/// (largest component first); dust components are grey.
void write_dot(std::ostream& out, const Relation& e, const std::string& name = "E",
               std::optional<std::size_t> dust_cutoff = std::nullopt);

}  // namespace coarsemap::io
