#pragma once

// Text matrix format: a header line `<rows> <cols> <F2|Z>` followed by rows of
// whitespace-separated entries. Lines starting with '#' are ignored.
//
// Tower manifests hold `<n> <a>` and then one level file per line (C_1 first);
// gadget manifests hold lines `<key> <path>`. Paths are relative to the
// manifest's directory.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "codelattice/gf2.hpp"
#include "codelattice/zlattice.hpp"

namespace codelattice {

/// Integer matrix stored by column.
struct IntMatrix {
  std::size_t rows = 0;
  std::vector<IntVector> columns;
};

using ParsedMatrix = std::variant<BinaryMatrix, IntMatrix>;

ParsedMatrix parse_matrix(std::istream& in);
ParsedMatrix read_matrix(const std::filesystem::path& path);
BinaryMatrix read_binary_matrix(const std::filesystem::path& path);
/// F2 files are accepted and lifted entry-wise.
IntMatrix read_int_matrix(const std::filesystem::path& path);

std::string format_matrix(const BinaryMatrix& m);
std::string format_matrix(const IntMatrix& m);
/// The lattice basis as an n × rank Z matrix.
std::string format_lattice(const Lattice& lattice);

CodeTower read_tower(const std::filesystem::path& manifest);
/// key -> resolved path.
std::map<std::string, std::filesystem::path> read_manifest(
    const std::filesystem::path& manifest);

}  // namespace codelattice
