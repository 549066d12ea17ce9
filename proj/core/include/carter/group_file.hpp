#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "carter/families.hpp"
#include "carter/group.hpp"

namespace carter {

/// A group description:
///
///   # id: S3            optional "# key: value" metadata lines
///   degree 3
///   (1 2)               one generator per line, 1-indexed cycles
///   (1 2 3)
///
/// or `cayley N` followed by N rows of N 1-indexed entries, row 1 and
/// column 1 being the identity.
struct GroupFile {
  std::string id;
  std::size_t degree = 1;
  std::vector<std::string> generators;
  std::optional<CayleyTable> cayley;  // 0-indexed
  std::vector<std::pair<std::string, std::string>> metadata;
  FiniteGroup group;

  std::optional<std::string> meta(std::string_view key) const;
};

/// Throws ParseError (with line and column), DegreeMismatch, NotALatinSquare.
GroupFile parse_group_file(std::string_view text, std::string fallback_id = {});

/// Reads a file; the id defaults to the file stem.
GroupFile read_group_file(std::filesystem::path const& path);

/// Generator form of G, readable by parse_group_file.
std::string serialize_group(FiniteGroup const& g, std::string_view id = {});

/// Cayley form, rows in element order.
std::string serialize_cayley(CayleyTable const& table, std::string_view id = {});

}  // namespace carter
