#include "carter/group_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "carter/error.hpp"

namespace carter {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view word, std::size_t line, std::size_t column) {
  if (word.empty()) throw ParseError(line, column, "expected a positive integer");
  std::size_t value = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(word[i]))) {
      throw ParseError(line, column + i, "expected a positive integer");
    }
    value = value * 10 + static_cast<std::size_t>(word[i] - '0');
    if (value > 1000000) throw ParseError(line, column, "number too large");
  }
  if (value == 0) throw ParseError(line, column, "expected a positive integer");
  return value;
}

}  // namespace

std::optional<std::string> GroupFile::meta(std::string_view key) const {
  for (auto const& [k, v] : metadata) {
    if (k == key) return v;
  }
  return std::nullopt;
}

GroupFile parse_group_file(std::string_view text, std::string fallback_id) {
  GroupFile file;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  enum class Mode { header, generators, cayley } mode = Mode::header;
  std::size_t rows_expected = 0;
  CayleyTable table;
  std::vector<Permutation> gens;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    auto const indent = std::min(line.find_first_not_of(" \t\r"), line.size());
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      auto colon = body.find(':');
      if (colon != std::string_view::npos) {
        file.metadata.emplace_back(std::string(trim(body.substr(0, colon))),
                                   std::string(trim(body.substr(colon + 1))));
      }
      continue;
    }
    std::size_t const column = indent + 1;
    if (mode == Mode::header) {
      std::istringstream words{std::string(line)};
      std::string keyword, count, extra;
      words >> keyword >> count;
      if (words >> extra) throw ParseError(line_no, column, "unexpected text after the count");
      if (keyword == "degree") {
        file.degree = parse_count(count, line_no, column + keyword.size() + 1);
        mode = Mode::generators;
      } else if (keyword == "cayley") {
        rows_expected = parse_count(count, line_no, column + keyword.size() + 1);
        mode = Mode::cayley;
      } else {
        throw ParseError(line_no, column, "expected 'degree N' or 'cayley N'");
      }
      continue;
    }
    if (mode == Mode::generators) {
      // Points beyond the stated degree are a degree mismatch, not a
      // syntax error.
      std::size_t value = 0;
      for (char c : line) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
          value = value * 10 + static_cast<std::size_t>(c - '0');
          if (value > file.degree) {
            fail(ErrorCode::DegreeMismatch,
                 "line " + std::to_string(line_no) + ": point exceeds degree " +
                     std::to_string(file.degree));
          }
        } else {
          value = 0;
        }
      }
      try {
        gens.push_back(Permutation::parse(line, file.degree));
      } catch (ParseError const& e) {
        throw ParseError(line_no, column + e.column() - 1, e.detail());
      }
      file.generators.emplace_back(line);
      continue;
    }
    if (table.size() == rows_expected) {
      throw ParseError(line_no, column, "more rows than the table size");
    }
    std::vector<std::size_t> row;
    std::istringstream words{std::string(line)};
    std::string word;
    while (words >> word) {
      std::size_t const entry = parse_count(word, line_no, column);
      if (entry > rows_expected) {
        fail(ErrorCode::DegreeMismatch, "line " + std::to_string(line_no) +
                                            ": entry exceeds the table size");
      }
      row.push_back(entry - 1);
    }
    if (row.size() != rows_expected) {
      fail(ErrorCode::DegreeMismatch, "line " + std::to_string(line_no) + ": row has " +
                                          std::to_string(row.size()) + " entries, expected " +
                                          std::to_string(rows_expected));
    }
    table.push_back(std::move(row));
  }

  if (mode == Mode::header) throw ParseError(line_no + 1, 1, "missing 'degree' or 'cayley' header");
  if (mode == Mode::cayley) {
    if (table.size() != rows_expected) {
      fail(ErrorCode::DegreeMismatch, "table has " + std::to_string(table.size()) +
                                          " rows, expected " + std::to_string(rows_expected));
    }
    file.group = from_cayley_table(table);
    file.degree = rows_expected;
    file.cayley = std::move(table);
  } else {
    file.group = FiniteGroup(file.degree, gens);
  }
  file.id = file.meta("id").value_or(std::move(fallback_id));
  return file;
}

GroupFile read_group_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_group_file(buffer.str(), path.stem().string());
}

std::string serialize_group(FiniteGroup const& g, std::string_view id) {
  std::ostringstream out;
  if (!id.empty()) out << "# id: " << id << '\n';
  out << "degree " << g.degree() << '\n';
  for (auto const& s : g.generators()) out << s.to_string() << '\n';
  return out.str();
}

std::string serialize_cayley(CayleyTable const& table, std::string_view id) {
  std::ostringstream out;
  if (!id.empty()) out << "# id: " << id << '\n';
  out << "cayley " << table.size() << '\n';
  for (auto const& row : table) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j] + 1;
    out << '\n';
  }
  return out.str();
}

}  // namespace carter
