#pragma once

#include <string>
#include <string_view>

#include "carter/carter.hpp"
#include "carter/catalog.hpp"
#include "carter/lemmas.hpp"
#include "carter/wreath.hpp"

namespace carter {

enum class Format { text, structured };

/// "text" or "structured". Throws ParseError.
Format parse_format(std::string_view name);

enum class Command { carter, star, theorem, lemma1, lemma3, lemma5 };

std::string_view to_string(Command c);
/// Throws ParseError for unknown names.
Command parse_command(std::string_view name);

/// A per-group record as JSON text with a fixed field order.
struct CommandResult {
  std::string record;
  bool violation = false;  // a verifier contradicted a proved statement
};

CommandResult run_command(Command command, FiniteGroup const& g,
                          std::string const& id, Limits const& limits);

std::string carter_record(CarterReport const& r, Limits const& limits);
std::string star_record(StarReport const& r, std::uint64_t order, Limits const& limits);
std::string theorem_record(TheoremReport const& r, std::uint64_t order,
                           Limits const& limits);
std::string catalog_record(std::string_view family, FamilyParameters const& params,
                           ExtensionDescriptor const& extension,
                           CatalogResult const& result);

/// Renders a JSON record: pretty JSON for `structured`, indented
/// "key: value" lines for `text`.
std::string render(std::string const& record, Format format);

}  // namespace carter
