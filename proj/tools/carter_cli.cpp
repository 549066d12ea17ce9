// Command-line front end: one subcommand per verifier, plus the catalog
// lookup and the corpus runner.
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "carter/corpus.hpp"
#include "carter/error.hpp"
#include "carter/group_file.hpp"
#include "carter/report.hpp"

namespace {

constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct Options {
  carter::Limits limits;
  std::string format = "text";
  std::string input;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--limit-subgroups", o.limits.exhaustive_subgroups,
                  "Largest group order for exhaustive subgroup enumeration")
      ->capture_default_str();
  sub->add_option("--limit-pruned", o.limits.pruned_carter,
                  "Largest group order for the nilpotent-only Carter search")
      ->capture_default_str();
  sub->add_option("--limit-degree", o.limits.element_action,
                  "Largest section order realized by the element action")
      ->capture_default_str();
  sub->add_option("--limit-overgroups", o.limits.overgroups,
                  "Largest group order for exhaustive overgroup enumeration")
      ->capture_default_str();
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
}

carter::GroupFile load(std::string const& input) {
  if (input.empty() || input == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    return carter::parse_group_file(text, "stdin");
  }
  return carter::read_group_file(input);
}

std::optional<bool> yes_no(std::string const& s) {
  if (s == "yes") return true;
  if (s == "no") return false;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Carter subgroups of finite permutation groups"};
  app.require_subcommand(1);

  Options options;
  std::string command_name;
  for (auto const* name : {"carter", "star", "theorem", "lemma1", "lemma3", "lemma5"}) {
    auto* sub = app.add_subcommand(name);
    add_common(sub, options);
    sub->add_option("file", options.input, "Group file (standard input if omitted)");
    sub->callback([&command_name, name] { command_name = name; });
  }
  app.get_subcommand("carter")->description("Carter subgroups up to conjugacy");
  app.get_subcommand("star")->description("Condition (*) over composition factors");
  app.get_subcommand("theorem")->description("Condition (*) implies conjugate Carter subgroups");
  app.get_subcommand("lemma1")->description("Carter subgroups map to Carter subgroups of quotients");
  app.get_subcommand("lemma3")->description("Wreath-product embedding and induced automorphisms");
  app.get_subcommand("lemma5")->description("Central elements of Carter subgroups");

  auto* catalog = app.add_subcommand("catalog", "Look up the almost simple classification table");
  std::string family;
  carter::FamilyParameters params;
  std::string a_equals_g = "unknown", a_within_ghat = "unknown", outer_two = "unknown";
  std::optional<std::uint64_t> index_in_ghat;
  catalog->add_option("--family", family, "alternating, sporadic, A1, Bl, Cl, 2B2, G2, F4, "
                      "2F4, E7, E8, D2l, 3D4, 2D2l, D2l+1, 2D2l+1, 2G2, E6, 2E6, Al, 2Al")
      ->required();
  catalog->add_option("--l", params.l, "Subscript parameter")->capture_default_str();
  catalog->add_option("--r", params.r, "Characteristic")->capture_default_str();
  catalog->add_option("--t", params.t, "Exponent of the field order")->capture_default_str();
  auto tri = CLI::IsMember({"yes", "no", "unknown"});
  catalog->add_option("--a-equals-g", a_equals_g, "A = G")->check(tri);
  catalog->add_option("--a-within-ghat", a_within_ghat, "A <= Ĝ")->check(tri);
  catalog->add_option("--outer-two-group", outer_two, "A/(A ∩ Ĝ) is a 2-group")->check(tri);
  catalog->add_option("--index-in-ghat", index_in_ghat, "|Ĝ : A ∩ Ĝ|");
  catalog->add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* corpus = app.add_subcommand("corpus", "Run a verifier over a directory of group files");
  std::string directory, verifier = "theorem";
  unsigned threads = 0;
  corpus->add_option("directory", directory, "Directory of group files")->required();
  corpus->add_option("--command", verifier, "Verifier to run")
      ->check(CLI::IsMember({"carter", "star", "theorem", "lemma1", "lemma3", "lemma5"}))
      ->capture_default_str();
  corpus->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");
  add_common(corpus, options);

  CLI11_PARSE(app, argc, argv);
  auto const format = carter::parse_format(options.format);

  try {
    if (app.got_subcommand(catalog)) {
      carter::ExtensionDescriptor x;
      x.a_equals_g = yes_no(a_equals_g);
      x.a_within_ghat = yes_no(a_within_ghat);
      x.outer_part_is_two_group = yes_no(outer_two);
      x.index_in_ghat = index_in_ghat;
      auto const result = carter::catalog_lookup(carter::parse_family(family), params, x);
      std::cout << carter::render(carter::catalog_record(family, params, x, result), format);
      return 0;
    }
    if (app.got_subcommand(corpus)) {
      auto const summary = carter::run_corpus(directory, carter::parse_command(verifier),
                                              options.limits, threads);
      std::cout << carter::render(carter::corpus_record(summary, options.limits), format);
      return summary.violations > 0 ? kViolation : 0;
    }
    auto const file = load(options.input);
    auto const result = carter::run_command(carter::parse_command(command_name), file.group,
                                            file.id, options.limits);
    std::cout << carter::render(result.record, format);
    return result.violation ? kViolation : 0;
  } catch (carter::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
