#include "carter/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "carter/error.hpp"
#include "carter/kernel.hpp"

namespace carter {

namespace {

using Json = nlohmann::ordered_json;

Json subgroup_json(FiniteGroup const& g) {
  auto gens = g.generators();
  std::sort(gens.begin(), gens.end());
  Json list = Json::array();
  for (auto const& s : gens) list.push_back(s.to_string());
  return Json{{"order", g.order()}, {"generators", std::move(list)}};
}

Json limits_json(Limits const& l) {
  return Json{{"exhaustive_subgroups", l.exhaustive_subgroups},
              {"pruned_carter", l.pruned_carter},
              {"element_action", l.element_action},
              {"normal_subgroups", l.normal_subgroups},
              {"overgroups", l.overgroups}};
}

Json header(Command c, std::string const& id, std::uint64_t order) {
  return Json{{"command", to_string(c)}, {"group", id}, {"order", order}};
}

Json carter_json(CarterReport const& r, Limits const& limits) {
  Json j = header(Command::carter, r.group_id, r.group_order);
  j["limits"] = limits_json(limits);
  j["method"] = r.method;
  j["total_count"] = r.total_count;
  j["conjugate"] = r.conjugate;
  Json classes = Json::array();
  for (auto const& c : r.classes) {
    Json entry = subgroup_json(c.representative.group());
    entry["class_size"] = c.class_size;
    classes.push_back(std::move(entry));
  }
  j["classes"] = std::move(classes);
  return j;
}

Json star_json(StarReport const& r, std::uint64_t order, Limits const& limits) {
  Json j = header(Command::star, r.group_id, order);
  j["limits"] = limits_json(limits);
  Json factors = Json::array();
  for (auto const& f : r.factors) factors.push_back(f.label);
  j["factors"] = std::move(factors);
  Json entries = Json::array();
  for (auto const& e : r.entries) {
    entries.push_back(Json{{"factor_index", e.factor_index},
                           {"factor", e.factor_label},
                           {"nilpotent", subgroup_json(e.nilpotent.group())},
                           {"induced_group_order", e.induced_group_order},
                           {"carter_classes", e.carter_classes},
                           {"carter_conjugate", e.carter_conjugate}});
  }
  j["entries"] = std::move(entries);
  j["satisfied"] = r.satisfied;
  return j;
}

Json theorem_json(TheoremReport const& r, std::uint64_t order, Limits const& limits) {
  Json j = header(Command::theorem, r.carter_report.group_id, order);
  j["limits"] = limits_json(limits);
  j["star"] = r.star;
  j["star_entries"] = r.star_report.entries.size();
  j["carter_classes"] = r.carter_report.classes.size();
  j["carter_total"] = r.carter_report.total_count;
  j["carter_conjugate"] = r.carter_conjugate;
  j["verdict"] = r.verdict;
  return j;
}

Json lemma1_json(FiniteGroup const& g, std::string const& id, Limits const& limits,
                 Lemma1Report const& r) {
  Json j = header(Command::lemma1, id, g.order());
  j["limits"] = limits_json(limits);
  j["star"] = r.star;
  j["checks"] = r.checks.size();
  j["failures"] = r.failures;
  Json entries = Json::array();
  for (auto const& c : r.checks) {
    entries.push_back(Json{{"carter_index", c.carter_index},
                           {"normal", subgroup_json(c.normal.group())},
                           {"carter_in_quotient", c.holds}});
  }
  j["entries"] = std::move(entries);
  return j;
}

Json lemma3_json(FiniteGroup const& g, std::string const& id, Limits const& limits,
                 Lemma3Summary const& s) {
  Json j = header(Command::lemma3, id, g.order());
  j["limits"] = limits_json(limits);
  j["applicable"] = s.applicable;
  if (!s.applicable) {
    j["reason"] = s.reason;
  } else {
    j["normal_subgroup"] = subgroup_json(s.b.group());
  }
  Json runs = Json::array();
  for (auto const& run : s.runs) {
    Json entry{{"carter", subgroup_json(run.h.group())}};
    if (run.report) {
      auto const& r = *run.report;
      entry["k"] = r.k;
      entry["p"] = r.p;
      entry["aut_h_order"] = r.aut_h_order;
      entry["induced_order"] = r.induced_order;
      entry["claim"] = r.claim;
      entry["h1_carter"] = r.h1_carter;
      entry["bridge"] = r.bridge;
      entry["invariants"] = r.invariants;
    } else {
      entry["error"] = run.error;
    }
    runs.push_back(std::move(entry));
  }
  j["runs"] = std::move(runs);
  j["failures"] = s.failures;
  return j;
}

Json lemma5_json(FiniteGroup const& g, std::string const& id, Limits const& limits,
                 Lemma5Summary const& s) {
  Json j = header(Command::lemma5, id, g.order());
  j["limits"] = limits_json(limits);
  Json runs = Json::array();
  for (auto const& run : s.runs) {
    Json entry{{"carter_index", run.carter_index}, {"z", run.z.to_string()}};
    if (run.report) {
      auto const& r = *run.report;
      entry["overgroups_self_normalizing"] = r.overgroups_self_normalizing;
      entry["conjugates_in_ZK"] = r.conjugates_in_ZK;
      entry["center_meeting_other_carter"] = r.center_meeting_other_carter;
      entry["power_conjugacy"] = r.power_conjugacy;
      entry["conjugates_in_ZG"] = r.conjugates_in_ZG;
      entry["readings_differ"] = r.readings_differ;
      entry["overgroups_complete"] = r.overgroups_complete;
      entry["overgroups_checked"] = r.overgroups_checked;
      entry["overgroups_skipped"] = r.overgroups_skipped;
    } else {
      entry["skipped"] = run.skipped;
    }
    runs.push_back(std::move(entry));
  }
  j["runs"] = std::move(runs);
  j["failures"] = s.failures;
  return j;
}

bool is_scalar(Json const& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(Json const& v) {
  if (v.is_string()) return v.get<std::string>().empty() ? "\"\"" : v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

void render_text(Json const& object, std::size_t indent, std::ostringstream& out);

void render_value(std::string const& key, Json const& value, std::size_t indent,
                  std::ostringstream& out) {
  std::string const pad(indent, ' ');
  if (is_scalar(value)) {
    out << pad << key << ": " << scalar_text(value) << '\n';
  } else if (value.is_object()) {
    out << pad << key << ":\n";
    render_text(value, indent + 2, out);
  } else if (std::all_of(value.begin(), value.end(), is_scalar)) {
    out << pad << key << ": [";
    for (std::size_t i = 0; i < value.size(); ++i) {
      out << (i ? ", " : "") << scalar_text(value[i]);
    }
    out << "]\n";
  } else {
    out << pad << key << ":\n";
    for (auto const& item : value) {
      out << pad << "  -\n";
      render_text(item, indent + 4, out);
    }
  }
}

void render_text(Json const& object, std::size_t indent, std::ostringstream& out) {
  for (auto const& [key, value] : object.items()) render_value(key, value, indent, out);
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "structured") return Format::structured;
  throw ParseError(1, 1, "unknown format '" + std::string(name) + "'");
}

std::string_view to_string(Command c) {
  switch (c) {
    case Command::carter: return "carter";
    case Command::star: return "star";
    case Command::theorem: return "theorem";
    case Command::lemma1: return "lemma1";
    case Command::lemma3: return "lemma3";
    case Command::lemma5: return "lemma5";
  }
  return "unknown";
}

Command parse_command(std::string_view name) {
  for (auto c : {Command::carter, Command::star, Command::theorem, Command::lemma1,
                 Command::lemma3, Command::lemma5}) {
    if (to_string(c) == name) return c;
  }
  throw ParseError(1, 1, "unknown command '" + std::string(name) + "'");
}

CommandResult run_command(Command command, FiniteGroup const& g,
                          std::string const& id, Limits const& limits) {
  CommandResult result;
  Json j;
  switch (command) {
    case Command::carter:
      j = carter_json(carter_subgroups(g, limits, id), limits);
      break;
    case Command::star:
      j = star_json(check_star(g, limits, id), g.order(), limits);
      break;
    case Command::theorem: {
      auto const r = check_theorem(g, limits, id);
      result.violation = r.verdict != "consistent";
      j = theorem_json(r, g.order(), limits);
      break;
    }
    case Command::lemma1: {
      auto const r = run_lemma1(g, limits);
      result.violation = r.failures > 0;
      j = lemma1_json(g, id, limits, r);
      break;
    }
    case Command::lemma3: {
      auto const r = run_lemma3(g, limits);
      result.violation = r.failures > 0;
      j = lemma3_json(g, id, limits, r);
      break;
    }
    case Command::lemma5: {
      auto const r = run_lemma5(g, limits);
      result.violation = r.failures > 0;
      j = lemma5_json(g, id, limits, r);
      break;
    }
  }
  result.record = j.dump();
  return result;
}

std::string carter_record(CarterReport const& r, Limits const& limits) {
  return carter_json(r, limits).dump();
}

std::string star_record(StarReport const& r, std::uint64_t order, Limits const& limits) {
  return star_json(r, order, limits).dump();
}

std::string theorem_record(TheoremReport const& r, std::uint64_t order,
                           Limits const& limits) {
  return theorem_json(r, order, limits).dump();
}

std::string catalog_record(std::string_view family, FamilyParameters const& params,
                           ExtensionDescriptor const& extension,
                           CatalogResult const& result) {
  Json facts = Json::object();
  if (extension.a_equals_g) facts["a_equals_g"] = *extension.a_equals_g;
  if (extension.a_within_ghat) facts["a_within_ghat"] = *extension.a_within_ghat;
  if (extension.outer_part_is_two_group) {
    facts["outer_part_is_two_group"] = *extension.outer_part_is_two_group;
  }
  if (extension.index_in_ghat) facts["index_in_ghat"] = *extension.index_in_ghat;
  Json j{{"command", "catalog"},
         {"family", family},
         {"parameters", Json{{"l", params.l}, {"r", params.r}, {"t", params.t}}},
         {"extension", std::move(facts)},
         {"verdict", to_string(result.verdict)},
         {"row", result.citation},
         {"condition", result.condition},
         {"unevaluated", result.unevaluated},
         {"reason", result.reason}};
  return j.dump();
}

std::string render(std::string const& record, Format format) {
  Json const j = Json::parse(record);
  if (format == Format::structured) return j.dump(2) + "\n";
  std::ostringstream out;
  render_text(j, 0, out);
  return out.str();
}

}  // namespace carter
