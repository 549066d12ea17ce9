#include "carter/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <json.hpp>

#include "carter/error.hpp"
#include "carter/group_file.hpp"

namespace carter {

CorpusSummary run_corpus(std::filesystem::path const& directory, Command command,
                         Limits const& limits, unsigned threads) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory)) {
    fail(ErrorCode::ParseError, "not a directory: " + directory.string());
  }
  std::vector<fs::path> files;
  for (auto const& item : fs::directory_iterator(directory)) {
    if (item.is_regular_file() && item.path().filename().string().front() != '.') {
      files.push_back(item.path());
    }
  }
  std::sort(files.begin(), files.end());

  CorpusSummary summary;
  summary.command = command;
  summary.entries.resize(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      auto& entry = summary.entries[i];
      entry.file = files[i].filename().string();
      entry.id = files[i].stem().string();
      try {
        auto const file = read_group_file(files[i]);
        entry.id = file.id;
        auto const result = run_command(command, file.group, file.id, limits);
        entry.record = result.record;
        entry.status = result.violation ? "violation" : "ok";
      } catch (std::exception const& e) {
        entry.status = "error";
        entry.error = e.what();
      }
    }
  };
  unsigned const count = std::max(1u, threads ? threads : std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(count, files.size()); ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) t.join();

  std::sort(summary.entries.begin(), summary.entries.end(), [](auto const& a, auto const& b) {
    return std::tie(a.id, a.file) < std::tie(b.id, b.file);
  });
  for (auto const& e : summary.entries) {
    if (e.status == "ok") ++summary.ok;
    else if (e.status == "violation") ++summary.violations;
    else ++summary.errors;
  }
  return summary;
}

std::string corpus_record(CorpusSummary const& summary, Limits const& limits) {
  using Json = nlohmann::ordered_json;
  Json groups = Json::array();
  for (auto const& e : summary.entries) {
    Json g{{"id", e.id}, {"file", e.file}, {"status", e.status}};
    if (!e.error.empty()) g["error"] = e.error;
    if (!e.record.empty()) g["record"] = Json::parse(e.record);
    groups.push_back(std::move(g));
  }
  Json j{{"command", "corpus"},
         {"verifier", to_string(summary.command)},
         {"limits", Json{{"exhaustive_subgroups", limits.exhaustive_subgroups},
                         {"pruned_carter", limits.pruned_carter},
                         {"element_action", limits.element_action},
                         {"normal_subgroups", limits.normal_subgroups},
                         {"overgroups", limits.overgroups}}},
         {"groups", std::move(groups)},
         {"summary", Json{{"files", summary.entries.size()},
                          {"ok", summary.ok},
                          {"violations", summary.violations},
                          {"errors", summary.errors}}}};
  return j.dump();
}

}  // namespace carter
