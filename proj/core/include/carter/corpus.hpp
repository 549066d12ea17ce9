#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "carter/report.hpp"

namespace carter {

struct CorpusEntry {
  std::string id;
  std::string file;
  std::string status;  // "ok", "violation" or "error"
  std::string error;
  std::string record;  // JSON record of the command, empty on error
};

struct CorpusSummary {
  Command command = Command::theorem;
  std::vector<CorpusEntry> entries;  // sorted by id, then file name
  std::size_t ok = 0;
  std::size_t violations = 0;
  std::size_t errors = 0;
};

/// Runs `command` on every regular file of `directory` in parallel. Per-file
/// failures are recorded, never thrown. threads = 0 uses the hardware
/// concurrency.
CorpusSummary run_corpus(std::filesystem::path const& directory, Command command,
                         Limits const& limits, unsigned threads = 0);

/// JSON record of the summary with the limits in force.
std::string corpus_record(CorpusSummary const& summary, Limits const& limits);

}  // namespace carter
