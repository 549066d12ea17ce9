#include "support/corpus.hpp"

#include <algorithm>
#include <filesystem>

namespace testing_support {

std::string corpus_dir() { return CARTER_CORPUS_DIR; }

std::string fixture_path(std::string const& name) {
  return std::string(CARTER_FIXTURE_DIR) + "/" + name;
}

std::vector<carter::GroupFile> load_corpus(std::string const& subdirectory) {
  std::vector<carter::GroupFile> files;
  for (auto const& item :
       std::filesystem::directory_iterator(std::filesystem::path(corpus_dir()) / subdirectory)) {
    if (item.is_regular_file()) files.push_back(carter::read_group_file(item.path()));
  }
  std::sort(files.begin(), files.end(),
            [](auto const& a, auto const& b) { return a.id < b.id; });
  return files;
}

}  // namespace testing_support
