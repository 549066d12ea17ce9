#pragma once

#include <string>
#include <vector>

#include "carter/group_file.hpp"

namespace testing_support {

/// Group files of a corpus subdirectory ("soluble", "nonsoluble"), by id.
std::vector<carter::GroupFile> load_corpus(std::string const& subdirectory);

std::string corpus_dir();
std::string fixture_path(std::string const& name);

}  // namespace testing_support
