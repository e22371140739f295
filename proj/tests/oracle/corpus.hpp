#pragma once

// Corpus manifest access shared by the test suites and the regeneration tool.

#include <string>
#include <vector>

#include "augcat/dga.hpp"

namespace augcat::oracle {

struct CorpusEntry {
    std::string id;
    std::string file;         // relative to the corpus directory
    std::string field_label;  // "2^m"
};

std::vector<CorpusEntry> load_corpus(const std::string& corpus_dir);

std::string read_file(const std::string& path);

Dga load_entry(const std::string& corpus_dir, const CorpusEntry& entry);

}  // namespace augcat::oracle
