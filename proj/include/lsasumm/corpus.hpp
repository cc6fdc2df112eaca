#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lsasumm/experiment.hpp"

// Corpus ingestion. A corpus is either a JSON manifest or a directory laid
// out as docs/<id>.txt with references under refs/<id>/<k>.txt.
namespace lsasumm {

struct ManifestEntry {
  std::string id;
  std::filesystem::path path;
  std::vector<std::filesystem::path> references;
};

struct CorpusManifest {
  std::vector<ManifestEntry> documents;  // sorted by id
  Budget budget = Budget::from_ratio(0.3);
};

// Loads a manifest from a JSON file ({"ratio": ..., "documents": [{"id",
// "path", "references"}]}) or scans a corpus directory. Relative paths are
// resolved against the manifest location. Throws CorpusError when a named
// file is missing.
CorpusManifest load_manifest(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace lsasumm
