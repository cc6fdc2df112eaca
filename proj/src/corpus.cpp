#include "lsasumm/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lsasumm/errors.hpp"

namespace lsasumm {

namespace fs = std::filesystem;

namespace {

CorpusManifest scan_directory(const fs::path& root) {
  CorpusManifest manifest;
  const fs::path docs_dir = root / "docs";
  if (!fs::is_directory(docs_dir)) {
    throw CorpusError("corpus directory has no docs/ subdirectory: " + root.string());
  }
  for (const auto& entry : fs::directory_iterator(docs_dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    ManifestEntry doc;
    doc.id = entry.path().stem().string();
    doc.path = entry.path();
    const fs::path refs_dir = root / "refs" / doc.id;
    if (fs::is_directory(refs_dir)) {
      for (const auto& ref : fs::directory_iterator(refs_dir)) {
        if (ref.is_regular_file()) doc.references.push_back(ref.path());
      }
      std::sort(doc.references.begin(), doc.references.end());
    }
    manifest.documents.push_back(std::move(doc));
  }
  return manifest;
}

CorpusManifest parse_json_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open manifest: " + path.string());
  nlohmann::json json;
  try {
    in >> json;
  } catch (const nlohmann::json::exception& e) {
    throw CorpusError("malformed manifest " + path.string() + ": " + e.what());
  }

  CorpusManifest manifest;
  const fs::path base = path.parent_path();
  try {
    if (json.contains("ratio")) {
      manifest.budget = Budget::from_ratio(json.at("ratio").get<double>());
    } else if (json.contains("sentences")) {
      manifest.budget = Budget::from_sentences(json.at("sentences").get<std::size_t>());
    }
    for (const auto& doc : json.at("documents")) {
      ManifestEntry entry;
      entry.id = doc.at("id").get<std::string>();
      entry.path = base / fs::path(doc.at("path").get<std::string>());
      if (doc.contains("references")) {
        for (const auto& ref : doc.at("references")) {
          entry.references.push_back(base / fs::path(ref.get<std::string>()));
        }
      }
      manifest.documents.push_back(std::move(entry));
    }
  } catch (const nlohmann::json::exception& e) {
    throw CorpusError("malformed manifest " + path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CorpusError("invalid manifest " + path.string() + ": " + e.what());
  }
  return manifest;
}

}  // namespace

CorpusManifest load_manifest(const fs::path& path) {
  if (!fs::exists(path)) throw CorpusError("manifest not found: " + path.string());
  CorpusManifest manifest =
      fs::is_directory(path) ? scan_directory(path) : parse_json_manifest(path);

  std::sort(manifest.documents.begin(), manifest.documents.end(),
            [](const ManifestEntry& a, const ManifestEntry& b) { return a.id < b.id; });
  for (const ManifestEntry& doc : manifest.documents) {
    if (!fs::is_regular_file(doc.path)) {
      throw CorpusError("document file missing for '" + doc.id + "': " + doc.path.string());
    }
    for (const fs::path& ref : doc.references) {
      if (!fs::is_regular_file(ref)) {
        throw CorpusError("reference file missing for '" + doc.id + "': " + ref.string());
      }
    }
  }
  return manifest;
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace lsasumm
