#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bracketlab {

/// Path -> contents of the corpus compiled into the library.
const std::map<std::string, std::string>& embedded_corpus_files();

/// Where manifest-relative files are read from.
class CorpusSource {
 public:
  virtual ~CorpusSource() = default;
  /// Throws InputError when the file does not exist.
  virtual std::string read(const std::string& relative_path) const = 0;
  virtual std::string describe() const = 0;
};

class DirectorySource : public CorpusSource {
 public:
  explicit DirectorySource(std::filesystem::path root) : root_(std::move(root)) {}
  std::string read(const std::string& relative_path) const override;
  std::string describe() const override { return root_.string(); }

 private:
  std::filesystem::path root_;
};

class EmbeddedSource : public CorpusSource {
 public:
  std::string read(const std::string& relative_path) const override;
  std::string describe() const override { return "<embedded>"; }
};

struct DiagramEntry {
  std::string name;
  std::string file;
  std::optional<std::string> equivalent_to;
};

struct StructureEntry {
  std::string name;
  std::string file;
  bool expect_valid = true;
  std::string note;
  /// Extra expectations (cocycle invariants, canonical cocycle claims).
  nlohmann::json expectations;
};

struct CorpusManifest {
  std::vector<DiagramEntry> diagrams;
  std::vector<StructureEntry> biquandles;
  std::vector<StructureEntry> brackets;
  std::vector<StructureEntry> cocycles;
};

/// Validates names (unique, equivalences resolve) and that every file parses
/// as JSON. Throws InputError otherwise.
CorpusManifest load_manifest(const CorpusSource& source, const std::string& manifest_path = "manifest.json");

struct CheckResult {
  std::string kind;
  std::string subject;
  bool passed = false;
  std::string detail;
};

struct CheckAllReport {
  std::string source;
  std::vector<CheckResult> results;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

/// Runs every verification, invariance, theorem, Euler and structural check
/// the manifest implies. Deterministic; results are ordered by kind then
/// subject as generated.
CheckAllReport check_all(const CorpusSource& source, const std::string& manifest_path = "manifest.json");

nlohmann::json to_json(const CheckAllReport& report);

}  // namespace bracketlab
