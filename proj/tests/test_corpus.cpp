#include <gtest/gtest.h>

#include <map>
#include <set>

#include "bracketlab/corpus.hpp"
#include "bracketlab/errors.hpp"

using namespace bracketlab;

namespace {

class MapSource : public CorpusSource {
 public:
  using Files = std::map<std::string, std::string>;
  explicit MapSource(Files files) : files_(std::move(files)) {}
  std::string read(const std::string& path) const override {
    const auto it = files_.find(path);
    if (it == files_.end()) throw InputError("missing " + path);
    return it->second;
  }
  std::string describe() const override { return "<map>"; }

 private:
  std::map<std::string, std::string> files_;
};

}  // namespace

TEST(Corpus, BundledCorpusPasses) {
  const auto report = check_all(EmbeddedSource{});
  for (const auto& r : report.results) EXPECT_TRUE(r.passed) << r.kind << " " << r.subject << ": " << r.detail;
  EXPECT_GT(report.results.size(), 100u);
}

TEST(Corpus, DirectoryMatchesEmbedded) {
  const auto a = check_all(EmbeddedSource{});
  const auto b = check_all(DirectorySource(BRACKETLAB_TEST_CORPUS_DIR));
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    EXPECT_EQ(a.results[i].subject, b.results[i].subject);
    EXPECT_EQ(a.results[i].passed, b.results[i].passed);
  }
}

TEST(Corpus, Deterministic) {
  EXPECT_EQ(to_json(check_all(EmbeddedSource{})), to_json(check_all(EmbeddedSource{})));
}

TEST(Corpus, EmptyManifestRunsNothing) {
  const auto report = check_all(MapSource(MapSource::Files{{"manifest.json", "{}"}}));
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.results.empty());
}

TEST(Corpus, NegativeControlsAreTheOnlyFailures) {
  // The same files with every expectation flipped to "pass".
  const auto& files = embedded_corpus_files();
  std::map<std::string, std::string> copy(files.begin(), files.end());
  auto manifest = nlohmann::json::parse(copy.at("manifest.json"));
  std::set<std::string> controls;
  for (const char* list : {"biquandles", "brackets", "cocycles"}) {
    for (auto& e : manifest[list]) {
      if (e["expected_verification"] == "fail") controls.insert(e["name"].get<std::string>());
      e["expected_verification"] = "pass";
    }
  }
  copy["manifest.json"] = manifest.dump();
  const auto report = check_all(MapSource(copy));
  std::set<std::string> failed;
  for (const auto& r : report.results) {
    if (!r.passed) {
      EXPECT_EQ(r.kind, "verify");
      failed.insert(r.subject.substr(r.subject.find(' ') + 1));
    }
  }
  EXPECT_EQ(failed, controls);
  EXPECT_GE(controls.size(), 3u);
}

TEST(Corpus, ManifestErrors) {
  EXPECT_THROW(load_manifest(MapSource(MapSource::Files{})), InputError);
  EXPECT_THROW(load_manifest(MapSource(MapSource::Files{{"manifest.json", R"({"diagrams": [{"name": "a", "file": "a.json"}]})"}})),
               InputError);
  EXPECT_THROW(load_manifest(MapSource(MapSource::Files{{"manifest.json",
                                         R"({"diagrams": [{"name": "a", "file": "a.json", "equivalent_to": "b"}]})"},
                                        {"a.json", "{}"}})),
               InputError);
  EXPECT_THROW(load_manifest(MapSource(MapSource::Files{{"manifest.json",
                                         R"({"diagrams": [{"name": "a", "file": "a.json"}, {"name": "a", "file": "a.json"}]})"},
                                        {"a.json", "{}"}})),
               InputError);
}
