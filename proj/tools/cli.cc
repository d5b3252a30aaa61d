// Copyright 2026 The Rubriq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "rubriq/error.h"
#include "rubriq/readability.h"
#include "rubriq/storage.h"
#include "rubriq/text.h"

namespace rubriq::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

[[noreturn]] void ConfigError(const std::string& message) {
  throw Error(ErrorCode::kConfig, message);
}

template <typename T>
T Get(const nlohmann::json& value, std::string_view key) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    ConfigError("config key '" + std::string(key) + "' has the wrong type");
  }
}

BackendKind ParseBackendKind(std::string_view name) {
  if (name == "mock") return BackendKind::kMock;
  if (name == "remote") return BackendKind::kRemote;
  ConfigError("unknown backend '" + std::string(name) +
              "' (expected mock or remote)");
}

std::optional<NormalizeMode> ParseNormalization(std::string_view name) {
  if (name == "none") return std::nullopt;
  if (auto mode = ParseNormalizeMode(name)) return mode;
  ConfigError("unknown normalization '" + std::string(name) +
              "' (expected none, min_max or range_divide)");
}

void CheckKeys(const nlohmann::json& object, std::string_view where,
               std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) ConfigError(std::string(where) + " must be an object");
  for (const auto& item : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      ConfigError("unknown config key '" + std::string(where) + item.key() +
                  "'");
    }
  }
}

}  // namespace

CliConfig ParseCliConfig(std::string_view json) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  CheckKeys(root, "",
            {"backend", "summarizer_model", "reviewer_model",
             "system_instructions", "summary_instructions", "always_summarize",
             "context_budget_tokens", "parallelism", "lenient", "seed",
             "temperature", "review_max_output_tokens", "epistemic_preamble",
             "empirical_notice", "thresholds", "normalization", "endpoint",
             "text_path", "retry", "timeout_ms", "lexicon", "corpus", "rubric",
             "ontology"});

  CliConfig cfg;
  PipelineConfig& p = cfg.pipeline;
  for (const auto& [key, value] : root.items()) {
    if (key == "backend") {
      cfg.backend = ParseBackendKind(Get<std::string>(value, key));
    } else if (key == "summarizer_model") {
      p.summarizer_model = Get<std::string>(value, key);
    } else if (key == "reviewer_model") {
      p.reviewer_model = Get<std::string>(value, key);
    } else if (key == "system_instructions") {
      p.system_instructions = Get<std::string>(value, key);
    } else if (key == "summary_instructions") {
      p.summary_instructions = Get<std::string>(value, key);
    } else if (key == "always_summarize") {
      p.always_summarize = Get<bool>(value, key);
    } else if (key == "context_budget_tokens") {
      p.context_budget_tokens = Get<std::int64_t>(value, key);
    } else if (key == "parallelism") {
      p.parallelism = Get<int>(value, key);
    } else if (key == "lenient") {
      p.lenient = Get<bool>(value, key);
    } else if (key == "seed") {
      if (!value.is_null()) p.seed = Get<std::int64_t>(value, key);
    } else if (key == "temperature") {
      p.temperature = Get<double>(value, key);
    } else if (key == "review_max_output_tokens") {
      p.review_max_output_tokens = Get<std::int64_t>(value, key);
    } else if (key == "epistemic_preamble") {
      p.frames.epistemic_preamble = Get<std::string>(value, key);
    } else if (key == "empirical_notice") {
      p.frames.empirical_notice = Get<std::string>(value, key);
    } else if (key == "thresholds") {
      CheckKeys(value, "thresholds.", {"encouraging", "critical"});
      if (value.contains("encouraging")) {
        cfg.thresholds.encouraging = Get<double>(value["encouraging"], key);
      }
      if (value.contains("critical")) {
        cfg.thresholds.critical = Get<double>(value["critical"], key);
      }
    } else if (key == "normalization") {
      cfg.normalization = ParseNormalization(Get<std::string>(value, key));
    } else if (key == "endpoint") {
      cfg.endpoint = Get<std::string>(value, key);
    } else if (key == "text_path") {
      cfg.text_path = Get<std::string>(value, key);
    } else if (key == "retry") {
      CheckKeys(value, "retry.",
                {"max_attempts", "base_delay_ms", "backoff_factor"});
      if (value.contains("max_attempts")) {
        cfg.retry.max_attempts = Get<int>(value["max_attempts"], key);
      }
      if (value.contains("base_delay_ms")) {
        cfg.retry.base_delay_ms =
            Get<std::int64_t>(value["base_delay_ms"], key);
      }
      if (value.contains("backoff_factor")) {
        cfg.retry.backoff_factor = Get<double>(value["backoff_factor"], key);
      }
    } else if (key == "timeout_ms") {
      cfg.timeout_ms = Get<std::int64_t>(value, key);
    } else if (key == "lexicon") {
      cfg.lexicon_path = Get<std::string>(value, key);
    } else if (key == "corpus") {
      cfg.corpus_path = Get<std::string>(value, key);
    } else if (key == "rubric") {
      cfg.rubric_path = Get<std::string>(value, key);
    } else if (key == "ontology") {
      cfg.ontology_path = Get<std::string>(value, key);
    }
  }

  try {
    p.Validate();
    cfg.thresholds.Validate();
    cfg.retry.Validate();
  } catch (const Error& e) {
    ConfigError(e.what());
  }
  if (cfg.timeout_ms <= 0) ConfigError("timeout_ms must be positive");
  return cfg;
}

namespace {

// ---------------------------------------------------------------------------
// Helpers shared by the subcommands

struct Globals {
  std::string config_path;
  std::string out_path;
  std::string format;
};

class Output {
 public:
  Output(std::ostream& out, std::string path)
      : out_(out), path_(std::move(path)) {}

  void Emit(const std::string& data) {
    std::string text = data;
    if (text.empty() || text.back() != '\n') text.push_back('\n');
    if (path_.empty()) {
      out_ << text;
    } else {
      WriteFileAtomic(path_, text);
    }
  }

 private:
  std::ostream& out_;
  std::string path_;
};

std::string ReadStdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

std::string InputText(const std::string& inline_text,
                      const std::vector<std::string>& files) {
  if (!inline_text.empty()) return inline_text;
  if (files.empty()) return ReadStdin();
  std::vector<std::string> parts;
  for (const auto& f : files) parts.push_back(ReadFile(f));
  return text::Join(parts, "\n\n");
}

Lexicon LoadLexiconOrDefault(const std::string& path) {
  if (path.empty()) return DefaultLexicon();
  return LoadLexicon(ReadFile(path));
}

Rubric LoadRubricOrDefault(const std::string& path) {
  if (path.empty()) return DefaultRubric();
  return ParseRubric(ReadFile(path));
}

Work LoadWork(const std::string& path, const std::string& id) {
  return ParseWork(ReadFile(path),
                   id.empty() ? fs::path(path).stem().string() : id);
}

std::shared_ptr<const CompletionBackend> MakeBackend(const CliConfig& cfg) {
  if (cfg.backend == BackendKind::kMock) {
    return std::make_shared<MockBackend>();
  }
  RemoteOptions options = RemoteOptions::FromEnvironment();
  if (!cfg.endpoint.empty()) options.endpoint = cfg.endpoint;
  options.text_path = cfg.text_path;
  options.retry = cfg.retry;
  options.timeout = std::chrono::milliseconds(cfg.timeout_ms);
  return std::make_shared<RemoteBackend>(std::move(options),
                                         MakeHttpTransport());
}

bool CorpusExists(const std::string& root) {
  return fs::exists(fs::path(root) / "manifest.json");
}

// Adds `work` unless an identical work with the same id is present.
void AddWork(ReviewCorpus& corpus, Work work, const std::string& group) {
  if (const Work* existing = corpus.FindWork(work.id)) {
    if (!(*existing == work)) {
      throw Error(ErrorCode::kPrecondition,
                  "corpus already holds a different work with id '" +
                      work.id + "'");
    }
  } else {
    corpus.works.push_back(std::move(work));
  }
  if (!group.empty()) corpus.work_groups[corpus.works.back().id] = group;
}

void CheckCorpus(const ReviewCorpus& corpus) {
  auto violations = ValidateCorpus(corpus);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

std::string RenderReviewText(const ReviewMap& review, const Rubric& rubric) {
  std::string out = fmt::format("Review {} of {} ({}, {})\n", review.id,
                                review.work_id, ReviewKindName(review.kind),
                                review.reviewer_alias);
  for (const auto& node : review.nodes) {
    const auto* c = std::get_if<CriterionNode>(&node.body);
    if (c == nullptr) continue;
    const Criterion* criterion = rubric.Find(c->criterion_code);
    out += fmt::format(
        "\n{} [{}]\n",
        criterion != nullptr ? criterion->name : c->criterion_code,
        c->rating ? std::to_string(*c->rating) : std::string("unrated"));
    if (!c->narrative.empty()) out += c->narrative + "\n";
  }
  return out;
}

Json SentimentJson(const SentimentResult& result) {
  Json sentences = Json::array();
  for (const auto& s : result.sentences) {
    sentences.push_back(
        {{"text", s.text}, {"score", s.score}, {"magnitude", s.magnitude}});
  }
  return {{"score", result.score},
          {"magnitude", result.magnitude},
          {"category", CategoryName(result.category)},
          {"sentences", std::move(sentences)}};
}

std::string SentimentText(const SentimentResult& result) {
  std::string out =
      fmt::format("score      {:.3f}\nmagnitude  {:.3f}\ncategory   {}\n",
                  result.score, result.magnitude, CategoryName(result.category));
  for (const auto& s : result.sentences) {
    out += fmt::format("{:+.3f}  {}\n", s.score, s.text);
  }
  return out;
}

Json ReadabilityJson(const TextStats& stats, const ReadabilityResult& r) {
  return {{"words", stats.words},
          {"sentences", stats.sentences},
          {"letters", stats.letters},
          {"characters", stats.characters},
          {"syllables", stats.syllables},
          {"flesch_kincaid", r.flesch_kincaid},
          {"coleman_liau", r.coleman_liau},
          {"ari", r.ari},
          {"composite", r.composite}};
}

std::string ReadabilityText(const TextStats& stats,
                            const ReadabilityResult& r) {
  return fmt::format(
      "words           {}\nsentences       {}\nsyllables       {}\n"
      "flesch_kincaid  {:.2f}\ncoleman_liau    {:.2f}\nari             {:.2f}\n"
      "composite       {:.2f}\n",
      stats.words, stats.sentences, stats.syllables, r.flesch_kincaid,
      r.coleman_liau, r.ari, r.composite);
}

std::string ViolationsText(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    out += fmt::format("{}: {}\n", ViolationName(v.kind), v.detail);
  }
  return out;
}

void ThrowIfProblems(const std::vector<std::string>& problems,
                     std::string_view what) {
  if (problems.empty()) return;
  throw Error(ErrorCode::kValidationFailed,
              fmt::format("{} is invalid: {}", what,
                          text::Join(problems, "; ")));
}

// ---------------------------------------------------------------------------
// Subcommand options

struct ReviewArgs {
  std::string work;
  std::string work_id;
  std::string rubric;
  std::string backend;
  std::optional<std::int64_t> seed;
  std::string summarizer_model;
  std::string reviewer_model;
  bool always_summarize = false;
  std::optional<std::int64_t> context_budget;
  std::optional<int> parallelism;
  bool lenient = false;
  std::string ontology;
  std::string corpus;
  std::string group;
};

struct ImportArgs {
  std::string corpus;
  std::vector<std::string> reviews;
  std::string work;
  std::string work_id;
  std::string group;
};

struct TextArgs {
  std::vector<std::string> files;
  std::string text;
  std::string lexicon;
  std::optional<double> encouraging;
  std::optional<double> critical;
};

struct CompareArgs {
  std::string corpus;
  std::string lexicon;
  std::string normalize;
};

struct ValidateArgs {
  std::string corpus;
  std::string rubric;
  std::string work;
  std::string review;
};

// ---------------------------------------------------------------------------
// Subcommand bodies

int RunReview(const ReviewArgs& a, CliConfig cfg, const Globals& g,
              Output& output) {
  if (!a.backend.empty()) cfg.backend = ParseBackendKind(a.backend);
  PipelineConfig& p = cfg.pipeline;
  if (a.seed) p.seed = a.seed;
  if (!a.summarizer_model.empty()) p.summarizer_model = a.summarizer_model;
  if (!a.reviewer_model.empty()) p.reviewer_model = a.reviewer_model;
  if (a.always_summarize) p.always_summarize = true;
  if (a.context_budget) p.context_budget_tokens = *a.context_budget;
  if (a.parallelism) p.parallelism = *a.parallelism;
  if (a.lenient) p.lenient = true;
  const std::string ontology = a.ontology.empty() ? cfg.ontology_path : a.ontology;
  if (!ontology.empty()) {
    p.frames.ontology_terms = ParseOntologyTerms(ReadFile(ontology));
  }
  try {
    p.Validate();
  } catch (const Error& e) {
    ConfigError(e.what());
  }

  const std::string corpus_path = a.corpus.empty() ? cfg.corpus_path : a.corpus;
  const std::string rubric_path = a.rubric.empty() ? cfg.rubric_path : a.rubric;
  Work work = LoadWork(a.work, a.work_id);

  ReviewCorpus corpus;
  const bool existing = !corpus_path.empty() && CorpusExists(corpus_path);
  if (existing) {
    corpus = LoadCorpus(corpus_path);
    if (!rubric_path.empty() &&
        !(ParseRubric(ReadFile(rubric_path)) == corpus.rubric)) {
      throw Error(ErrorCode::kPrecondition,
                  "--rubric differs from the corpus rubric");
    }
  } else {
    corpus.rubric = LoadRubricOrDefault(rubric_path);
  }

  const auto backend = MakeBackend(cfg);
  ReviewMap review = GenerateAiReview(work, corpus.rubric, *backend, p);

  if (!corpus_path.empty()) {
    AddWork(corpus, std::move(work), a.group);
    std::erase_if(corpus.reviews,
                  [&](const ReviewMap& r) { return r.id == review.id; });
    corpus.reviews.push_back(review);
    CheckCorpus(corpus);
    SaveCorpus(corpus, corpus_path);
  }

  const std::string format = g.format.empty() ? "json" : g.format;
  output.Emit(format == "json" ? ReviewMapToJson(review)
                               : RenderReviewText(review, corpus.rubric));
  return kExitOk;
}

int RunImport(const ImportArgs& a, const CliConfig& cfg, std::ostream& out) {
  const std::string corpus_path = a.corpus.empty() ? cfg.corpus_path : a.corpus;
  if (corpus_path.empty()) ConfigError("--corpus is required");
  ReviewCorpus corpus;
  if (CorpusExists(corpus_path)) {
    corpus = LoadCorpus(corpus_path);
  } else {
    corpus.rubric = LoadRubricOrDefault(cfg.rubric_path);
  }
  if (!a.work.empty()) AddWork(corpus, LoadWork(a.work, a.work_id), a.group);
  for (const auto& path : a.reviews) {
    corpus.reviews.push_back(ReviewMapFromJson(ReadFile(path)));
  }
  CheckCorpus(corpus);
  SaveCorpus(corpus, corpus_path);
  out << fmt::format("{}: {} works, {} reviews\n", corpus_path,
                     corpus.works.size(), corpus.reviews.size());
  return kExitOk;
}

int RunSentiment(const TextArgs& a, const CliConfig& cfg, const Globals& g,
                 Output& output) {
  SentimentThresholds thresholds = cfg.thresholds;
  if (a.encouraging) thresholds.encouraging = *a.encouraging;
  if (a.critical) thresholds.critical = *a.critical;
  try {
    thresholds.Validate();
  } catch (const Error& e) {
    ConfigError(e.what());
  }
  const Lexicon lexicon =
      LoadLexiconOrDefault(a.lexicon.empty() ? cfg.lexicon_path : a.lexicon);
  const auto result =
      AnalyzeSentiment(InputText(a.text, a.files), lexicon, thresholds);
  const std::string format = g.format.empty() ? "text" : g.format;
  output.Emit(format == "json" ? SentimentJson(result).dump(2)
                               : SentimentText(result));
  return kExitOk;
}

int RunReadability(const TextArgs& a, const Globals& g, Output& output) {
  const TextStats stats = ComputeTextStats(InputText(a.text, a.files));
  const ReadabilityResult result = Readability(stats);
  const std::string format = g.format.empty() ? "text" : g.format;
  output.Emit(format == "json" ? ReadabilityJson(stats, result).dump(2)
                               : ReadabilityText(stats, result));
  return kExitOk;
}

int RunCompare(const CompareArgs& a, const CliConfig& cfg, const Globals& g,
               Output& output) {
  const std::string corpus_path = a.corpus.empty() ? cfg.corpus_path : a.corpus;
  if (corpus_path.empty()) ConfigError("--corpus is required");
  const auto normalization =
      a.normalize.empty() ? cfg.normalization : ParseNormalization(a.normalize);
  const Lexicon lexicon =
      LoadLexiconOrDefault(a.lexicon.empty() ? cfg.lexicon_path : a.lexicon);
  const ReviewCorpus corpus = LoadCorpus(corpus_path);
  const ComparisonReport report = Compare(corpus, lexicon, normalization);
  const std::string format = g.format.empty() ? "text" : g.format;
  output.Emit(format == "json" ? ReportToJson(report)
                               : RenderReportText(report));
  return kExitOk;
}

int RunReport(const std::string& path, const Globals& g, Output& output) {
  const ComparisonReport report = ReportFromJson(ReadFile(path));
  const std::string format = g.format.empty() ? "text" : g.format;
  output.Emit(format == "json" ? ReportToJson(report)
                               : RenderReportText(report));
  return kExitOk;
}

int RunDemo(const std::string& corpus_path, const DemoOptions& options,
            const CliConfig& cfg, std::ostream& out) {
  const MockBackend backend;
  const ReviewCorpus corpus =
      GenerateDemoCorpus(options, backend, cfg.pipeline);
  SaveCorpus(corpus, corpus_path);
  out << fmt::format("{}: {} works, {} reviews\n", corpus_path,
                     corpus.works.size(), corpus.reviews.size());
  return kExitOk;
}

int RunValidate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.corpus.empty() && a.rubric.empty() && a.work.empty() &&
      a.review.empty()) {
    ConfigError("nothing to validate");
  }
  std::vector<Violation> violations;
  if (!a.corpus.empty()) {
    // LoadCorpus reports structural problems as ValidationError.
    const ReviewCorpus corpus = LoadCorpus(a.corpus);
    out << fmt::format("corpus {}: ok ({} works, {} reviews)\n", a.corpus,
                       corpus.works.size(), corpus.reviews.size());
  }
  const Rubric rubric = LoadRubricOrDefault(a.rubric);
  if (!a.rubric.empty()) {
    ThrowIfProblems(CheckRubric(rubric), "rubric");
    out << fmt::format("rubric {}: ok\n", a.rubric);
  }
  std::optional<Work> work;
  if (!a.work.empty()) {
    work = LoadWork(a.work, "");
    ThrowIfProblems(CheckWork(*work), "work");
    out << fmt::format("work {}: ok\n", a.work);
  }
  if (!a.review.empty()) {
    const ReviewMap review = ReviewMapFromJson(ReadFile(a.review));
    if (!work) ConfigError("--review needs --work");
    Work target = *work;
    target.id = review.work_id;
    violations = ValidateReviewMap(review, target, rubric);
    if (!violations.empty()) {
      err << ViolationsText(violations);
      return kExitDomainError;
    }
    out << fmt::format("review {}: ok\n", a.review);
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rubric-guided review generation and review analytics",
               "rubriq"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--config", g.config_path, "JSON config file")
      ->check(CLI::ExistingFile);
  app.add_option("--out", g.out_path, "Write output to this file");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  ReviewArgs review;
  auto* review_cmd =
      app.add_subcommand("review", "Generate an AI review of a work");
  review_cmd->add_option("--work", review.work, "Markdown work")
      ->required()
      ->check(CLI::ExistingFile);
  review_cmd->add_option("--work-id", review.work_id,
                         "Work id (default: file stem)");
  review_cmd->add_option("--rubric", review.rubric, "Rubric JSON");
  review_cmd->add_option("--backend", review.backend, "mock or remote")
      ->check(CLI::IsMember({"mock", "remote"}));
  review_cmd->add_option("--seed", review.seed, "Sampling seed");
  review_cmd->add_option("--summarizer-model", review.summarizer_model);
  review_cmd->add_option("--reviewer-model", review.reviewer_model);
  review_cmd->add_flag("--always-summarize", review.always_summarize);
  review_cmd->add_option("--context-budget", review.context_budget,
                         "Context budget in tokens");
  review_cmd->add_option("--parallelism", review.parallelism);
  review_cmd->add_flag("--lenient", review.lenient,
                       "Store unparseable ratings as absent");
  review_cmd->add_option("--ontology", review.ontology,
                         "Glossary TSV (term<TAB>definition)");
  review_cmd->add_option("--corpus", review.corpus,
                         "Add the work and review to this corpus");
  review_cmd->add_option("--group", review.group, "Group label for the work");

  ImportArgs import;
  auto* import_cmd =
      app.add_subcommand("import-review", "Add review JSON files to a corpus");
  import_cmd->add_option("--corpus", import.corpus, "Corpus directory");
  import_cmd->add_option("reviews", import.reviews, "Review JSON files")
      ->required()
      ->check(CLI::ExistingFile);
  import_cmd->add_option("--work", import.work, "Markdown work to add first")
      ->check(CLI::ExistingFile);
  import_cmd->add_option("--work-id", import.work_id);
  import_cmd->add_option("--group", import.group);

  TextArgs sentiment;
  auto* sentiment_cmd =
      app.add_subcommand("sentiment", "Score feedback text");
  sentiment_cmd->add_option("files", sentiment.files, "Text files (or stdin)")
      ->check(CLI::ExistingFile);
  sentiment_cmd->add_option("--text", sentiment.text, "Inline text");
  sentiment_cmd->add_option("--lexicon", sentiment.lexicon, "Lexicon TSV");
  sentiment_cmd->add_option("--encouraging", sentiment.encouraging,
                            "Lower bound for encouraging");
  sentiment_cmd->add_option("--critical", sentiment.critical,
                            "Upper bound for critical");

  TextArgs readability;
  auto* readability_cmd =
      app.add_subcommand("readability", "Readability grade of text");
  readability_cmd->add_option("files", readability.files,
                              "Text files (or stdin)")
      ->check(CLI::ExistingFile);
  readability_cmd->add_option("--text", readability.text, "Inline text");

  CompareArgs compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "Compare peer and AI reviews in a corpus");
  compare_cmd->add_option("--corpus", compare.corpus, "Corpus directory");
  compare_cmd->add_option("--lexicon", compare.lexicon, "Lexicon TSV");
  compare_cmd->add_option("--normalize", compare.normalize)
      ->check(CLI::IsMember({"none", "min_max", "range_divide"}));

  std::string report_path;
  auto* report_cmd =
      app.add_subcommand("report", "Render a saved comparison report");
  report_cmd->add_option("report", report_path, "Report JSON")
      ->required()
      ->check(CLI::ExistingFile);

  std::string demo_path;
  DemoOptions demo;
  auto* demo_cmd =
      app.add_subcommand("demo", "Write a synthetic corpus");
  demo_cmd->add_option("--corpus", demo_path, "Output directory")->required();
  demo_cmd->add_option("--works", demo.works)->check(CLI::PositiveNumber);
  demo_cmd->add_option("--groups", demo.groups)->check(CLI::PositiveNumber);
  demo_cmd->add_option("--peer-reviews", demo.peer_reviews_per_work)
      ->check(CLI::NonNegativeNumber);
  demo_cmd->add_option("--seed", demo.seed);

  ValidateArgs validate;
  auto* validate_cmd =
      app.add_subcommand("validate", "Check corpora, rubrics, works, reviews");
  validate_cmd->add_option("--corpus", validate.corpus);
  validate_cmd->add_option("--rubric", validate.rubric)
      ->check(CLI::ExistingFile);
  validate_cmd->add_option("--work", validate.work)->check(CLI::ExistingFile);
  validate_cmd->add_option("--review", validate.review)
      ->check(CLI::ExistingFile);

  try {
    std::vector<std::string> args(argv.empty() ? argv.begin()
                                               : std::next(argv.begin()),
                                  argv.end());
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    CliConfig cfg;
    if (!g.config_path.empty()) cfg = ParseCliConfig(ReadFile(g.config_path));
    Output output(out, g.out_path);

    if (*review_cmd) return RunReview(review, cfg, g, output);
    if (*import_cmd) return RunImport(import, cfg, out);
    if (*sentiment_cmd) return RunSentiment(sentiment, cfg, g, output);
    if (*readability_cmd) return RunReadability(readability, g, output);
    if (*compare_cmd) return RunCompare(compare, cfg, g, output);
    if (*report_cmd) return RunReport(report_path, g, output);
    if (*demo_cmd) return RunDemo(demo_path, demo, cfg, out);
    if (*validate_cmd) return RunValidate(validate, out, err);
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kConfig ? kExitUsage : kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace rubriq::cli
