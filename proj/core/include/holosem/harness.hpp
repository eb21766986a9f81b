#pragma once

// Command layer behind the CLI. Each command is a pure function of its
// resolved configuration: it runs the experiment, writes versioned report
// files (JSON and/or CSV, atomically), prints a human-readable summary, and
// returns the report envelope. Configs come from an optional JSON file with
// flag overrides on top; unknown keys are rejected and every numeric range
// is validated before anything runs.
//
// Exit-code discipline: 0 success, 2 config validation (ConfigError),
// 3 I/O (IoError), 4 internal numeric check failure (NumericCheckError).

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holosem/learning.hpp"
#include "holosem/petfish.hpp"

namespace holosem::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitNumeric = 4;

inline constexpr std::string_view kToolName = "holosem";
inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::string_view kFormatVersion = "1";

enum class OutputFormat { Json, Csv, Both };

OutputFormat output_format_from_string(const std::string& name);  // ConfigError
std::string_view to_string(OutputFormat format);

// Flag-level overrides shared by all commands; applied on top of the config
// file after it is parsed.
struct FlagOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::vector<std::size_t>> dims;
  std::optional<int> trials;
  std::optional<double> h;
  std::optional<double> noise;
  std::optional<std::string> format;
};

struct PetfishCommandConfig {
  std::vector<std::string> backends = {"tensor", "hrr"};
  std::vector<std::size_t> dims = {128, 512, 2048};
  int trials = 50;
  std::uint64_t seed = 1;
  bool normalize_outputs = true;
  std::string out = "petfish_report.json";
  OutputFormat format = OutputFormat::Json;
};

struct LearnCommandConfig {
  std::string backend = "tensor";
  std::size_t dim = 256;
  std::vector<std::string> adjectives = {"pet", "wild"};
  std::vector<std::string> nouns = {"fish", "dog"};
  std::vector<std::string> iverbs;
  double h = 0.1;
  double noise = 0.05;
  std::uint64_t presentations = 200;
  std::uint64_t eval_every = 50;
  std::uint64_t seed = 1;
  bool renormalize_nouns = true;
  std::string out = "learn_report.json";
  std::string checkpoint;  // optional learner checkpoint path
  OutputFormat format = OutputFormat::Json;
};

struct CapacityCommandConfig {
  std::vector<std::size_t> dims = {128, 512, 1024, 2048};
  std::vector<int> pair_counts = {1, 2, 4, 8, 16};
  int trials = 100;
  std::uint64_t seed = 1;
  std::string out = "capacity_report.json";
  OutputFormat format = OutputFormat::Json;
};

struct BenchCommandConfig {
  std::vector<std::size_t> dims = {64, 256, 1024, 4096};
  int repeats = 9;  // median-of-k timing
  std::uint64_t seed = 1;
  std::string out = "bench_report.json";
  OutputFormat format = OutputFormat::Json;
};

struct DemoSentenceCommandConfig {
  std::size_t dim = 1024;  // Hrr dimension; the Tensor structure is exact
  int trials = 100;
  std::vector<std::string> roles = {"agent", "patient", "verb"};
  std::uint64_t seed = 1;
  std::string out = "demo_sentence_report.json";
  OutputFormat format = OutputFormat::Json;
};

// Config loading: parse the JSON file (empty path: defaults), reject unknown
// keys, apply overrides, validate. All throw ConfigError (or IoError when
// the file cannot be read).
PetfishCommandConfig resolve_petfish_config(const std::string& config_path,
                                            const FlagOverrides& flags);
LearnCommandConfig resolve_learn_config(const std::string& config_path,
                                        const FlagOverrides& flags);
CapacityCommandConfig resolve_capacity_config(const std::string& config_path,
                                              const FlagOverrides& flags);
BenchCommandConfig resolve_bench_config(const std::string& config_path,
                                        const FlagOverrides& flags);
DemoSentenceCommandConfig resolve_demo_sentence_config(const std::string& config_path,
                                                       const FlagOverrides& flags);

// Command bodies. Each returns the envelope JSON it wrote (also written to
// config.out unless that is empty) and prints a summary table to `summary`.
std::string cmd_petfish(const PetfishCommandConfig& config, std::ostream& summary);
std::string cmd_learn(const LearnCommandConfig& config, std::ostream& summary);
std::string cmd_capacity(const CapacityCommandConfig& config, std::ostream& summary);
std::string cmd_bench(const BenchCommandConfig& config, std::ostream& summary);
std::string cmd_demo_sentence(const DemoSentenceCommandConfig& config,
                              std::ostream& summary);

// Write-temp-then-rename; parent directory must exist (IoError otherwise).
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

// Maps a thrown library error to the exit-code discipline above.
int exit_code_for_current_exception();

// Envelope payloads are byte-identical across reruns with equal config and
// seed; only the "timing" object varies. This strips it for comparisons.
std::string envelope_without_timing(const std::string& envelope_json);

}  // namespace holosem::harness
