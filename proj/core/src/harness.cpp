#include "holosem/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "holosem/binding.hpp"
#include "holosem/cleanup.hpp"
#include "holosem/convolution.hpp"
#include "holosem/errors.hpp"
#include "holosem/tensor_ops.hpp"

namespace holosem::harness {

using nlohmann::json;

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "both") return OutputFormat::Both;
  throw ConfigError("format must be one of json|csv|both, got '" + name + "'");
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Both: return "both";
  }
  return "json";
}

// --- config plumbing --------------------------------------------------------

namespace {

json load_config_file(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    json doc = json::parse(buffer.str());
    if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
    return doc;
  } catch (const json::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

void reject_unknown_keys(const json& doc, const std::set<std::string>& allowed,
                         const char* command) {
  for (const auto& [key, value] : doc.items()) {
    if (allowed.count(key) == 0) {
      throw ConfigError(std::string(command) + ": unknown config key '" + key + "'");
    }
  }
}

template <typename T>
void read_key(const json& doc, const char* key, T& target) {
  if (!doc.contains(key)) return;
  try {
    target = doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config key '") + key + "' has the wrong type");
  }
}

void read_format(const json& doc, OutputFormat& target) {
  if (!doc.contains("format")) return;
  std::string name;
  read_key(doc, "format", name);
  target = output_format_from_string(name);
}

void require(bool condition, const std::string& message) {
  if (!condition) throw ConfigError(message);
}

std::vector<std::size_t> positive_dims(const std::vector<std::size_t>& dims,
                                       const char* command) {
  require(!dims.empty(), std::string(command) + ": dims must be non-empty");
  for (std::size_t dim : dims) {
    require(dim >= 2, std::string(command) + ": dims must be >= 2");
  }
  return dims;
}

std::size_t single_dim_override(const std::vector<std::size_t>& dims, const char* command) {
  require(dims.size() == 1, std::string(command) + ": --dims takes exactly one value here");
  return dims.front();
}

void forbid_flag(bool present, const char* flag, const char* command) {
  require(!present, std::string(command) + ": " + flag + " does not apply");
}

// --- envelope and file output ----------------------------------------------

std::filesystem::path csv_sibling(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  p.replace_extension(".csv");
  return p;
}

std::string make_envelope(std::string_view command, const json& config_echo,
                          const json& payload, double wall_seconds) {
  json envelope;
  envelope["format_version"] = std::string(kFormatVersion);
  envelope["tool"] = std::string(kToolName);
  envelope["tool_version"] = std::string(kToolVersion);
  envelope["command"] = std::string(command);
  envelope["config"] = config_echo;
  envelope["timing"] = {{"wall_seconds", wall_seconds}};
  envelope["payload"] = payload;
  return envelope.dump(2);
}

void write_reports(const std::string& out, OutputFormat format,
                   const std::string& envelope, const std::string& csv) {
  if (out.empty()) return;
  if (format == OutputFormat::Json || format == OutputFormat::Both) {
    atomic_write_file(out, envelope);
  }
  if (format == OutputFormat::Csv || format == OutputFormat::Both) {
    atomic_write_file(csv_sibling(out), csv);
  }
}

class WallClock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + temp.string() + "' for writing");
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
    if (!out) throw IoError("write failed for '" + temp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw IoError("cannot move report into place at '" + path.string() + "'");
  }
}

int exit_code_for_current_exception() {
  try {
    throw;
  } catch (const ConfigError&) {
    return kExitConfig;
  } catch (const IoError&) {
    return kExitIo;
  } catch (const NumericCheckError&) {
    return kExitNumeric;
  } catch (...) {
    return 1;
  }
}

std::string envelope_without_timing(const std::string& envelope_json) {
  json doc = json::parse(envelope_json);
  doc.erase("timing");
  return doc.dump(2);
}

// --- petfish -----------------------------------------------------------------

namespace {

json petfish_config_echo(const PetfishCommandConfig& config) {
  return {{"backends", config.backends},
          {"dims", config.dims},
          {"trials", config.trials},
          {"seed", config.seed},
          {"normalize_outputs", config.normalize_outputs},
          {"out", config.out},
          {"format", std::string(to_string(config.format))}};
}

void validate_petfish(const PetfishCommandConfig& config) {
  require(!config.backends.empty(), "petfish: backends must be non-empty");
  std::set<std::string> seen;
  for (const std::string& backend : config.backends) {
    require(backend == "tensor" || backend == "hrr",
            "petfish: backend must be tensor or hrr, got '" + backend + "'");
    require(seen.insert(backend).second, "petfish: duplicate backend '" + backend + "'");
  }
  positive_dims(config.dims, "petfish");
  require(config.trials >= 1, "petfish: trials must be >= 1");
}

}  // namespace

PetfishCommandConfig resolve_petfish_config(const std::string& config_path,
                                            const FlagOverrides& flags) {
  const json doc = load_config_file(config_path);
  reject_unknown_keys(
      doc, {"backends", "dims", "trials", "seed", "normalize_outputs", "out", "format"},
      "petfish");
  PetfishCommandConfig config;
  read_key(doc, "backends", config.backends);
  read_key(doc, "dims", config.dims);
  read_key(doc, "trials", config.trials);
  read_key(doc, "seed", config.seed);
  read_key(doc, "normalize_outputs", config.normalize_outputs);
  read_key(doc, "out", config.out);
  read_format(doc, config.format);

  if (flags.seed) config.seed = *flags.seed;
  if (flags.out) config.out = *flags.out;
  if (flags.dims) config.dims = *flags.dims;
  if (flags.trials) config.trials = *flags.trials;
  if (flags.format) config.format = output_format_from_string(*flags.format);
  forbid_flag(flags.h.has_value(), "--h", "petfish");
  forbid_flag(flags.noise.has_value(), "--noise", "petfish");

  validate_petfish(config);
  return config;
}

std::string cmd_petfish(const PetfishCommandConfig& config, std::ostream& summary) {
  validate_petfish(config);
  const WallClock clock;

  petfish::PetfishConfig run;
  run.run_tensor = std::find(config.backends.begin(), config.backends.end(), "tensor") !=
                   config.backends.end();
  const bool run_hrr = std::find(config.backends.begin(), config.backends.end(), "hrr") !=
                       config.backends.end();
  run.hrr_dims = run_hrr ? config.dims : std::vector<std::size_t>{};
  run.trials = config.trials;
  run.seed = config.seed;
  run.normalize_outputs = config.normalize_outputs;

  const petfish::RankingReport report = petfish::run_petfish(run);
  const json payload = json::parse(petfish::report_to_json(report));
  const std::string envelope =
      make_envelope("petfish", petfish_config_echo(config), payload, clock.seconds());
  write_reports(config.out, config.format, envelope, petfish::report_to_csv(report));

  summary << "pet+animal winners (most similar noun after composition)\n";
  for (const petfish::WinnerFrequency& wf : report.winner_frequency) {
    const auto best = std::max_element(
        wf.winners.begin(), wf.winners.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    int total = 0;
    for (const auto& [noun, count] : wf.winners) total += count;
    summary << "  " << wf.backend << " dim=" << wf.dim << "  pet " << wf.animal << " -> "
            << best->first << " (" << best->second << "/" << total << ")\n";
  }
  return envelope;
}

// --- learn -------------------------------------------------------------------

namespace {

json learn_config_echo(const LearnCommandConfig& config) {
  return {{"backend", config.backend},
          {"dim", config.dim},
          {"adjectives", config.adjectives},
          {"nouns", config.nouns},
          {"iverbs", config.iverbs},
          {"h", config.h},
          {"noise", config.noise},
          {"presentations", config.presentations},
          {"eval_every", config.eval_every},
          {"seed", config.seed},
          {"renormalize_nouns", config.renormalize_nouns},
          {"out", config.out},
          {"checkpoint", config.checkpoint},
          {"format", std::string(to_string(config.format))}};
}

void validate_learn(const LearnCommandConfig& config) {
  require(config.backend == "tensor" || config.backend == "hrr",
          "learn: backend must be tensor or hrr");
  require(config.dim >= 2, "learn: dim must be >= 2");
  require(!config.nouns.empty(), "learn: nouns must be non-empty");
  require(!config.adjectives.empty() || !config.iverbs.empty(),
          "learn: need at least one adjective or intransitive verb");
  require(config.h >= 0.0 && config.h <= 1.0, "learn: h must lie in [0, 1]");
  require(config.noise >= 0.0, "learn: noise must be >= 0");
  std::set<std::string> words;
  for (const auto* list : {&config.adjectives, &config.nouns, &config.iverbs}) {
    for (const std::string& word : *list) {
      require(!word.empty(), "learn: empty word");
      require(words.insert(word).second, "learn: duplicate word '" + word + "'");
    }
  }
}

}  // namespace

LearnCommandConfig resolve_learn_config(const std::string& config_path,
                                        const FlagOverrides& flags) {
  const json doc = load_config_file(config_path);
  reject_unknown_keys(doc,
                      {"backend", "dim", "adjectives", "nouns", "iverbs", "h", "noise",
                       "presentations", "eval_every", "seed", "renormalize_nouns", "out",
                       "checkpoint", "format"},
                      "learn");
  LearnCommandConfig config;
  read_key(doc, "backend", config.backend);
  read_key(doc, "dim", config.dim);
  read_key(doc, "adjectives", config.adjectives);
  read_key(doc, "nouns", config.nouns);
  read_key(doc, "iverbs", config.iverbs);
  read_key(doc, "h", config.h);
  read_key(doc, "noise", config.noise);
  read_key(doc, "presentations", config.presentations);
  read_key(doc, "eval_every", config.eval_every);
  read_key(doc, "seed", config.seed);
  read_key(doc, "renormalize_nouns", config.renormalize_nouns);
  read_key(doc, "out", config.out);
  read_key(doc, "checkpoint", config.checkpoint);
  read_format(doc, config.format);

  if (flags.seed) config.seed = *flags.seed;
  if (flags.out) config.out = *flags.out;
  if (flags.dims) config.dim = single_dim_override(*flags.dims, "learn");
  if (flags.h) config.h = *flags.h;
  if (flags.noise) config.noise = *flags.noise;
  if (flags.format) config.format = output_format_from_string(*flags.format);
  forbid_flag(flags.trials.has_value(), "--trials", "learn");

  validate_learn(config);
  return config;
}

std::string cmd_learn(const LearnCommandConfig& config, std::ostream& summary) {
  validate_learn(config);
  const WallClock clock;

  learn::WorldSpec spec;
  spec.backend = config.backend == "tensor" ? BindingBackend::tensor()
                                            : BindingBackend::hrr(config.dim);
  spec.dim = config.dim;
  spec.adjectives = config.adjectives;
  spec.nouns = config.nouns;
  spec.iverbs = config.iverbs;
  spec.noise_sigma = config.noise;

  // World structure from one derived stream, stimulus order from another.
  Rng world_rng(Rng::derive(config.seed, 0));
  Rng stream_rng(Rng::derive(config.seed, 1));
  const learn::GroundTruthWorld world = learn::make_world(spec, world_rng);

  learn::LearnerOptions options;
  options.h = config.h;
  options.renormalize_nouns = config.renormalize_nouns;
  learn::LearnerState state(spec.backend, config.dim, options);

  const learn::LearningCurve curve =
      learn::train(world, state, config.presentations, config.eval_every, stream_rng);

  json payload;
  payload["final_accuracy"] = curve.points.back().retrieval_accuracy;
  payload["curve"] = json::parse(learn::curve_to_json(curve));
  const std::string envelope =
      make_envelope("learn", learn_config_echo(config), payload, clock.seconds());
  write_reports(config.out, config.format, envelope, learn::curve_to_csv(curve));
  if (!config.checkpoint.empty()) {
    atomic_write_file(config.checkpoint,
                      learn::learner_checkpoint_json(state, config.seed));
  }

  const learn::EvalPoint& last = curve.points.back();
  summary << "learning finished after " << state.presentations
          << " presentations; retrieval accuracy " << last.retrieval_accuracy << "\n";
  for (const learn::WordMetric& metric : last.words) {
    summary << "  " << metric.word << ": cosine to truth " << metric.cosine_to_truth
            << "\n";
  }
  return envelope;
}

// --- capacity ------------------------------------------------------------------

namespace {

json capacity_config_echo(const CapacityCommandConfig& config) {
  return {{"dims", config.dims},
          {"pair_counts", config.pair_counts},
          {"trials", config.trials},
          {"seed", config.seed},
          {"out", config.out},
          {"format", std::string(to_string(config.format))}};
}

void validate_capacity(const CapacityCommandConfig& config) {
  positive_dims(config.dims, "capacity");
  require(!config.pair_counts.empty(), "capacity: pair_counts must be non-empty");
  for (int m : config.pair_counts) {
    require(m >= 1, "capacity: pair counts must be >= 1");
  }
  require(config.trials >= 1, "capacity: trials must be >= 1");
}

struct CapacityRow {
  std::size_t dim;
  int pairs;
  double mean_cosine;
  double std_cosine;
  double cleanup_accuracy;
};

std::string capacity_csv(const std::vector<CapacityRow>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "dim,m,mean_cosine,std_cosine,cleanup_accuracy\n";
  for (const CapacityRow& row : rows) {
    out << row.dim << ',' << row.pairs << ',' << row.mean_cosine << ',' << row.std_cosine
        << ',' << row.cleanup_accuracy << '\n';
  }
  return out.str();
}

}  // namespace

CapacityCommandConfig resolve_capacity_config(const std::string& config_path,
                                              const FlagOverrides& flags) {
  const json doc = load_config_file(config_path);
  reject_unknown_keys(doc, {"dims", "pair_counts", "trials", "seed", "out", "format"},
                      "capacity");
  CapacityCommandConfig config;
  read_key(doc, "dims", config.dims);
  read_key(doc, "pair_counts", config.pair_counts);
  read_key(doc, "trials", config.trials);
  read_key(doc, "seed", config.seed);
  read_key(doc, "out", config.out);
  read_format(doc, config.format);

  if (flags.seed) config.seed = *flags.seed;
  if (flags.out) config.out = *flags.out;
  if (flags.dims) config.dims = *flags.dims;
  if (flags.trials) config.trials = *flags.trials;
  if (flags.format) config.format = output_format_from_string(*flags.format);
  forbid_flag(flags.h.has_value(), "--h", "capacity");
  forbid_flag(flags.noise.has_value(), "--noise", "capacity");

  validate_capacity(config);
  return config;
}

std::string cmd_capacity(const CapacityCommandConfig& config, std::ostream& summary) {
  validate_capacity(config);
  const WallClock clock;

  std::vector<CapacityRow> rows;
  Rng rng(config.seed);
  for (std::size_t dim : config.dims) {
    for (int m : config.pair_counts) {
      double sum = 0.0;
      double sum_sq = 0.0;
      int correct = 0;
      for (int trial = 0; trial < config.trials; ++trial) {
        std::vector<CleanupEntry> fillers;
        HyperVector trace(dim);
        std::vector<HyperVector> roles;
        for (int i = 0; i < m; ++i) {
          roles.push_back(random_unit(dim, rng));
          HyperVector filler = random_unit(dim, rng);
          trace += circ_conv(filler, roles.back());
          fillers.push_back({"f" + std::to_string(i), std::move(filler)});
        }
        const HyperVector recovered = circ_corr(trace, roles.front());
        const double cos = cosine(recovered, fillers.front().vector);
        sum += cos;
        sum_sq += cos * cos;
        const CleanupMemory memory(std::move(fillers), -1.0);
        const auto best = cleanup(recovered, memory);
        if (best.has_value() && best->name == "f0") correct += 1;
      }
      const double n = static_cast<double>(config.trials);
      const double mean = sum / n;
      const double variance = std::max(0.0, sum_sq / n - mean * mean);
      rows.push_back({dim, m, mean, std::sqrt(variance),
                      static_cast<double>(correct) / n});
    }
  }

  json payload_rows = json::array();
  for (const CapacityRow& row : rows) {
    payload_rows.push_back({{"dim", row.dim},
                            {"m", row.pairs},
                            {"mean_cosine", row.mean_cosine},
                            {"std_cosine", row.std_cosine},
                            {"cleanup_accuracy", row.cleanup_accuracy}});
  }
  const json payload = {{"rows", std::move(payload_rows)}};
  const std::string envelope =
      make_envelope("capacity", capacity_config_echo(config), payload, clock.seconds());
  write_reports(config.out, config.format, envelope, capacity_csv(rows));

  summary << "dim      m   mean_cos  std_cos  cleanup_acc\n";
  for (const CapacityRow& row : rows) {
    char line[96];
    std::snprintf(line, sizeof line, "%-8zu %-3d %.4f    %.4f   %.3f\n", row.dim,
                  row.pairs, row.mean_cosine, row.std_cosine, row.cleanup_accuracy);
    summary << line;
  }
  return envelope;
}

// --- bench ---------------------------------------------------------------------

namespace {

json bench_config_echo(const BenchCommandConfig& config) {
  return {{"dims", config.dims},
          {"repeats", config.repeats},
          {"seed", config.seed},
          {"out", config.out},
          {"format", std::string(to_string(config.format))}};
}

void validate_bench(const BenchCommandConfig& config) {
  positive_dims(config.dims, "bench");
  std::set<std::size_t> unique(config.dims.begin(), config.dims.end());
  require(unique.size() == config.dims.size(), "bench: dims must be unique");
  require(config.repeats >= 1, "bench: repeats must be >= 1");
}

double median_of(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  return n % 2 == 1 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

template <typename F>
double time_us(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

BenchCommandConfig resolve_bench_config(const std::string& config_path,
                                        const FlagOverrides& flags) {
  const json doc = load_config_file(config_path);
  reject_unknown_keys(doc, {"dims", "repeats", "seed", "out", "format"}, "bench");
  BenchCommandConfig config;
  read_key(doc, "dims", config.dims);
  read_key(doc, "repeats", config.repeats);
  read_key(doc, "seed", config.seed);
  read_key(doc, "out", config.out);
  read_format(doc, config.format);

  if (flags.seed) config.seed = *flags.seed;
  if (flags.out) config.out = *flags.out;
  if (flags.dims) config.dims = *flags.dims;
  if (flags.trials) config.repeats = *flags.trials;
  if (flags.format) config.format = output_format_from_string(*flags.format);
  forbid_flag(flags.h.has_value(), "--h", "bench");
  forbid_flag(flags.noise.has_value(), "--noise", "bench");

  validate_bench(config);
  return config;
}

std::string cmd_bench(const BenchCommandConfig& config, std::ostream& summary) {
  validate_bench(config);
  const WallClock clock;

  struct Row {
    std::size_t dim;
    double naive_us;
    double fft_us;
    double max_abs_diff;
  };
  std::vector<Row> rows;

  Rng rng(config.seed);
  for (std::size_t dim : config.dims) {
    const HyperVector a = random_unit(dim, rng);
    const HyperVector b = random_unit(dim, rng);

    // Result agreement gates the timing run.
    const HyperVector naive = circ_conv_naive(a, b);
    const HyperVector fast = circ_conv_fft(a, b);
    double max_diff = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      max_diff = std::max(max_diff, std::fabs(naive[i] - fast[i]));
    }
    if (!(max_diff < 1e-9)) {
      throw NumericCheckError("bench: naive/FFT disagreement at dim " +
                              std::to_string(dim) + " (max abs diff " +
                              std::to_string(max_diff) + ")");
    }

    std::vector<double> naive_samples;
    std::vector<double> fft_samples;
    for (int r = 0; r < config.repeats; ++r) {
      naive_samples.push_back(time_us([&] { circ_conv_naive(a, b); }));
      fft_samples.push_back(time_us([&] { circ_conv_fft(a, b); }));
    }
    rows.push_back({dim, median_of(std::move(naive_samples)),
                    median_of(std::move(fft_samples)), max_diff});
  }

  json payload_rows = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "dim,naive_median_us,fft_median_us,max_abs_diff\n";
  for (const Row& row : rows) {
    payload_rows.push_back({{"dim", row.dim},
                            {"naive_median_us", row.naive_us},
                            {"fft_median_us", row.fft_us},
                            {"max_abs_diff", row.max_abs_diff}});
    csv << row.dim << ',' << row.naive_us << ',' << row.fft_us << ',' << row.max_abs_diff
        << '\n';
  }
  const json payload = {{"rows", std::move(payload_rows)}};
  const std::string envelope =
      make_envelope("bench", bench_config_echo(config), payload, clock.seconds());
  write_reports(config.out, config.format, envelope, csv.str());

  summary << "dim      naive_us     fft_us\n";
  for (const Row& row : rows) {
    char line[96];
    std::snprintf(line, sizeof line, "%-8zu %-12.2f %-12.2f\n", row.dim, row.naive_us,
                  row.fft_us);
    summary << line;
  }
  return envelope;
}

// --- demo-sentence ---------------------------------------------------------------

namespace {

json demo_config_echo(const DemoSentenceCommandConfig& config) {
  return {{"dim", config.dim},
          {"trials", config.trials},
          {"roles", config.roles},
          {"seed", config.seed},
          {"out", config.out},
          {"format", std::string(to_string(config.format))}};
}

const std::map<std::string, std::string>& role_fillers() {
  static const std::map<std::string, std::string> table = {
      {"agent", "Junpa"}, {"patient", "Jen"}, {"verb", "loves"}};
  return table;
}

void validate_demo(const DemoSentenceCommandConfig& config) {
  require(config.dim >= 2, "demo-sentence: dim must be >= 2");
  require(config.trials >= 1, "demo-sentence: trials must be >= 1");
  require(!config.roles.empty(), "demo-sentence: roles must be non-empty");
  std::set<std::string> seen;
  for (const std::string& role : config.roles) {
    require(role_fillers().count(role) != 0,
            "demo-sentence: unknown role '" + role + "'");
    require(seen.insert(role).second, "demo-sentence: duplicate role '" + role + "'");
  }
}

}  // namespace

DemoSentenceCommandConfig resolve_demo_sentence_config(const std::string& config_path,
                                                       const FlagOverrides& flags) {
  const json doc = load_config_file(config_path);
  reject_unknown_keys(doc, {"dim", "trials", "roles", "seed", "out", "format"},
                      "demo-sentence");
  DemoSentenceCommandConfig config;
  read_key(doc, "dim", config.dim);
  read_key(doc, "trials", config.trials);
  read_key(doc, "roles", config.roles);
  read_key(doc, "seed", config.seed);
  read_key(doc, "out", config.out);
  read_format(doc, config.format);

  if (flags.seed) config.seed = *flags.seed;
  if (flags.out) config.out = *flags.out;
  if (flags.dims) config.dim = single_dim_override(*flags.dims, "demo-sentence");
  if (flags.trials) config.trials = *flags.trials;
  if (flags.format) config.format = output_format_from_string(*flags.format);
  forbid_flag(flags.h.has_value(), "--h", "demo-sentence");
  forbid_flag(flags.noise.has_value(), "--noise", "demo-sentence");

  validate_demo(config);
  return config;
}

std::string cmd_demo_sentence(const DemoSentenceCommandConfig& config,
                              std::ostream& summary) {
  validate_demo(config);
  const WallClock clock;

  const std::vector<std::string> all_roles = {"agent", "patient", "verb"};

  // Exact backend: orthonormal roles, so each unbinding returns the filler
  // outright.
  json tensor_rows = json::array();
  {
    Rng rng(config.seed);
    std::vector<HyperVector> fillers;
    std::vector<CleanupEntry> vocabulary;
    RoleFillerStructure structure;
    for (std::size_t i = 0; i < all_roles.size(); ++i) {
      const std::string& filler_name = role_fillers().at(all_roles[i]);
      HyperVector filler = random_unit(config.dim, rng);
      vocabulary.push_back({filler_name, filler});
      structure.pairs.push_back({unit_impulse(all_roles.size(), i), std::move(filler)});
    }
    const DenseMatrix sentence = encode_tensor(structure);
    const CleanupMemory memory(std::move(vocabulary), -1.0);
    for (const std::string& role : config.roles) {
      const std::size_t index = static_cast<std::size_t>(
          std::find(all_roles.begin(), all_roles.end(), role) - all_roles.begin());
      const HyperVector recovered = unbind(sentence, unit_impulse(all_roles.size(), index));
      const auto best = cleanup(recovered, memory);
      tensor_rows.push_back({{"role", role},
                             {"retrieved", best ? best->name : "(none)"},
                             {"score", best ? best->score : 0.0}});
    }
  }

  // Holographic backend: same structure on random pointers, repeated over
  // trials; roles are retrieved through cleanup against the three fillers.
  json hrr_roles = json::array();
  {
    std::map<std::string, int> correct;
    std::map<std::string, json> example;
    for (int trial = 0; trial < config.trials; ++trial) {
      Rng rng(Rng::derive(config.seed, static_cast<std::uint64_t>(trial) + 1));
      std::vector<CleanupEntry> vocabulary;
      std::vector<HyperVector> roles;
      HyperVector trace(config.dim);
      for (const std::string& role : all_roles) {
        roles.push_back(random_unit(config.dim, rng));
        HyperVector filler = random_unit(config.dim, rng);
        trace += circ_conv(filler, roles.back());
        vocabulary.push_back({role_fillers().at(role), std::move(filler)});
      }
      const CleanupMemory memory(std::move(vocabulary), -1.0);
      for (const std::string& role : config.roles) {
        const std::size_t index = static_cast<std::size_t>(
            std::find(all_roles.begin(), all_roles.end(), role) - all_roles.begin());
        const HyperVector recovered = circ_corr(trace, roles[index]);
        const auto best = cleanup(recovered, memory);
        const bool ok = best.has_value() && best->name == role_fillers().at(role);
        if (ok) correct[role] += 1;
        if (trial == 0) {
          example[role] = {{"retrieved", best ? best->name : "(none)"},
                           {"score", best ? best->score : 0.0}};
        }
      }
    }
    for (const std::string& role : config.roles) {
      hrr_roles.push_back(
          {{"role", role},
           {"accuracy", static_cast<double>(correct[role]) / config.trials},
           {"example", example[role]}});
    }
  }

  const json payload = {
      {"tensor", {{"extractions", tensor_rows}}},
      {"hrr", {{"dim", config.dim}, {"trials", config.trials}, {"roles", hrr_roles}}}};
  const std::string envelope =
      make_envelope("demo-sentence", demo_config_echo(config), payload, clock.seconds());

  std::ostringstream csv;
  csv << "backend,role,retrieved_or_accuracy,score\n";
  for (const json& row : tensor_rows) {
    csv << "tensor," << row.at("role").get<std::string>() << ','
        << row.at("retrieved").get<std::string>() << ',' << row.at("score").get<double>()
        << '\n';
  }
  for (const json& row : hrr_roles) {
    csv << "hrr," << row.at("role").get<std::string>() << ','
        << row.at("accuracy").get<double>() << ",\n";
  }
  write_reports(config.out, config.format, envelope, csv.str());

  summary << "Junpa-loves-Jen role extraction\n";
  for (const json& row : tensor_rows) {
    summary << "  tensor  " << row.at("role").get<std::string>() << " -> "
            << row.at("retrieved").get<std::string>() << " (score "
            << row.at("score").get<double>() << ")\n";
  }
  for (const json& row : hrr_roles) {
    summary << "  hrr     " << row.at("role").get<std::string>() << " -> correct in "
            << row.at("accuracy").get<double>() * config.trials << "/" << config.trials
            << " trials\n";
  }
  return envelope;
}

}  // namespace holosem::harness
