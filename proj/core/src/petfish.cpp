#include "holosem/petfish.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "holosem/cleanup.hpp"
#include "holosem/convolution.hpp"
#include "holosem/errors.hpp"
#include "holosem/tensor_ops.hpp"

namespace holosem::petfish {

namespace {

// Published tables. Feature (row) order: cared-for, vicious, fluffy, scaly,
// lives-sea, lives-house, lives-zoo. Animal (column) order: Fish, Goldfish,
// Cat, Dog, Shark, Lion.
constexpr double kNounWeights[kFeatureCount][kAnimalCount] = {
    {0.13, 0.44, 0.57, 0.67, 0.00, 0.19},  // cared-for
    {0.51, 0.00, 0.13, 0.37, 0.57, 0.62},  // vicious
    {0.00, 0.00, 0.57, 0.37, 0.00, 0.44},  // fluffy
    {0.63, 0.62, 0.00, 0.00, 0.57, 0.00},  // scaly
    {0.51, 0.00, 0.00, 0.00, 0.57, 0.00},  // lives-sea
    {0.19, 0.62, 0.57, 0.52, 0.00, 0.00},  // lives-house
    {0.19, 0.19, 0.00, 0.00, 0.11, 0.62},  // lives-zoo
};

// pet: every animal becomes cared for; vicious/fluffy/scaly pass through;
// sea and zoo dwelling are dropped; any dwelling weight moves to the house.
constexpr double kPetWeights[kFeatureCount][kFeatureCount] = {
    {1, 1, 1, 1, 1, 1, 1},
    {0, 1, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0},
};

}  // namespace

const std::array<std::string, kFeatureCount>& feature_names() {
  static const std::array<std::string, kFeatureCount> names = {
      "cared-for", "vicious", "fluffy", "scaly", "lives-sea", "lives-house", "lives-zoo"};
  return names;
}

const std::array<std::string, kAnimalCount>& animal_names() {
  static const std::array<std::string, kAnimalCount> names = {"Fish", "Goldfish", "Cat",
                                                              "Dog",  "Shark",    "Lion"};
  return names;
}

const DenseMatrix& noun_weights() {
  static const DenseMatrix table = [] {
    DenseMatrix m(kFeatureCount, kAnimalCount);
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      for (std::size_t a = 0; a < kAnimalCount; ++a) m(f, a) = kNounWeights[f][a];
    }
    return m;
  }();
  return table;
}

const DenseMatrix& pet_weights() {
  static const DenseMatrix table = [] {
    DenseMatrix m(kFeatureCount, kFeatureCount);
    for (std::size_t r = 0; r < kFeatureCount; ++r) {
      for (std::size_t c = 0; c < kFeatureCount; ++c) m(r, c) = kPetWeights[r][c];
    }
    return m;
  }();
  return table;
}

FeatureBasis FeatureBasis::exact() {
  FeatureBasis basis;
  basis.names.assign(feature_names().begin(), feature_names().end());
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    basis.vectors.push_back(unit_impulse(kFeatureCount, f));
  }
  return basis;
}

FeatureBasis FeatureBasis::random(std::size_t dim, Rng& rng) {
  FeatureBasis basis;
  basis.names.assign(feature_names().begin(), feature_names().end());
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    basis.vectors.push_back(random_unit(dim, rng));
  }
  return basis;
}

namespace {

// Weighted pointer sum for one animal column, before renormalization.
HyperVector raw_noun_vector(const FeatureBasis& basis, std::size_t animal) {
  HyperVector sum(basis.vectors.front().dim());
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    const double w = kNounWeights[f][animal];
    if (w != 0.0) sum += basis.vectors[f] * w;
  }
  return sum;
}

}  // namespace

Lexicon build_petfish_nouns(const FeatureBasis& basis, const BindingBackend& backend) {
  const std::size_t dim = basis.vectors.front().dim();
  Lexicon lexicon(backend, dim, dim);
  for (std::size_t a = 0; a < kAnimalCount; ++a) {
    lexicon.insert({animal_names()[a], Category::Noun,
                    normalized(raw_noun_vector(basis, a))});
  }
  return lexicon;
}

LexicalEntry build_pet_adjective(const FeatureBasis& basis, const BindingBackend& backend) {
  if (backend.is_tensor()) {
    return {"pet", Category::Adjective, pet_weights()};
  }
  // Sum of the 13 unit-weight convolved pointer pairs, output feature
  // convolved with cue feature.
  HyperVector sum(backend.hrr_dim);
  for (std::size_t r = 0; r < kFeatureCount; ++r) {
    for (std::size_t c = 0; c < kFeatureCount; ++c) {
      if (kPetWeights[r][c] != 0.0) {
        sum += circ_conv(basis.vectors[r], basis.vectors[c]);
      }
    }
  }
  return {"pet", Category::Adjective, std::move(sum)};
}

std::array<HyperVector, kAnimalCount> tensor_query_vectors() {
  std::array<HyperVector, kAnimalCount> queries;
  for (std::size_t a = 0; a < kAnimalCount; ++a) {
    HyperVector column(kFeatureCount);
    for (std::size_t f = 0; f < kFeatureCount; ++f) column[f] = kNounWeights[f][a];
    queries[a] = matvec(pet_weights(), column);
  }
  return queries;
}

namespace {

CleanupMemory noun_memory(const FeatureBasis& basis) {
  std::vector<CleanupEntry> entries;
  for (std::size_t a = 0; a < kAnimalCount; ++a) {
    entries.push_back({animal_names()[a], raw_noun_vector(basis, a)});
  }
  return CleanupMemory(std::move(entries), -1.0);  // pure argmax vocabulary
}

std::vector<RankedNoun> rank_query(const HyperVector& query, const CleanupMemory& memory) {
  std::vector<RankedNoun> ranking;
  for (const Retrieval& r : full_ranking(query, memory)) {
    ranking.push_back({r.name, r.score});
  }
  return ranking;
}

void run_backend_trial(const std::string& backend_name, const FeatureBasis& basis,
                       const BindingBackend& backend, std::size_t dim, int trial,
                       bool normalize_outputs, std::vector<RankingRecord>& out) {
  const CleanupMemory memory = noun_memory(basis);
  const LexicalEntry pet = build_pet_adjective(basis, backend);
  for (std::size_t a = 0; a < kAnimalCount; ++a) {
    // Composition uses the published weight column as-is; the cleanup
    // vocabulary holds the exactly-unit nouns.
    const HyperVector raw = raw_noun_vector(basis, a);
    HyperVector query;
    if (backend.is_tensor()) {
      query = matvec(std::get<DenseMatrix>(pet.payload), raw);
    } else {
      query = circ_corr(std::get<HyperVector>(pet.payload), raw);
    }
    if (normalize_outputs) normalize_in_place(query);
    out.push_back({backend_name, dim, trial, animal_names()[a], rank_query(query, memory)});
  }
}

void build_aggregates(RankingReport& report) {
  // Keyed by (backend, dim, animal) in result order; noun keys in fixed
  // animal-name order for deterministic serialization.
  struct Cell {
    std::map<std::string, int> wins;
    std::map<std::string, double> score_sums;
    int trials = 0;
  };
  std::map<std::tuple<std::string, std::size_t, std::string>, Cell> cells;
  for (const RankingRecord& record : report.results) {
    Cell& cell = cells[{record.backend, record.dim, record.animal}];
    cell.trials += 1;
    cell.wins[record.ranking.front().noun] += 1;
    for (const RankedNoun& rn : record.ranking) cell.score_sums[rn.noun] += rn.score;
  }
  for (const auto& [key, cell] : cells) {
    WinnerFrequency wf{std::get<0>(key), std::get<1>(key), std::get<2>(key), {}};
    for (const auto& [noun, count] : cell.wins) wf.winners.emplace_back(noun, count);
    report.winner_frequency.push_back(std::move(wf));

    MeanScores ms{std::get<0>(key), std::get<1>(key), std::get<2>(key), {}};
    for (const auto& [noun, sum] : cell.score_sums) {
      ms.means.emplace_back(noun, sum / cell.trials);
    }
    report.mean_scores.push_back(std::move(ms));
  }
}

}  // namespace

RankingReport run_petfish(const PetfishConfig& config) {
  if (config.trials < 1) throw InvalidInputError("run_petfish: trials must be >= 1");
  for (std::size_t dim : config.hrr_dims) {
    if (dim < 2) throw InvalidInputError("run_petfish: hrr dims must be >= 2");
  }

  RankingReport report;
  report.config = config;

  if (config.run_tensor) {
    run_backend_trial("tensor", FeatureBasis::exact(), BindingBackend::tensor(),
                      kFeatureCount, 0, config.normalize_outputs, report.results);
  }
  for (std::size_t dim : config.hrr_dims) {
    for (int trial = 0; trial < config.trials; ++trial) {
      Rng rng(Rng::derive(config.seed, static_cast<std::uint64_t>(trial)));
      const FeatureBasis basis = FeatureBasis::random(dim, rng);
      run_backend_trial("hrr", basis, BindingBackend::hrr(dim), dim, trial,
                        config.normalize_outputs, report.results);
    }
  }
  build_aggregates(report);

  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path);
    if (!out) {
      throw IoError("run_petfish: cannot open '" + config.output_path + "'");
    }
    out << report_to_json(report) << '\n';
    if (!out) {
      throw IoError("run_petfish: write failed for '" + config.output_path + "'");
    }
  }
  return report;
}

namespace {

using nlohmann::json;

json config_to_json(const PetfishConfig& config) {
  json j;
  j["run_tensor"] = config.run_tensor;
  j["hrr_dims"] = config.hrr_dims;
  j["trials"] = config.trials;
  j["seed"] = config.seed;
  j["normalize_outputs"] = config.normalize_outputs;
  j["output_path"] = config.output_path;
  return j;
}

}  // namespace

std::string report_to_json(const RankingReport& report) {
  json doc;
  doc["config"] = config_to_json(report.config);
  json results = json::array();
  for (const RankingRecord& record : report.results) {
    json ranking = json::array();
    for (const RankedNoun& rn : record.ranking) {
      ranking.push_back({{"noun", rn.noun}, {"score", rn.score}});
    }
    results.push_back({{"backend", record.backend},
                       {"dim", record.dim},
                       {"trial", record.trial},
                       {"animal", record.animal},
                       {"ranking", std::move(ranking)}});
  }
  doc["results"] = std::move(results);

  json winner_frequency = json::array();
  for (const WinnerFrequency& wf : report.winner_frequency) {
    json winners = json::object();
    for (const auto& [noun, count] : wf.winners) winners[noun] = count;
    winner_frequency.push_back({{"backend", wf.backend},
                                {"dim", wf.dim},
                                {"animal", wf.animal},
                                {"winners", std::move(winners)}});
  }
  json mean_scores = json::array();
  for (const MeanScores& ms : report.mean_scores) {
    json means = json::object();
    for (const auto& [noun, mean] : ms.means) means[noun] = mean;
    mean_scores.push_back({{"backend", ms.backend},
                           {"dim", ms.dim},
                           {"animal", ms.animal},
                           {"mean_scores", std::move(means)}});
  }
  doc["aggregates"] = {{"winner_frequency", std::move(winner_frequency)},
                       {"mean_scores", std::move(mean_scores)}};
  return doc.dump(2);
}

std::string report_to_csv(const RankingReport& report) {
  std::ostringstream out;
  out << "backend,dim,trial,animal,rank,noun,score\n";
  out.precision(17);
  for (const RankingRecord& record : report.results) {
    for (std::size_t rank = 0; rank < record.ranking.size(); ++rank) {
      out << record.backend << ',' << record.dim << ',' << record.trial << ','
          << record.animal << ',' << rank + 1 << ',' << record.ranking[rank].noun << ','
          << record.ranking[rank].score << '\n';
    }
  }
  return out.str();
}

}  // namespace holosem::petfish
