#pragma once

// The pet-fish concept-combination experiment. Six animals are weighted
// sums over a seven-feature basis (cared-for, vicious, fluffy, scaly,
// lives-sea, lives-house, lives-zoo); the "pet" adjective is a fixed 0/1
// weight matrix over the same basis (13 unit entries). Composition under
// the exact backend is matrix application of the published weights;
// under the holographic backend the same weights ride on random pointers
// and composition is circular correlation. Each pet+animal query is ranked
// against the six animal nouns by cosine.
//
// Ground truth for tests is the exact Tensor computation on the published
// weights — reproduced by an independent oracle (exact_oracle_rankings)
// that shares no arithmetic code with the main library.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "holosem/binding.hpp"
#include "holosem/hypervector.hpp"
#include "holosem/lexicon.hpp"
#include "holosem/rng.hpp"

namespace holosem::petfish {

inline constexpr std::size_t kFeatureCount = 7;
inline constexpr std::size_t kAnimalCount = 6;

const std::array<std::string, kFeatureCount>& feature_names();
const std::array<std::string, kAnimalCount>& animal_names();

// Published noun weights: column a is animal a's feature profile. Columns
// are unit-norm only to the two printed decimals.
const DenseMatrix& noun_weights();  // kFeatureCount x kAnimalCount

// Published "pet" adjective weights (rows = output feature, cols = cue
// feature); exactly 13 entries are 1, the rest 0.
const DenseMatrix& pet_weights();  // kFeatureCount x kFeatureCount

struct FeatureBasis {
  std::vector<std::string> names;    // fixed feature order
  std::vector<HyperVector> vectors;  // one pointer per feature

  // Standard basis of R^7; features exactly orthonormal.
  static FeatureBasis exact();
  // Random pointers for the holographic backend; approximately orthogonal.
  static FeatureBasis random(std::size_t dim, Rng& rng);
};

// Six nouns as weighted pointer sums with the published weights, then
// renormalized to exactly unit norm.
Lexicon build_petfish_nouns(const FeatureBasis& basis, const BindingBackend& backend);

// The pet adjective over the given basis: the weight matrix itself under
// Tensor, the sum of the 13 convolved pointer pairs under Hrr.
LexicalEntry build_pet_adjective(const FeatureBasis& basis, const BindingBackend& backend);

// Unnormalized exact-backend query vectors pet(animal) over the published
// weight columns, indexed like animal_names(). (Ranking normalizes queries,
// but cosine scores are scale-invariant, so the raw vector is what gets
// reported and checked.)
std::array<HyperVector, kAnimalCount> tensor_query_vectors();

struct PetfishConfig {
  bool run_tensor = true;
  std::vector<std::size_t> hrr_dims;  // empty: exact backend only
  int trials = 50;                    // per Hrr dim
  std::uint64_t seed = 1;
  bool normalize_outputs = true;
  std::string output_path;  // non-empty: report JSON written here
};

struct RankedNoun {
  std::string noun;
  double score;
};

struct RankingRecord {
  std::string backend;  // "tensor" or "hrr"
  std::size_t dim;
  int trial;
  std::string animal;
  std::vector<RankedNoun> ranking;  // descending score
};

struct WinnerFrequency {
  std::string backend;
  std::size_t dim;
  std::string animal;
  std::vector<std::pair<std::string, int>> winners;  // noun -> first-place count
};

struct MeanScores {
  std::string backend;
  std::size_t dim;
  std::string animal;
  std::vector<std::pair<std::string, double>> means;  // noun -> mean score
};

struct RankingReport {
  PetfishConfig config;
  std::vector<RankingRecord> results;
  std::vector<WinnerFrequency> winner_frequency;
  std::vector<MeanScores> mean_scores;
};

// Runs the experiment for every configured backend/dim/trial. Exact-backend
// rankings are deterministic; Hrr trials use per-trial derived seeds.
// Writes the report JSON to config.output_path when set (IoError on
// failure).
RankingReport run_petfish(const PetfishConfig& config);

// Independent ground truth: plain-array arithmetic on the published
// weights, no shared code with the vector/matrix kernels.
RankingReport exact_oracle_rankings();
std::array<HyperVector, kAnimalCount> oracle_query_vectors();

std::string report_to_json(const RankingReport& report);
// Flat rows: backend,dim,trial,animal,rank,noun,score
std::string report_to_csv(const RankingReport& report);

}  // namespace holosem::petfish
