#include <algorithm>
#include <array>
#include <cmath>

#include "holosem/petfish.hpp"

// Independent ground truth for the exact-backend pet-fish rankings. This
// file deliberately repeats the published weights and does every bit of
// arithmetic with plain loops over C arrays — no HyperVector/DenseMatrix
// kernels, no cleanup memory — so that agreement with run_petfish is a real
// two-route check rather than the same code observing itself.

namespace holosem::petfish {

namespace {

constexpr int kF = 7;  // features
constexpr int kA = 6;  // animals

constexpr double kOracleNouns[kF][kA] = {
    {0.13, 0.44, 0.57, 0.67, 0.00, 0.19},
    {0.51, 0.00, 0.13, 0.37, 0.57, 0.62},
    {0.00, 0.00, 0.57, 0.37, 0.00, 0.44},
    {0.63, 0.62, 0.00, 0.00, 0.57, 0.00},
    {0.51, 0.00, 0.00, 0.00, 0.57, 0.00},
    {0.19, 0.62, 0.57, 0.52, 0.00, 0.00},
    {0.19, 0.19, 0.00, 0.00, 0.11, 0.62},
};

constexpr double kOraclePet[kF][kF] = {
    {1, 1, 1, 1, 1, 1, 1},
    {0, 1, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 1, 1},
    {0, 0, 0, 0, 0, 0, 0},
};

void oracle_query(int animal, double out[kF]) {
  for (int r = 0; r < kF; ++r) {
    double sum = 0.0;
    for (int c = 0; c < kF; ++c) sum += kOraclePet[r][c] * kOracleNouns[c][animal];
    out[r] = sum;
  }
}

double oracle_norm(const double v[kF]) {
  double sum = 0.0;
  for (int i = 0; i < kF; ++i) sum += v[i] * v[i];
  return std::sqrt(sum);
}

double oracle_cosine_vs_noun(const double query[kF], int animal) {
  double dot = 0.0;
  for (int i = 0; i < kF; ++i) dot += query[i] * kOracleNouns[i][animal];
  double noun_norm_sq = 0.0;
  for (int i = 0; i < kF; ++i) {
    noun_norm_sq += kOracleNouns[i][animal] * kOracleNouns[i][animal];
  }
  return dot / (oracle_norm(query) * std::sqrt(noun_norm_sq));
}

}  // namespace

std::array<HyperVector, kAnimalCount> oracle_query_vectors() {
  std::array<HyperVector, kAnimalCount> queries;
  for (int a = 0; a < kA; ++a) {
    double q[kF];
    oracle_query(a, q);
    queries[static_cast<std::size_t>(a)] =
        HyperVector(std::vector<double>(q, q + kF));
  }
  return queries;
}

RankingReport exact_oracle_rankings() {
  RankingReport report;
  report.config.run_tensor = true;
  report.config.trials = 1;

  for (int a = 0; a < kA; ++a) {
    double query[kF];
    oracle_query(a, query);

    std::vector<RankedNoun> ranking;
    for (int other = 0; other < kA; ++other) {
      ranking.push_back(
          {animal_names()[static_cast<std::size_t>(other)], oracle_cosine_vs_noun(query, other)});
    }
    std::sort(ranking.begin(), ranking.end(), [](const RankedNoun& x, const RankedNoun& y) {
      if (x.score != y.score) return x.score > y.score;
      return x.noun < y.noun;
    });
    report.results.push_back({"tensor", kFeatureCount, 0,
                              animal_names()[static_cast<std::size_t>(a)], std::move(ranking)});
  }

  for (const RankingRecord& record : report.results) {
    report.winner_frequency.push_back(
        {"tensor", kFeatureCount, record.animal, {{record.ranking.front().noun, 1}}});
    MeanScores ms{"tensor", kFeatureCount, record.animal, {}};
    std::vector<RankedNoun> by_name(record.ranking);
    std::sort(by_name.begin(), by_name.end(),
              [](const RankedNoun& x, const RankedNoun& y) { return x.noun < y.noun; });
    for (const RankedNoun& rn : by_name) ms.means.emplace_back(rn.noun, rn.score);
    report.mean_scores.push_back(std::move(ms));
  }
  return report;
}

}  // namespace holosem::petfish
