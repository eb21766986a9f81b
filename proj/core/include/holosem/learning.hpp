#pragma once

// Supervised grounded learning. A hidden lexicon plays the role of the
// world: labelled percepts are its clean compositions plus Gaussian noise.
// The learner sees (label, percept) pairs and moves its own lexicon by
// convex-mixture updates,
//
//   A      <- (1-h) A + h * bind(percept, learned_noun)
//   noun   <- (1-h) noun + h * extract_role(A, percept)
//
// with the same shape for intransitive verbs. Unseen words are initialized
// from the percept itself: nouns as the percept, adjectives and verbs as the
// percept bound with itself. Updates within one presentation run
// function-word-first by default (configurable to noun-first for ablation).
// The training loop is strictly sequential; evaluation reads an immutable
// snapshot.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "holosem/lexicon.hpp"
#include "holosem/rng.hpp"

namespace holosem::learn {

enum class LabelKind { AdjNoun, NounIVerb };

struct PhraseLabel {
  LabelKind kind = LabelKind::AdjNoun;
  std::string modifier;  // the adjective or the intransitive verb
  std::string noun;
  double weight = 1.0;

  // Display key, also the cleanup-memory name for retrieval scoring.
  std::string key() const {
    return kind == LabelKind::AdjNoun ? modifier + " " + noun : noun + " " + modifier;
  }
};

struct GroundTruthWorld {
  Lexicon hidden;
  double noise_sigma = 0.05;  // per-coordinate noise std
  std::vector<PhraseLabel> phrases;  // weights sum to 1
};

// Convenience world builder: random unit nouns, one random phrase vector
// per label, adjectives/verbs assembled from their labels' pairs. Weights
// are normalized to sum to 1. Draw order is nouns first, then phrase
// vectors in label order, so a fixed rng seed pins the whole world.
struct WorldSpec {
  BindingBackend backend = BindingBackend::tensor();
  std::size_t dim = 64;
  std::vector<std::string> adjectives;
  std::vector<std::string> nouns;
  std::vector<std::string> iverbs;
  std::vector<PhraseLabel> phrases;  // empty: all adj x noun and noun x iverb pairs
  double noise_sigma = 0.05;
};

GroundTruthWorld make_world(const WorldSpec& spec, Rng& rng);

// Noise-free composition of a label on the hidden lexicon.
HyperVector clean_composition(const GroundTruthWorld& world, const PhraseLabel& label);

struct Stimulus {
  PhraseLabel label;
  HyperVector percept;  // unit norm
};

// Samples a label by weight, composes it on the hidden lexicon, adds
// isotropic N(0, noise_sigma^2) per coordinate, renormalizes.
Stimulus generate_stimulus(const GroundTruthWorld& world, Rng& rng);

struct LearnerOptions {
  double h = 0.1;                  // mixing rate, in [0, 1]
  bool renormalize_nouns = true;   // keep role vectors unit across time
  bool noun_update_first = false;  // ablation: reverse the update order
};

struct LearnerState {
  Lexicon learned;
  LearnerOptions options;
  std::uint64_t presentations = 0;
  std::map<std::string, std::uint64_t> seen_counts;

  LearnerState(const BindingBackend& backend, std::size_t dim, LearnerOptions opts = {});

  // Update-norm accounting for the learning curve; reset at each eval.
  std::map<std::string, double> update_norm_sums;
  std::map<std::string, std::uint64_t> update_counts;
};

// Initialization of unseen words from a unit percept: Noun -> the percept;
// Adjective/IVerb -> the percept bound with itself.
LexicalEntry init_unseen(const HyperVector& percept, Category kind,
                         const BindingBackend& backend, std::string word);

// Single update rules; both words must already exist in the learner.
void update_adjective(LearnerState& state, const std::string& adjective_word,
                      const HyperVector& percept, const std::string& noun_word);
void update_noun(LearnerState& state, const std::string& noun_word,
                 const HyperVector& percept, const std::string& adjective_word);
void update_iverb(LearnerState& state, const std::string& iverb_word,
                  const std::string& noun_word, const HyperVector& percept);
void update_noun_from_iverb(LearnerState& state, const std::string& noun_word,
                            const HyperVector& percept, const std::string& iverb_word);

// One full presentation: missing words are initialized from the percept;
// words already known get the convex updates, in the configured order.
void present(LearnerState& state, const Stimulus& stimulus);

struct WordMetric {
  std::string word;
  double cosine_to_truth;    // flattened-payload cosine learned vs hidden
  double mean_update_norm;   // mean payload delta norm since last eval
};

struct EvalPoint {
  std::uint64_t epoch;  // presentations completed
  double retrieval_accuracy;
  std::vector<WordMetric> words;
};

struct LearningCurve {
  std::vector<EvalPoint> points;
};

// Runs `presentations` stimuli with an evaluation every `eval_every` steps
// (plus the initial and final states). Deterministic for a fixed world,
// learner state, and stream rng.
LearningCurve train(const GroundTruthWorld& world, LearnerState& state,
                    std::uint64_t presentations, std::uint64_t eval_every, Rng& rng);

std::string curve_to_json(const LearningCurve& curve);
// Long-form rows: epoch,word,metric,value
std::string curve_to_csv(const LearningCurve& curve);

// Learner checkpoint: the lexicon serialization plus a metadata block
// {h, presentations_done, seed}.
std::string learner_checkpoint_json(const LearnerState& state, std::uint64_t seed);

}  // namespace holosem::learn
