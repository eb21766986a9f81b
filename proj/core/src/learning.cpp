#include "holosem/learning.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "holosem/cleanup.hpp"
#include "holosem/convolution.hpp"
#include "holosem/errors.hpp"
#include "holosem/tensor_ops.hpp"

namespace holosem::learn {

namespace {

HyperVector payload_flat(const Payload& payload) {
  return std::visit([](const auto& p) -> HyperVector { return p.flatten(); }, payload);
}

// Cosine that reports 0 instead of throwing when either side is zero;
// evaluation must not die on a degenerate learner state.
double safe_cosine(const HyperVector& a, const HyperVector& b) {
  if (a.dim() != b.dim()) return 0.0;
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot(a, b) / (na * nb);
}

void check_h(double h) {
  if (!(h >= 0.0 && h <= 1.0)) {
    throw InvalidInputError("learning: h must lie in [0, 1]");
  }
}

void record_update(LearnerState& state, const std::string& word, double delta_norm) {
  state.update_norm_sums[word] += delta_norm;
  state.update_counts[word] += 1;
}

// new = (1-h) old + h term, returning the delta norm.
Payload convex_mix(const Payload& old_payload, const Payload& term, double h,
                   double& delta_norm) {
  if (const auto* old_vec = std::get_if<HyperVector>(&old_payload)) {
    const auto& term_vec = std::get<HyperVector>(term);
    HyperVector next = *old_vec * (1.0 - h) + term_vec * h;
    delta_norm = (next - *old_vec).norm();
    return next;
  }
  if (const auto* old_mat = std::get_if<DenseMatrix>(&old_payload)) {
    const auto& term_mat = std::get<DenseMatrix>(term);
    DenseMatrix next = *old_mat;
    next *= (1.0 - h);
    DenseMatrix scaled = term_mat;
    scaled *= h;
    next += scaled;
    delta_norm = (next - *old_mat).frobenius_norm();
    return next;
  }
  throw InvalidInputError("learning: updates only defined for vector/matrix payloads");
}

}  // namespace

GroundTruthWorld make_world(const WorldSpec& spec, Rng& rng) {
  Lexicon hidden(spec.backend, spec.dim, spec.dim);

  for (const std::string& noun : spec.nouns) {
    hidden.insert({noun, Category::Noun, random_unit(spec.dim, rng)});
  }

  std::vector<PhraseLabel> phrases = spec.phrases;
  if (phrases.empty()) {
    for (const std::string& adjective : spec.adjectives) {
      for (const std::string& noun : spec.nouns) {
        phrases.push_back({LabelKind::AdjNoun, adjective, noun, 1.0});
      }
    }
    for (const std::string& iverb : spec.iverbs) {
      for (const std::string& noun : spec.nouns) {
        phrases.push_back({LabelKind::NounIVerb, iverb, noun, 1.0});
      }
    }
  }
  if (phrases.empty()) {
    throw InvalidInputError("make_world: empty phrase distribution");
  }

  // One hidden phrase vector per label, drawn in label order.
  std::map<std::string, std::vector<AdjectivePair>> adjective_pairs;
  std::map<std::string, std::vector<IVerbPair>> iverb_pairs;
  double weight_sum = 0.0;
  for (const PhraseLabel& label : phrases) {
    if (!hidden.contains(label.noun)) {
      throw InvalidInputError("make_world: unknown noun '" + label.noun + "'");
    }
    if (label.weight <= 0.0) {
      throw InvalidInputError("make_world: phrase weights must be positive");
    }
    weight_sum += label.weight;
    const HyperVector phrase_vec = random_unit(spec.dim, rng);
    const auto& noun_vec = std::get<HyperVector>(hidden.at(label.noun).payload);
    if (label.kind == LabelKind::AdjNoun) {
      adjective_pairs[label.modifier].push_back({phrase_vec, noun_vec});
    } else {
      iverb_pairs[label.modifier].push_back({noun_vec, phrase_vec});
    }
  }

  for (const auto& [word, pairs] : adjective_pairs) {
    hidden.insert(build_adjective(word, pairs, spec.backend));
  }
  for (const auto& [word, pairs] : iverb_pairs) {
    hidden.insert(build_iverb(word, pairs, spec.backend));
  }

  GroundTruthWorld world{std::move(hidden), spec.noise_sigma, std::move(phrases)};
  for (PhraseLabel& label : world.phrases) label.weight /= weight_sum;
  return world;
}

HyperVector clean_composition(const GroundTruthWorld& world, const PhraseLabel& label) {
  const LexicalEntry& noun = world.hidden.at(label.noun);
  if (label.kind == LabelKind::AdjNoun) {
    return apply_adjective(world.hidden.at(label.modifier), noun);
  }
  return apply_intransitive(world.hidden.at(label.modifier), noun);
}

Stimulus generate_stimulus(const GroundTruthWorld& world, Rng& rng) {
  if (world.phrases.empty()) {
    throw InvalidInputError("generate_stimulus: empty phrase distribution");
  }
  const double u = rng.next_uniform();
  double cumulative = 0.0;
  const PhraseLabel* chosen = &world.phrases.back();
  for (const PhraseLabel& label : world.phrases) {
    cumulative += label.weight;
    if (u < cumulative) {
      chosen = &label;
      break;
    }
  }

  HyperVector percept = clean_composition(world, *chosen);
  if (world.noise_sigma > 0.0) {
    for (std::size_t i = 0; i < percept.dim(); ++i) {
      percept[i] += world.noise_sigma * rng.next_gaussian();
    }
  }
  normalize_in_place(percept);
  return {*chosen, percept};
}

LearnerState::LearnerState(const BindingBackend& backend, std::size_t dim,
                           LearnerOptions opts)
    : learned(backend, dim, dim), options(opts) {
  check_h(options.h);
}

LexicalEntry init_unseen(const HyperVector& percept, Category kind,
                         const BindingBackend& backend, std::string word) {
  if (percept.norm() == 0.0) {
    throw InvalidInputError("init_unseen: zero percept");
  }
  switch (kind) {
    case Category::Noun:
      return {std::move(word), Category::Noun, percept};
    case Category::Adjective:
    case Category::IVerb: {
      Payload payload;
      if (backend.is_tensor()) {
        payload = outer(percept, percept);
      } else {
        payload = circ_conv(percept, percept);
      }
      return {std::move(word), kind, std::move(payload)};
    }
    default:
      throw InvalidInputError("init_unseen: only nouns, adjectives, and iverbs");
  }
}

void update_adjective(LearnerState& state, const std::string& adjective_word,
                      const HyperVector& percept, const std::string& noun_word) {
  check_h(state.options.h);
  LexicalEntry entry = state.learned.at(adjective_word);
  const auto& noun_vec = std::get<HyperVector>(state.learned.at(noun_word).payload);

  Payload term;
  if (state.learned.backend().is_tensor()) {
    term = outer(percept, noun_vec);
  } else {
    term = circ_conv(percept, noun_vec);
  }
  double delta = 0.0;
  entry.payload = convex_mix(entry.payload, term, state.options.h, delta);
  state.learned.insert_or_assign(std::move(entry));
  record_update(state, adjective_word, delta);
}

namespace {

// Shared noun rule: mix toward the role factor extracted from a function
// word, cueing with the percept (the filler side).
void update_noun_impl(LearnerState& state, const std::string& noun_word,
                      const HyperVector& percept, const std::string& function_word) {
  check_h(state.options.h);
  LexicalEntry entry = state.learned.at(noun_word);
  const LexicalEntry& function_entry = state.learned.at(function_word);

  HyperVector extracted;
  if (const auto* mat = std::get_if<DenseMatrix>(&function_entry.payload)) {
    extracted = matvec_transposed(*mat, percept);
  } else {
    extracted = circ_corr(std::get<HyperVector>(function_entry.payload), percept);
  }

  auto& noun_vec = std::get<HyperVector>(entry.payload);
  HyperVector next = noun_vec * (1.0 - state.options.h) + extracted * state.options.h;
  if (state.options.renormalize_nouns && next.norm() > 0.0) {
    normalize_in_place(next);
  }
  const double delta = (next - noun_vec).norm();
  noun_vec = std::move(next);
  state.learned.insert_or_assign(std::move(entry));
  record_update(state, noun_word, delta);
}

}  // namespace

void update_noun(LearnerState& state, const std::string& noun_word,
                 const HyperVector& percept, const std::string& adjective_word) {
  update_noun_impl(state, noun_word, percept, adjective_word);
}

void update_iverb(LearnerState& state, const std::string& iverb_word,
                  const std::string& noun_word, const HyperVector& percept) {
  check_h(state.options.h);
  LexicalEntry entry = state.learned.at(iverb_word);
  const auto& noun_vec = std::get<HyperVector>(state.learned.at(noun_word).payload);

  Payload term;
  if (state.learned.backend().is_tensor()) {
    term = outer(percept, noun_vec);
  } else {
    term = circ_conv(percept, noun_vec);
  }
  double delta = 0.0;
  entry.payload = convex_mix(entry.payload, term, state.options.h, delta);
  state.learned.insert_or_assign(std::move(entry));
  record_update(state, iverb_word, delta);
}

void update_noun_from_iverb(LearnerState& state, const std::string& noun_word,
                            const HyperVector& percept, const std::string& iverb_word) {
  update_noun_impl(state, noun_word, percept, iverb_word);
}

void present(LearnerState& state, const Stimulus& stimulus) {
  const PhraseLabel& label = stimulus.label;
  const Category modifier_kind =
      label.kind == LabelKind::AdjNoun ? Category::Adjective : Category::IVerb;

  // Initialize missing words first; a word initialized on this presentation
  // is not additionally updated.
  const bool noun_was_known = state.learned.contains(label.noun);
  const bool modifier_was_known = state.learned.contains(label.modifier);
  if (!noun_was_known) {
    state.learned.insert(
        init_unseen(stimulus.percept, Category::Noun, state.learned.backend(), label.noun));
  }
  if (!modifier_was_known) {
    state.learned.insert(init_unseen(stimulus.percept, modifier_kind,
                                     state.learned.backend(), label.modifier));
  }

  const auto update_modifier = [&] {
    if (!modifier_was_known) return;
    if (label.kind == LabelKind::AdjNoun) {
      update_adjective(state, label.modifier, stimulus.percept, label.noun);
    } else {
      update_iverb(state, label.modifier, label.noun, stimulus.percept);
    }
  };
  const auto update_noun_side = [&] {
    if (!noun_was_known) return;
    if (label.kind == LabelKind::AdjNoun) {
      update_noun(state, label.noun, stimulus.percept, label.modifier);
    } else {
      update_noun_from_iverb(state, label.noun, stimulus.percept, label.modifier);
    }
  };

  if (state.options.noun_update_first) {
    update_noun_side();
    update_modifier();
  } else {
    update_modifier();
    update_noun_side();
  }

  state.presentations += 1;
  state.seen_counts[label.noun] += 1;
  state.seen_counts[label.modifier] += 1;
}

namespace {

EvalPoint evaluate(const GroundTruthWorld& world, LearnerState& state) {
  EvalPoint point;
  point.epoch = state.presentations;

  // Per-word cosine to the hidden representation, for words the learner has.
  for (const auto& [word, hidden_entry] : world.hidden.entries()) {
    if (!state.learned.contains(word)) continue;
    WordMetric metric;
    metric.word = word;
    metric.cosine_to_truth = safe_cosine(payload_flat(state.learned.at(word).payload),
                                         payload_flat(hidden_entry.payload));
    const auto count_it = state.update_counts.find(word);
    metric.mean_update_norm =
        count_it == state.update_counts.end() || count_it->second == 0
            ? 0.0
            : state.update_norm_sums[word] / static_cast<double>(count_it->second);
    point.words.push_back(std::move(metric));
  }

  // Retrieval accuracy: compose each label on the learned lexicon and clean
  // up against the hidden clean compositions.
  std::vector<CleanupEntry> targets;
  for (const PhraseLabel& label : world.phrases) {
    targets.push_back({label.key(), clean_composition(world, label)});
  }
  const CleanupMemory memory(std::move(targets), -1.0);

  std::size_t correct = 0;
  for (const PhraseLabel& label : world.phrases) {
    if (!state.learned.contains(label.modifier) || !state.learned.contains(label.noun)) {
      continue;
    }
    const LexicalEntry& modifier = state.learned.at(label.modifier);
    const LexicalEntry& noun = state.learned.at(label.noun);
    HyperVector query = label.kind == LabelKind::AdjNoun
                            ? apply_adjective(modifier, noun)
                            : apply_intransitive(modifier, noun);
    if (query.norm() == 0.0) continue;
    const auto best = cleanup(query, memory);
    if (best.has_value() && best->name == label.key()) correct += 1;
  }
  point.retrieval_accuracy =
      static_cast<double>(correct) / static_cast<double>(world.phrases.size());

  state.update_norm_sums.clear();
  state.update_counts.clear();
  return point;
}

}  // namespace

LearningCurve train(const GroundTruthWorld& world, LearnerState& state,
                    std::uint64_t presentations, std::uint64_t eval_every, Rng& rng) {
  if (world.phrases.empty()) {
    throw InvalidInputError("train: empty phrase distribution");
  }
  LearningCurve curve;
  curve.points.push_back(evaluate(world, state));

  for (std::uint64_t step = 1; step <= presentations; ++step) {
    present(state, generate_stimulus(world, rng));
    if (eval_every > 0 && step % eval_every == 0) {
      curve.points.push_back(evaluate(world, state));
    }
  }
  if (presentations > 0 && curve.points.back().epoch != state.presentations) {
    curve.points.push_back(evaluate(world, state));
  }
  return curve;
}

namespace {

using nlohmann::json;

json point_to_json(const EvalPoint& point) {
  json words = json::array();
  for (const WordMetric& metric : point.words) {
    words.push_back({{"word", metric.word},
                     {"cosine_to_truth", metric.cosine_to_truth},
                     {"mean_update_norm", metric.mean_update_norm}});
  }
  return {{"epoch", point.epoch},
          {"retrieval_accuracy", point.retrieval_accuracy},
          {"words", std::move(words)}};
}

}  // namespace

std::string curve_to_json(const LearningCurve& curve) {
  json points = json::array();
  for (const EvalPoint& point : curve.points) points.push_back(point_to_json(point));
  return json{{"points", std::move(points)}}.dump(2);
}

std::string curve_to_csv(const LearningCurve& curve) {
  std::ostringstream out;
  out.precision(17);
  out << "epoch,word,metric,value\n";
  for (const EvalPoint& point : curve.points) {
    out << point.epoch << ",all,retrieval_accuracy," << point.retrieval_accuracy << '\n';
    for (const WordMetric& metric : point.words) {
      out << point.epoch << ',' << metric.word << ",cosine_to_truth,"
          << metric.cosine_to_truth << '\n';
      out << point.epoch << ',' << metric.word << ",mean_update_norm,"
          << metric.mean_update_norm << '\n';
    }
  }
  return out.str();
}

std::string learner_checkpoint_json(const LearnerState& state, std::uint64_t seed) {
  json doc = json::parse(lexicon_to_json(state.learned));
  doc["metadata"] = {{"h", state.options.h},
                     {"presentations_done", state.presentations},
                     {"seed", seed}};
  return doc.dump(2);
}

}  // namespace holosem::learn
