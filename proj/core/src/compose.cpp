#include "holosem/compose.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "holosem/convolution.hpp"
#include "holosem/errors.hpp"
#include "holosem/tensor_ops.hpp"

namespace holosem {

RoleTagSet::RoleTagSet(std::vector<std::string> names, std::vector<HyperVector> tags)
    : names_(std::move(names)), tags_(std::move(tags)) {
  if (names_.empty()) throw InvalidInputError("RoleTagSet: no tags");
  std::set<std::string> unique(names_.begin(), names_.end());
  if (unique.size() != names_.size()) {
    throw InvalidInputError("RoleTagSet: duplicate tag names");
  }
}

RoleTagSet RoleTagSet::orthonormal(std::vector<std::string> names) {
  const std::size_t k = names.size();
  std::vector<HyperVector> tags;
  tags.reserve(k);
  for (std::size_t i = 0; i < k; ++i) tags.push_back(unit_impulse(k, i));
  return RoleTagSet(std::move(names), std::move(tags));
}

RoleTagSet RoleTagSet::random_pointers(std::vector<std::string> names, std::size_t dim,
                                       Rng& rng) {
  std::vector<HyperVector> tags;
  tags.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) tags.push_back(random_unit(dim, rng));
  return RoleTagSet(std::move(names), std::move(tags));
}

const HyperVector& RoleTagSet::tag(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw InvalidInputError("RoleTagSet: unknown tag '" + name + "'");
  }
  return tags_[static_cast<std::size_t>(it - names_.begin())];
}

HyperVector additive_compose(const std::vector<TaggedWord>& words, const RoleTagSet& tags,
                             const BindingBackend& backend) {
  if (words.empty()) throw InvalidInputError("additive_compose: no words");
  std::set<std::string> used;
  for (const TaggedWord& word : words) {
    if (!used.insert(word.tag).second) {
      throw InvalidInputError("additive_compose: repeated tag '" + word.tag + "'");
    }
  }
  const std::size_t word_dim = words.front().vec.dim();
  for (const TaggedWord& word : words) {
    if (word.vec.dim() != word_dim) {
      throw DimensionError("additive_compose: inconsistent word dims");
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(words.size()));

  if (backend.is_tensor()) {
    HyperVector sum(word_dim * tags.tag_dim());
    for (const TaggedWord& word : words) {
      sum += outer(word.vec, tags.tag(word.tag)).flatten();
    }
    return sum * scale;
  }

  if (word_dim != backend.hrr_dim) {
    throw DimensionError("additive_compose: words must have the backend dim");
  }
  HyperVector sum(backend.hrr_dim);
  for (const TaggedWord& word : words) {
    const HyperVector& tag = tags.tag(word.tag);
    if (tag.dim() != backend.hrr_dim) {
      throw DimensionError("additive_compose: tags must have the backend dim");
    }
    sum += circ_conv(word.vec, tag);
  }
  return sum * scale;
}

ConjunctiveSimilarity conjunctive_similarity_check(const HyperVector& pred,
                                                   const HyperVector& a,
                                                   const HyperVector& b,
                                                   const BindingBackend& backend) {
  if (a.dim() != b.dim()) {
    throw DimensionError("conjunctive_similarity_check: a and b dims differ");
  }
  ConjunctiveSimilarity result{};
  result.sim_raw = cosine(a, b);
  if (backend.is_tensor()) {
    result.sim_bound = cosine(outer(pred, a).flatten(), outer(pred, b).flatten());
  } else {
    result.sim_bound = cosine(circ_conv(pred, a), circ_conv(pred, b));
  }
  return result;
}

}  // namespace holosem
