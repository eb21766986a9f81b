#pragma once

// Additive vs conjunctive binding experiments. Additive binding tags each
// word with a grammatical role vector and sums:
//
//   phrase = (1/sqrt(k)) * sum_i word_i (x) tag_i
//
// which boosts the similarity of phrases sharing a predicate: for unit
// vectors with cos(a, b) = s and orthonormal tags the phrase similarity is
// (1 + s) / 2. Conjunctive binding (plain product binding) instead preserves
// constituent similarity exactly under the Tensor backend:
// cos(p (x) a, p (x) b) = cos(a, b).

#include <string>
#include <vector>

#include "holosem/binding.hpp"
#include "holosem/hypervector.hpp"
#include "holosem/rng.hpp"

namespace holosem {

// Named role tags: exactly orthonormal basis vectors for Tensor use, random
// pointers (approximately orthogonal) for Hrr use.
class RoleTagSet {
 public:
  static RoleTagSet orthonormal(std::vector<std::string> names);
  static RoleTagSet random_pointers(std::vector<std::string> names, std::size_t dim,
                                    Rng& rng);

  const std::vector<std::string>& names() const { return names_; }
  const HyperVector& tag(const std::string& name) const;
  std::size_t tag_dim() const { return tags_.front().dim(); }

 private:
  RoleTagSet(std::vector<std::string> names, std::vector<HyperVector> tags);

  std::vector<std::string> names_;
  std::vector<HyperVector> tags_;
};

struct TaggedWord {
  HyperVector vec;
  std::string tag;
};

// (1/sqrt(k)) sum_i vec_i (x) tag_i. Tensor: flattened outer products (the
// result lives in the word-tag product space). Hrr: circular convolutions in
// the backend dimension. Repeated tags and dim mismatches are errors.
HyperVector additive_compose(const std::vector<TaggedWord>& words, const RoleTagSet& tags,
                             const BindingBackend& backend);

struct ConjunctiveSimilarity {
  double sim_bound;  // cos(pred (x) a, pred (x) b)
  double sim_raw;    // cos(a, b)
};

// Computes both similarities from the actual bound representations; under
// Tensor the two agree exactly for unit pred.
ConjunctiveSimilarity conjunctive_similarity_check(const HyperVector& pred,
                                                   const HyperVector& a,
                                                   const HyperVector& b,
                                                   const BindingBackend& backend);

}  // namespace holosem
