#include "holosem/lexicon.hpp"

#include <string>

#include "holosem/convolution.hpp"
#include "holosem/errors.hpp"
#include "holosem/tensor_ops.hpp"

namespace holosem {

std::string_view to_string(Category category) {
  switch (category) {
    case Category::Noun: return "noun";
    case Category::Adjective: return "adjective";
    case Category::IVerb: return "iverb";
    case Category::TVerb: return "tverb";
  }
  return "unknown";
}

Category category_from_string(std::string_view name) {
  if (name == "noun") return Category::Noun;
  if (name == "adjective") return Category::Adjective;
  if (name == "iverb") return Category::IVerb;
  if (name == "tverb") return Category::TVerb;
  throw InvalidInputError("unknown category '" + std::string(name) + "'");
}

Lexicon::Lexicon(BindingBackend backend, std::size_t noun_dim, std::size_t sentence_dim)
    : backend_(backend), noun_dim_(noun_dim), sentence_dim_(sentence_dim) {
  if (noun_dim_ == 0 || sentence_dim_ == 0) {
    throw DimensionError("Lexicon: dims must be >= 1");
  }
  if (backend_.is_hrr() &&
      (noun_dim_ != backend_.hrr_dim || sentence_dim_ != backend_.hrr_dim)) {
    throw DimensionError("Lexicon: under Hrr, noun and sentence dims equal the backend dim");
  }
}

void Lexicon::validate(const LexicalEntry& entry) const {
  if (entry.word.empty()) throw InvalidInputError("Lexicon: empty word");
  const bool finite =
      std::visit([](const auto& payload) { return payload.all_finite(); }, entry.payload);
  if (!finite) {
    throw InvalidInputError("Lexicon: non-finite payload for '" + entry.word + "'");
  }

  if (backend_.is_hrr()) {
    const auto* vec = std::get_if<HyperVector>(&entry.payload);
    if (vec == nullptr || vec->dim() != backend_.hrr_dim) {
      throw DimensionError("Lexicon: Hrr payloads are vectors of the backend dim");
    }
    return;
  }

  switch (entry.category) {
    case Category::Noun: {
      const auto* vec = std::get_if<HyperVector>(&entry.payload);
      if (vec == nullptr || vec->dim() != noun_dim_) {
        throw DimensionError("Lexicon: noun payload must be a vector in N");
      }
      break;
    }
    case Category::Adjective: {
      const auto* mat = std::get_if<DenseMatrix>(&entry.payload);
      if (mat == nullptr || mat->rows != noun_dim_ || mat->cols != noun_dim_) {
        throw DimensionError("Lexicon: adjective payload must be a matrix on N");
      }
      break;
    }
    case Category::IVerb: {
      const auto* mat = std::get_if<DenseMatrix>(&entry.payload);
      if (mat == nullptr || mat->rows != sentence_dim_ || mat->cols != noun_dim_) {
        throw DimensionError("Lexicon: iverb payload must be a matrix N -> S");
      }
      break;
    }
    case Category::TVerb: {
      const auto* tensor = std::get_if<Order3Tensor>(&entry.payload);
      if (tensor == nullptr || tensor->d1 != noun_dim_ || tensor->d2 != sentence_dim_ ||
          tensor->d3 != noun_dim_) {
        throw DimensionError("Lexicon: tverb payload must have extents (N, S, N)");
      }
      break;
    }
  }
}

void Lexicon::insert(LexicalEntry entry) {
  validate(entry);
  const std::string word = entry.word;
  if (!entries_.emplace(word, std::move(entry)).second) {
    throw InvalidInputError("Lexicon: duplicate word '" + word + "'");
  }
}

void Lexicon::insert_or_assign(LexicalEntry entry) {
  validate(entry);
  const std::string word = entry.word;
  entries_.insert_or_assign(word, std::move(entry));
}

const LexicalEntry& Lexicon::at(const std::string& word) const {
  auto it = entries_.find(word);
  if (it == entries_.end()) {
    throw InvalidInputError("Lexicon: unknown word '" + word + "'");
  }
  return it->second;
}

namespace {

void require_category(const LexicalEntry& entry, Category expected, const char* where) {
  if (entry.category != expected) {
    throw InvalidInputError(std::string(where) + ": '" + entry.word + "' is a " +
                            std::string(to_string(entry.category)) + ", expected " +
                            std::string(to_string(expected)));
  }
}

const HyperVector& vector_payload(const LexicalEntry& entry, const char* where) {
  const auto* vec = std::get_if<HyperVector>(&entry.payload);
  if (vec == nullptr) {
    throw InvalidInputError(std::string(where) + ": '" + entry.word +
                            "' does not carry a vector payload");
  }
  return *vec;
}

HyperVector maybe_normalized(HyperVector v, bool normalize) {
  if (normalize) normalize_in_place(v);
  return v;
}

}  // namespace

LexicalEntry build_adjective(std::string word, std::span<const AdjectivePair> pairs,
                             const BindingBackend& backend) {
  if (pairs.empty()) throw InvalidInputError("build_adjective: no pairs");
  RoleFillerStructure structure;
  structure.pairs.reserve(pairs.size());
  for (const AdjectivePair& pair : pairs) {
    structure.pairs.push_back({pair.noun, pair.phrase});
  }
  if (backend.is_tensor()) {
    return {std::move(word), Category::Adjective, encode_tensor(structure)};
  }
  return {std::move(word), Category::Adjective, encode_hrr(structure, backend.hrr_dim)};
}

LexicalEntry build_iverb(std::string word, std::span<const IVerbPair> pairs,
                         const BindingBackend& backend) {
  if (pairs.empty()) throw InvalidInputError("build_iverb: no pairs");
  RoleFillerStructure structure;
  structure.pairs.reserve(pairs.size());
  for (const IVerbPair& pair : pairs) {
    structure.pairs.push_back({pair.subject, pair.sentence});
  }
  if (backend.is_tensor()) {
    return {std::move(word), Category::IVerb, encode_tensor(structure)};
  }
  return {std::move(word), Category::IVerb, encode_hrr(structure, backend.hrr_dim)};
}

LexicalEntry build_tverb(std::string word, std::span<const TVerbTriple> triples,
                         const BindingBackend& backend) {
  if (triples.empty()) throw InvalidInputError("build_tverb: no triples");
  if (backend.is_tensor()) {
    const std::size_t nd = triples.front().subject.dim();
    const std::size_t sd = triples.front().sentence.dim();
    const std::size_t od = triples.front().object.dim();
    Order3Tensor sum(nd, sd, od);
    for (const TVerbTriple& triple : triples) {
      if (triple.subject.dim() != nd || triple.sentence.dim() != sd ||
          triple.object.dim() != od) {
        throw DimensionError("build_tverb: inconsistent triple dims");
      }
      for (std::size_t i = 0; i < nd; ++i) {
        const double si = triple.subject[i];
        if (si == 0.0) continue;
        for (std::size_t j = 0; j < sd; ++j) {
          const double sij = si * triple.sentence[j];
          for (std::size_t k = 0; k < od; ++k) {
            sum(i, j, k) += sij * triple.object[k];
          }
        }
      }
    }
    return {std::move(word), Category::TVerb, std::move(sum)};
  }

  const std::size_t dim = backend.hrr_dim;
  HyperVector sum(dim);
  for (const TVerbTriple& triple : triples) {
    if (triple.subject.dim() != dim || triple.sentence.dim() != dim ||
        triple.object.dim() != dim) {
      throw DimensionError("build_tverb: triples must have the backend dim");
    }
    sum += circ_conv(circ_conv(triple.subject, triple.sentence), triple.object);
  }
  return {std::move(word), Category::TVerb, std::move(sum)};
}

HyperVector apply_adjective(const LexicalEntry& adjective, const LexicalEntry& noun,
                            bool normalize) {
  require_category(adjective, Category::Adjective, "apply_adjective");
  require_category(noun, Category::Noun, "apply_adjective");
  const HyperVector& noun_vec = vector_payload(noun, "apply_adjective");
  if (const auto* mat = std::get_if<DenseMatrix>(&adjective.payload)) {
    return maybe_normalized(matvec(*mat, noun_vec), normalize);
  }
  return maybe_normalized(
      circ_corr(vector_payload(adjective, "apply_adjective"), noun_vec), normalize);
}

HyperVector apply_intransitive(const LexicalEntry& verb, const LexicalEntry& subject,
                               bool normalize) {
  require_category(verb, Category::IVerb, "apply_intransitive");
  require_category(subject, Category::Noun, "apply_intransitive");
  const HyperVector& subject_vec = vector_payload(subject, "apply_intransitive");
  if (const auto* mat = std::get_if<DenseMatrix>(&verb.payload)) {
    return maybe_normalized(matvec(*mat, subject_vec), normalize);
  }
  return maybe_normalized(
      circ_corr(vector_payload(verb, "apply_intransitive"), subject_vec), normalize);
}

HyperVector apply_transitive(const LexicalEntry& verb, const LexicalEntry& subject,
                             const LexicalEntry& object, bool normalize) {
  require_category(verb, Category::TVerb, "apply_transitive");
  require_category(subject, Category::Noun, "apply_transitive");
  require_category(object, Category::Noun, "apply_transitive");
  const HyperVector& subject_vec = vector_payload(subject, "apply_transitive");
  const HyperVector& object_vec = vector_payload(object, "apply_transitive");
  if (const auto* tensor = std::get_if<Order3Tensor>(&verb.payload)) {
    return maybe_normalized(contract3_both(*tensor, subject_vec, object_vec), normalize);
  }
  // Subject first, then object.
  const HyperVector& trace = vector_payload(verb, "apply_transitive");
  return maybe_normalized(circ_corr(circ_corr(trace, subject_vec), object_vec), normalize);
}

}  // namespace holosem
