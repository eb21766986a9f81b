#pragma once

// Grammar-typed lexicon. Nouns live in the noun space N, sentences in S;
// under the Tensor backend adjectives are matrices on N, intransitive verbs
// are matrices N -> S, transitive verbs are order-3 tensors with extents
// (N, S, N). Under the Hrr backend every category collapses to a single
// hypervector of the backend dimension. Function words are built as
// role-filler sums: adjectives bind phrase vectors to their nouns, verbs
// bind sentences to their subject (and object) nouns.
//
// A Lexicon is immutable during composition; the grounded learning loop is
// the single writer and takes exclusive access while it updates entries.

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <variant>

#include "holosem/binding.hpp"
#include "holosem/hypervector.hpp"

namespace holosem {

enum class Category { Noun, Adjective, IVerb, TVerb };

std::string_view to_string(Category category);
Category category_from_string(std::string_view name);

using Payload = std::variant<HyperVector, DenseMatrix, Order3Tensor>;

struct LexicalEntry {
  std::string word;
  Category category = Category::Noun;
  Payload payload;
};

class Lexicon {
 public:
  Lexicon(BindingBackend backend, std::size_t noun_dim, std::size_t sentence_dim);

  const BindingBackend& backend() const { return backend_; }
  std::size_t noun_dim() const { return noun_dim_; }
  std::size_t sentence_dim() const { return sentence_dim_; }

  // Validates the payload shape against (category, backend); throws
  // InvalidInputError on duplicate words.
  void insert(LexicalEntry entry);
  // Same validation, but replaces an existing entry (learning updates).
  void insert_or_assign(LexicalEntry entry);

  bool contains(const std::string& word) const { return entries_.count(word) != 0; }
  const LexicalEntry& at(const std::string& word) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, LexicalEntry>& entries() const { return entries_; }

 private:
  void validate(const LexicalEntry& entry) const;

  BindingBackend backend_;
  std::size_t noun_dim_;
  std::size_t sentence_dim_;
  std::map<std::string, LexicalEntry> entries_;
};

// --- builders -------------------------------------------------------------

struct AdjectivePair {
  HyperVector phrase;  // the adjective-noun vector (e.g. "red car")
  HyperVector noun;    // the role it is bound to (e.g. "car")
};

struct IVerbPair {
  HyperVector subject;
  HyperVector sentence;
};

struct TVerbTriple {
  HyperVector subject;
  HyperVector sentence;
  HyperVector object;
};

// adj = sum_i phrase_i (x) noun_i, with the noun on the cue side.
LexicalEntry build_adjective(std::string word, std::span<const AdjectivePair> pairs,
                             const BindingBackend& backend);

// verb = sum_i sentence_i (x) subject_i.
LexicalEntry build_iverb(std::string word, std::span<const IVerbPair> pairs,
                         const BindingBackend& backend);

// verb = sum_ij subject_i (x) sentence_ij (x) object_j; under Hrr the three
// factors are convolved together.
LexicalEntry build_tverb(std::string word, std::span<const TVerbTriple> triples,
                         const BindingBackend& backend);

// --- composition ----------------------------------------------------------

// Adjective applied to a noun: matvec under Tensor, circular correlation
// (unbinding the noun role) under Hrr. Composition never normalizes unless
// asked to.
HyperVector apply_adjective(const LexicalEntry& adjective, const LexicalEntry& noun,
                            bool normalize = false);

// Intransitive verb applied to its subject, yielding a sentence vector.
HyperVector apply_intransitive(const LexicalEntry& verb, const LexicalEntry& subject,
                               bool normalize = false);

// Transitive verb applied to (subject, object). Under Hrr the subject is
// unbound first, then the object; correlation composition is
// order-sensitive, so the order is part of the contract.
HyperVector apply_transitive(const LexicalEntry& verb, const LexicalEntry& subject,
                             const LexicalEntry& object, bool normalize = false);

// --- serialization ----------------------------------------------------------

// Versioned JSON document: {format_version, backend, noun_dim, sentence_dim,
// entries:[{word, category, shape, values}]}. Values round-trip exactly.
std::string lexicon_to_json(const Lexicon& lexicon);
Lexicon lexicon_from_json(const std::string& text);

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path);
Lexicon load_lexicon(const std::filesystem::path& path);

}  // namespace holosem
