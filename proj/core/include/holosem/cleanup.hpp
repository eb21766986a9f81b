#pragma once

// Cleanup memory: a named vocabulary of unit vectors resolved by nearest
// cosine. Unbinding returns noisy vectors; cleanup is the separate, explicit
// second stage that snaps them back to a known symbol. Immutable after
// construction; concurrent reads are safe.

#include <optional>
#include <string>
#include <vector>

#include "holosem/hypervector.hpp"

namespace holosem {

struct CleanupEntry {
  std::string name;
  HyperVector vector;
};

class CleanupMemory {
 public:
  // Entries are unit-normalized on construction. Throws on duplicate names,
  // inconsistent dims, zero vectors, or an empty entry list.
  CleanupMemory(std::vector<CleanupEntry> entries, double threshold);

  const std::vector<CleanupEntry>& entries() const { return entries_; }
  double threshold() const { return threshold_; }
  std::size_t dim() const { return entries_.front().vector.dim(); }

 private:
  std::vector<CleanupEntry> entries_;
  double threshold_;
};

struct Retrieval {
  std::string name;
  double score;
};

// Argmax by cosine; nullopt when the best score falls below the memory's
// threshold. Ties break lexicographically by name.
std::optional<Retrieval> cleanup(const HyperVector& query, const CleanupMemory& memory);

// Every entry, sorted by descending cosine (ties lexicographic).
std::vector<Retrieval> full_ranking(const HyperVector& query, const CleanupMemory& memory);

}  // namespace holosem
