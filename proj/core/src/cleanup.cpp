#include "holosem/cleanup.hpp"

#include <algorithm>
#include <set>

#include "holosem/errors.hpp"

namespace holosem {

CleanupMemory::CleanupMemory(std::vector<CleanupEntry> entries, double threshold)
    : entries_(std::move(entries)), threshold_(threshold) {
  if (entries_.empty()) {
    throw InvalidInputError("CleanupMemory: empty vocabulary");
  }
  if (threshold_ < -1.0 || threshold_ > 1.0) {
    throw InvalidInputError("CleanupMemory: threshold must lie in [-1, 1]");
  }
  const std::size_t d = entries_.front().vector.dim();
  std::set<std::string> names;
  for (CleanupEntry& entry : entries_) {
    if (entry.vector.dim() != d) {
      throw DimensionError("CleanupMemory: inconsistent entry dims");
    }
    if (!names.insert(entry.name).second) {
      throw InvalidInputError("CleanupMemory: duplicate name '" + entry.name + "'");
    }
    if (!entry.vector.all_finite()) {
      throw InvalidInputError("CleanupMemory: non-finite entry '" + entry.name + "'");
    }
    normalize_in_place(entry.vector);  // throws on zero vectors
  }
}

std::vector<Retrieval> full_ranking(const HyperVector& query, const CleanupMemory& memory) {
  if (query.dim() != memory.dim()) {
    throw DimensionError("full_ranking: query dim must equal memory dim");
  }
  std::vector<Retrieval> scored;
  scored.reserve(memory.entries().size());
  for (const CleanupEntry& entry : memory.entries()) {
    scored.push_back({entry.name, cosine(query, entry.vector)});
  }
  std::sort(scored.begin(), scored.end(), [](const Retrieval& a, const Retrieval& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.name < b.name;
  });
  return scored;
}

std::optional<Retrieval> cleanup(const HyperVector& query, const CleanupMemory& memory) {
  std::vector<Retrieval> ranked = full_ranking(query, memory);
  if (ranked.front().score < memory.threshold()) return std::nullopt;
  return ranked.front();
}

}  // namespace holosem
