#include "plogic/compress.hpp"

#include <stdexcept>

namespace plogic {

std::optional<World> merge_pair(const World& a, const World& b) {
  if (a.size() != b.size()) throw std::invalid_argument("worlds differ in length");
  std::optional<std::size_t> split;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (a[i] == Truth::dc || b[i] == Truth::dc || split) return std::nullopt;
    split = i;
  }
  if (!split) return std::nullopt;
  World merged = a;
  merged[*split] = Truth::dc;
  return merged;
}

Tableau compress_tableau(const Tableau& t, CompressionStats* stats) {
  if (!expansions_disjoint(t.worlds))
    throw std::invalid_argument("cannot compress a tableau with overlapping expansions");

  CompressionStats local;
  local.worlds_before = t.world_count();
  std::vector<World> worlds = t.worlds;

  for (;;) {
    ++local.passes;
    std::vector<bool> used(worlds.size(), false);
    std::vector<World> next;
    next.reserve(worlds.size());
    std::size_t merged_this_pass = 0;
    for (std::size_t i = 0; i < worlds.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      World keep = worlds[i];
      for (std::size_t j = i + 1; j < worlds.size(); ++j) {
        if (used[j]) continue;
        if (auto m = merge_pair(worlds[i], worlds[j])) {
          used[j] = true;
          keep = std::move(*m);
          ++merged_this_pass;
          break;
        }
      }
      next.push_back(std::move(keep));
    }
    worlds = std::move(next);
    local.merges += merged_this_pass;
    if (merged_this_pass == 0) break;
  }

  local.worlds_after = worlds.size();
  if (stats) *stats = local;
  return Tableau{t.sentences, std::move(worlds), t.source_count};
}

bool verify_equivalence(const Tableau& original, const Tableau& compressed) {
  if (!(original.sentences == compressed.sentences))
    throw std::invalid_argument("tableaux have different sentence lists");
  if (!expansions_disjoint(compressed.worlds) || !expansions_disjoint(original.worlds)) return false;
  return same_world_set(expand_tableau(original).worlds, expand_tableau(compressed).worlds);
}

std::vector<std::size_t> covering_worlds(const Tableau& original, const Tableau& compressed) {
  std::vector<std::size_t> cover;
  cover.reserve(original.world_count());
  for (const auto& w : original.worlds) {
    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < compressed.world_count() && !found; ++j) {
      const World& c = compressed.worlds[j];
      bool contains = c.size() == w.size();
      for (std::size_t i = 0; contains && i < w.size(); ++i)
        contains = c[i] == Truth::dc || c[i] == w[i];
      if (contains) found = j;
    }
    if (!found) throw std::invalid_argument("world not covered by the compressed tableau");
    cover.push_back(*found);
  }
  return cover;
}

std::vector<double> project_weights(const std::vector<double>& weights,
                                    const std::vector<std::size_t>& cover,
                                    std::size_t compressed_count) {
  if (weights.size() != cover.size()) throw std::invalid_argument("weight/cover length mismatch");
  std::vector<double> out(compressed_count, 0.0);
  for (std::size_t i = 0; i < weights.size(); ++i) out.at(cover[i]) += weights[i];
  return out;
}

}  // namespace plogic
