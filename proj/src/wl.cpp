#include "wlaudit/wl.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "parallel.hpp"
#include "wlaudit/errors.hpp"

namespace wlaudit {
namespace {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t hash_key(std::span<const ColorId> key) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ key.size();
  for (ColorId c : key) h = mix64(h ^ (c + 0x9e3779b97f4a7c15ULL));
  return h;
}

// Builds the refinement key of every node into `keys`; node v's key occupies
// keys[offsets[v], offsets[v+1]).
void build_keys(const Graph& g, std::span<const ColorId> colors, std::vector<ColorId>& keys,
                std::vector<std::size_t>& offsets) {
  keys.clear();
  offsets.assign(1, 0);
  keys.reserve(g.node_count() + 2 * g.edge_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    keys.push_back(colors[v]);
    const auto begin = keys.size();
    for (NodeId u : g.neighbors(v)) keys.push_back(colors[u]);
    std::sort(keys.begin() + static_cast<std::ptrdiff_t>(begin), keys.end());
    offsets.push_back(keys.size());
  }
}

}  // namespace

ColorTable::ColorTable() : offsets_{0}, slots_(1024, kEmpty) {}

ColorId ColorTable::seed(NodeLabel raw_label) {
  const ColorId key[2] = {kSeedParent, raw_label};
  return intern_key(key);
}

ColorId ColorTable::intern(ColorId parent, std::span<const ColorId> sorted_neighbors) {
  // Reuse a scratch buffer so the common lookup path does not allocate.
  thread_local std::vector<ColorId> scratch;
  scratch.clear();
  scratch.push_back(parent);
  scratch.insert(scratch.end(), sorted_neighbors.begin(), sorted_neighbors.end());
  return intern_key(scratch);
}

std::span<const ColorId> ColorTable::key(ColorId id) const noexcept {
  return {arena_.data() + offsets_[id], arena_.data() + offsets_[id + 1]};
}

ColorId ColorTable::intern_key(std::span<const ColorId> key) {
  const std::uint64_t h = hash_key(key);
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = h & mask;; i = (i + 1) & mask) {
    const ColorId id = slots_[i];
    if (id == kEmpty) {
      const auto fresh = static_cast<ColorId>(hashes_.size());
      if (fresh == kEmpty) throw Error(ErrorKind::kCompute, "color id space exhausted");
      arena_.insert(arena_.end(), key.begin(), key.end());
      offsets_.push_back(arena_.size());
      hashes_.push_back(h);
      slots_[i] = fresh;
      if (2 * hashes_.size() > slots_.size()) grow();
      return fresh;
    }
    if (hashes_[id] == h && std::ranges::equal(this->key(id), key)) return id;
  }
}

void ColorTable::grow() {
  std::vector<ColorId> slots(2 * slots_.size(), kEmpty);
  const std::size_t mask = slots.size() - 1;
  for (ColorId id = 0; id < hashes_.size(); ++id) {
    std::size_t i = hashes_[id] & mask;
    while (slots[i] != kEmpty) i = (i + 1) & mask;
    slots[i] = id;
  }
  slots_ = std::move(slots);
}

std::size_t WlSignature::node_count() const noexcept {
  std::size_t n = 0;
  for (const auto& [color, count] : histogram) n += count;
  return n;
}

std::string WlSignature::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < histogram.size(); ++i) {
    if (i) out << ' ';
    out << histogram[i].first << ':' << histogram[i].second;
  }
  return out.str();
}

std::size_t WlSignatureHash::operator()(const WlSignature& s) const noexcept {
  std::uint64_t h = mix64(s.iteration + 1);
  for (const auto& [color, count] : s.histogram) {
    h = mix64(h ^ ((static_cast<std::uint64_t>(color) << 32) | count));
  }
  return static_cast<std::size_t>(h);
}

Coloring initial_coloring(const Graph& g, bool use_labels, ColorTable& table) {
  Coloring c;
  c.colors.resize(g.node_count());
  if (use_labels) {
    if (!g.has_node_labels()) throw MissingLabelsError();
    const auto& labels = *g.node_labels();
    for (std::size_t v = 0; v < g.node_count(); ++v) c.colors[v] = table.seed(labels[v]);
  } else {
    const ColorId constant = table.seed(0);
    std::fill(c.colors.begin(), c.colors.end(), constant);
  }
  return c;
}

Coloring refine_step(const Graph& g, const Coloring& coloring, ColorTable& table) {
  Coloring next;
  next.iteration = coloring.iteration + 1;
  next.colors.resize(g.node_count());
  std::vector<ColorId> neighbor_colors;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    neighbor_colors.clear();
    for (NodeId u : g.neighbors(v)) neighbor_colors.push_back(coloring.colors[u]);
    std::sort(neighbor_colors.begin(), neighbor_colors.end());
    next.colors[v] = table.intern(coloring.colors[v], neighbor_colors);
  }
  return next;
}

WlSignature histogram_of(const Coloring& coloring) {
  WlSignature sig;
  sig.iteration = coloring.iteration;
  std::vector<ColorId> sorted = coloring.colors;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    sig.histogram.emplace_back(sorted[i], static_cast<std::uint32_t>(j - i));
    i = j;
  }
  return sig;
}

std::vector<WlSignature> signature(const Graph& g, std::size_t k, bool use_labels,
                                   ColorTable& table) {
  std::vector<WlSignature> out;
  out.reserve(k + 1);
  Coloring c = initial_coloring(g, use_labels, table);
  out.push_back(histogram_of(c));
  for (std::size_t i = 0; i < k; ++i) {
    c = refine_step(g, c, table);
    out.push_back(histogram_of(c));
  }
  return out;
}

std::vector<std::uint32_t> to_vector(const WlSignature& sig, std::size_t dim) {
  const std::size_t needed = sig.histogram.empty() ? 0 : sig.histogram.back().first + 1;
  if (dim < needed) throw DimensionTooSmallError(dim, needed);
  std::vector<std::uint32_t> dense(dim, 0);
  for (const auto& [color, count] : sig.histogram) dense[color] = count;
  return dense;
}

WlSignature concatenated(std::span<const WlSignature> per_iteration) {
  WlSignature merged;
  if (!per_iteration.empty()) merged.iteration = per_iteration.back().iteration;
  std::vector<std::pair<ColorId, std::uint32_t>> all;
  for (const auto& sig : per_iteration) all.insert(all.end(), sig.histogram.begin(), sig.histogram.end());
  std::sort(all.begin(), all.end());
  for (const auto& entry : all) {
    if (!merged.histogram.empty() && merged.histogram.back().first == entry.first) {
      merged.histogram.back().second += entry.second;
    } else {
      merged.histogram.push_back(entry);
    }
  }
  return merged;
}

std::size_t class_count(const Coloring& coloring) {
  std::vector<ColorId> sorted = coloring.colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

bool same_partition(std::span<const ColorId> a, std::span<const ColorId> b) {
  if (a.size() != b.size()) return false;
  std::unordered_map<ColorId, ColorId> forward, backward;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto [f, f_new] = forward.try_emplace(a[i], b[i]);
    if (!f_new && f->second != b[i]) return false;
    const auto [r, r_new] = backward.try_emplace(b[i], a[i]);
    if (!r_new && r->second != a[i]) return false;
  }
  return true;
}

std::size_t stable_iteration(const Graph& g, bool use_labels, ColorTable& table,
                             std::size_t max_k) {
  Coloring current = initial_coloring(g, use_labels, table);
  // Refinement only splits classes, so equal class counts mean equal partitions.
  std::size_t classes = class_count(current);
  for (std::size_t k = 0; k < max_k; ++k) {
    Coloring next = refine_step(g, current, table);
    const std::size_t next_classes = class_count(next);
    if (next_classes == classes) return k;
    classes = next_classes;
    current = std::move(next);
  }
  return max_k;
}

std::vector<std::vector<WlSignature>> compute_signatures(const Dataset& d, std::size_t k_max,
                                                         bool use_labels, ColorTable& table,
                                                         unsigned threads) {
  const std::size_t n = d.size();
  std::vector<std::vector<WlSignature>> out(n);
  std::vector<Coloring> colorings(n);
  for (std::size_t g = 0; g < n; ++g) {
    colorings[g] = initial_coloring(d.graphs[g], use_labels, table);
    out[g].reserve(k_max + 1);
  }
  detail::parallel_for(n, threads, [&](std::size_t g) { out[g].push_back(histogram_of(colorings[g])); });

  std::vector<std::vector<ColorId>> keys(n);
  std::vector<std::vector<std::size_t>> offsets(n);
  for (std::size_t k = 0; k < k_max; ++k) {
    detail::parallel_for(n, threads, [&](std::size_t g) {
      build_keys(d.graphs[g], colorings[g].colors, keys[g], offsets[g]);
    });
    for (std::size_t g = 0; g < n; ++g) {
      auto& colors = colorings[g].colors;
      for (std::size_t v = 0; v < colors.size(); ++v) {
        const std::span<const ColorId> key(keys[g].data() + offsets[g][v],
                                           keys[g].data() + offsets[g][v + 1]);
        colors[v] = table.intern(key.front(), key.subspan(1));
      }
      colorings[g].iteration = k + 1;
    }
    detail::parallel_for(n, threads, [&](std::size_t g) { out[g].push_back(histogram_of(colorings[g])); });
  }
  return out;
}

}  // namespace wlaudit
