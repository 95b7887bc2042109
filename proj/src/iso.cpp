#include "wlaudit/iso.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "parallel.hpp"
#include "wlaudit/errors.hpp"

namespace wlaudit {
namespace {

std::vector<ColorId> sorted_copy(const std::vector<ColorId>& colors) {
  std::vector<ColorId> s = colors;
  std::sort(s.begin(), s.end());
  return s;
}

// Joint refinement state for one pair of graphs. Both colorings live in the
// id space of one private ColorTable, so equal ids mean equal refinement
// histories in either graph.
class PairSearch {
 public:
  PairSearch(const Graph& g, const Graph& h, bool labels, std::size_t budget)
      : g_(g), h_(h), labels_(labels), budget_(budget) {}

  std::optional<std::vector<NodeId>> run() {
    std::vector<ColorId> cg(g_.node_count()), ch(h_.node_count());
    for (std::size_t v = 0; v < g_.node_count(); ++v) {
      cg[v] = table_.seed(labels_ ? (*g_.node_labels())[v] : 0);
    }
    for (std::size_t v = 0; v < h_.node_count(); ++v) {
      ch[v] = table_.seed(labels_ ? (*h_.node_labels())[v] : 0);
    }
    if (!refine(cg, ch)) return std::nullopt;
    return search(std::move(cg), std::move(ch));
  }

  std::size_t expansions() const noexcept { return expansions_; }

 private:
  // Refines both colorings to a joint stable partition. Returns false as soon
  // as the color histograms diverge, which rules out any isomorphism
  // consistent with the current colors.
  bool refine(std::vector<ColorId>& cg, std::vector<ColorId>& ch) {
    if (sorted_copy(cg) != sorted_copy(ch)) return false;
    std::size_t classes = count_classes(cg);
    std::vector<ColorId> buffer;
    while (true) {
      step(g_, cg, buffer);
      step(h_, ch, buffer);
      if (sorted_copy(cg) != sorted_copy(ch)) return false;
      const std::size_t next = count_classes(cg);
      if (next == classes) return true;
      classes = next;
    }
  }

  void step(const Graph& graph, std::vector<ColorId>& colors, std::vector<ColorId>& buffer) {
    std::vector<ColorId> next(colors.size());
    for (NodeId v = 0; v < graph.node_count(); ++v) {
      buffer.clear();
      for (NodeId u : graph.neighbors(v)) buffer.push_back(colors[u]);
      std::sort(buffer.begin(), buffer.end());
      next[v] = table_.intern(colors[v], buffer);
    }
    colors = std::move(next);
  }

  static std::size_t count_classes(const std::vector<ColorId>& colors) {
    auto s = sorted_copy(colors);
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  std::optional<std::vector<NodeId>> search(std::vector<ColorId> cg, std::vector<ColorId> ch) {
    if (++expansions_ > budget_) throw IsoTimeoutError(budget_);

    // Target the smallest non-singleton cell, lowest color id on ties.
    std::map<ColorId, std::size_t> sizes;
    for (ColorId c : cg) ++sizes[c];
    ColorId target = 0;
    std::size_t best = 0;
    for (const auto& [color, size] : sizes) {
      if (size > 1 && (best == 0 || size < best)) {
        best = size;
        target = color;
      }
    }

    if (best == 0) {
      // Discrete coloring: the matching is forced.
      std::map<ColorId, NodeId> in_h;
      for (NodeId v = 0; v < h_.node_count(); ++v) in_h[ch[v]] = v;
      std::vector<NodeId> mapping(g_.node_count());
      for (NodeId v = 0; v < g_.node_count(); ++v) mapping[v] = in_h.at(cg[v]);
      if (is_isomorphism(g_, h_, mapping, labels_)) return mapping;
      return std::nullopt;
    }

    const auto x = static_cast<NodeId>(std::find(cg.begin(), cg.end(), target) - cg.begin());
    for (NodeId y = 0; y < h_.node_count(); ++y) {
      if (ch[y] != target) continue;
      std::vector<ColorId> ng = cg, nh = ch;
      // Individualized nodes get a key no refinement step can produce.
      const ColorId marker[1] = {ColorTable::kSeedParent};
      const ColorId fresh = table_.intern(target, marker);
      ng[x] = fresh;
      nh[y] = fresh;
      if (!refine(ng, nh)) continue;
      if (auto found = search(std::move(ng), std::move(nh))) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  const Graph& h_;
  bool labels_;
  std::size_t budget_;
  std::size_t expansions_ = 0;
  ColorTable table_;
};

}  // namespace

WlTestResult wl_test(const Graph& g, const Graph& h, bool use_labels, std::size_t max_k) {
  ColorTable table;
  Coloring cg = initial_coloring(g, use_labels, table);
  Coloring ch = initial_coloring(h, use_labels, table);
  WlTestResult result;
  std::size_t classes_g = class_count(cg), classes_h = class_count(ch);
  for (std::size_t k = 0;; ++k) {
    result.first_signatures.push_back(histogram_of(cg));
    result.second_signatures.push_back(histogram_of(ch));
    if (result.first_signatures.back() != result.second_signatures.back()) {
      result.verdict = WlTestResult::Verdict::kDistinguished;
      result.iteration = k;
      return result;
    }
    if (k > 0) {
      const std::size_t next_g = class_count(cg), next_h = class_count(ch);
      if (next_g == classes_g && next_h == classes_h) {
        result.verdict = WlTestResult::Verdict::kIndistinguishable;
        result.iteration = k - 1;
        return result;
      }
      classes_g = next_g;
      classes_h = next_h;
    }
    if (k == max_k) {
      result.verdict = WlTestResult::Verdict::kIndistinguishable;
      result.iteration = max_k;
      return result;
    }
    cg = refine_step(g, cg, table);
    ch = refine_step(h, ch, table);
  }
}

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<NodeId>& mapping,
                    bool check_labels) {
  if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) return false;
  if (mapping.size() != g.node_count()) return false;
  std::vector<bool> used(h.node_count(), false);
  for (NodeId image : mapping) {
    if (image >= h.node_count() || used[image]) return false;
    used[image] = true;
  }
  for (auto [u, v] : g.edges()) {
    if (!h.has_edge(mapping[u], mapping[v])) return false;
  }
  if (check_labels) {
    if (!g.node_labels() || !h.node_labels()) return false;
    for (std::size_t v = 0; v < g.node_count(); ++v) {
      if ((*g.node_labels())[v] != (*h.node_labels())[mapping[v]]) return false;
    }
  }
  return true;
}

IsoResult exact_isomorphic(const Graph& g, const Graph& h, const IsoOptions& options) {
  const bool labels = options.use_labels && (g.has_node_labels() || h.has_node_labels());
  if (labels && !(g.has_node_labels() && h.has_node_labels())) throw MissingLabelsError();

  IsoResult result;
  if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count() ||
      degree_sequence(g) != degree_sequence(h)) {
    return result;
  }
  PairSearch search(g, h, labels, options.budget);
  auto mapping = search.run();
  result.expansions = search.expansions();
  if (mapping) {
    result.isomorphic = true;
    result.witness = std::move(mapping);
  }
  return result;
}

std::size_t IsoClassIndex::unique_count() const {
  return static_cast<std::size_t>(std::count_if(
      classes.begin(), classes.end(), [](const auto& c) { return c.size() == 1; }));
}

IsoClassIndex isomorphism_classes(const Dataset& d, bool use_labels, std::size_t budget,
                                  unsigned threads) {
  const std::size_t n = d.size();

  // Refine every graph under one table until no graph's partition changes;
  // the final histogram then encodes each graph's stable coloring.
  ColorTable table;
  std::vector<Coloring> colorings(n);
  std::vector<std::size_t> classes(n);
  for (std::size_t g = 0; g < n; ++g) {
    colorings[g] = initial_coloring(d.graphs[g], use_labels, table);
    classes[g] = class_count(colorings[g]);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t g = 0; g < n; ++g) {
      colorings[g] = refine_step(d.graphs[g], colorings[g], table);
      const std::size_t next = class_count(colorings[g]);
      if (next != classes[g]) changed = true;
      classes[g] = next;
    }
  }

  using BucketKey = std::tuple<std::size_t, std::size_t, WlSignature>;
  std::map<BucketKey, std::vector<std::size_t>> buckets;
  for (std::size_t g = 0; g < n; ++g) {
    buckets[{d.graphs[g].node_count(), d.graphs[g].edge_count(), histogram_of(colorings[g])}]
        .push_back(g);
  }
  std::vector<std::vector<std::size_t>> bucket_list;
  bucket_list.reserve(buckets.size());
  for (auto& [key, members] : buckets) bucket_list.push_back(std::move(members));

  const IsoOptions options{use_labels, budget};
  std::vector<std::vector<std::vector<std::size_t>>> split(bucket_list.size());
  std::mutex error_mutex;
  std::optional<IsoTimeoutError> timeout;
  detail::parallel_for(bucket_list.size(), threads, [&](std::size_t b) {
    auto& result = split[b];
    for (std::size_t g : bucket_list[b]) {
      bool placed = false;
      for (auto& cls : result) {
        try {
          if (exact_isomorphic(d.graphs[cls.front()], d.graphs[g], options).isomorphic) {
            cls.push_back(g);
            placed = true;
            break;
          }
        } catch (const IsoTimeoutError& e) {
          std::lock_guard lock(error_mutex);
          if (!timeout) timeout.emplace(e.budget(), cls.front(), g);
          return;
        }
      }
      if (!placed) result.push_back({g});
    }
  });
  if (timeout) throw *timeout;

  IsoClassIndex idx;
  for (auto& parts : split) {
    for (auto& cls : parts) idx.classes.push_back(std::move(cls));
  }
  std::sort(idx.classes.begin(), idx.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  idx.class_of.assign(n, 0);
  for (std::size_t c = 0; c < idx.classes.size(); ++c) {
    for (std::size_t g : idx.classes[c]) idx.class_of[g] = c;
  }
  return idx;
}

double unique_fraction(const IsoClassIndex& idx, std::size_t n) {
  if (n == 0) return 0.0;
  return static_cast<double>(idx.unique_count()) / static_cast<double>(n);
}

}  // namespace wlaudit
