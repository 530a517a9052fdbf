#include "pmcsolve/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "pmcsolve/parallel.hpp"

namespace pmcsolve {

bool better(const Witness& a, const Witness& b, Mode mode) {
  if (a.value != b.value) return mode == Mode::Max ? a.value > b.value : a.value < b.value;
  if (a.f != b.f) return a.f < b.f;
  return a.x < b.x;
}

namespace {

// Table key: class plus |X| (the latter only in by-size mode, -1 otherwise).
struct Key {
  HClass cls;
  int size = -1;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    return static_cast<std::size_t>(k.cls.stable_hash() * 31 + static_cast<std::uint64_t>(k.size + 1));
  }
};

using ClassTable = std::unordered_map<Key, Witness, KeyHash>;
using WTable = std::unordered_map<VertexSet, ClassTable>;

class Engine {
 public:
  Engine(const Graph& g, const Skeleton& sk, const Automaton& a, const EngineOptions& opt)
      : g_(g), sk_(sk), a_(a), opt_(opt), alpha_(sk.blocks.size()) {
    if (!opt_.weights.empty() && static_cast<int>(opt_.weights.size()) != g.n())
      throw std::invalid_argument("weights must have one entry per vertex");
    if (opt_.t < 0) throw std::invalid_argument("t must be >= 0");
    if (opt_.t + 1 > kMaxTerminals) throw std::invalid_argument("t too large");
  }

  EngineResult run() {
    EngineResult result;
    for (std::size_t b = 0; b < sk_.blocks.size(); ++b) process_block(static_cast<int>(b), result);
    finish(result);
    return result;
  }

 private:
  struct TripleOutput {
    WTable alpha;  // keyed by W ∩ S
    std::vector<TableEntry> beta;
    std::size_t keys = 0;
    std::size_t widest = 0;
    std::unordered_set<std::uint64_t> classes;
  };

  double weight(Vertex v) const { return opt_.weights.empty() ? 1.0 : opt_.weights[v]; }
  double weight(const VertexSet& s) const {
    double total = 0;
    for (Vertex v : s) total += weight(v);
    return total;
  }

  Key key_for(const HClass& c, const Witness& w) const { return {c, opt_.by_size ? w.x.size() : -1}; }

  void offer(ClassTable& t, Key k, const Witness& w) const {
    auto [it, inserted] = t.try_emplace(std::move(k), w);
    if (!inserted && better(w, it->second, opt_.mode)) it->second = w;
  }

  // Subsets of `from` with at most `limit` members that contain `must`, by
  // size and then lexicographically.
  static std::vector<VertexSet> small_subsets(const VertexSet& from, int limit, const VertexSet& must) {
    std::vector<Vertex> vs = from.to_vector();
    int n = static_cast<int>(vs.size());
    std::vector<VertexSet> out;
    std::vector<int> idx;
    for (int k = must.size(); k <= std::min(limit, n); ++k) {
      idx.resize(k);
      for (int i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        VertexSet s;
        for (int i : idx) s.insert(vs[i]);
        if (must.is_subset_of(s)) out.push_back(s);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    return out;
  }

  void process_block(int b, EngineResult& result) {
    const FullBlock& block = sk_.blocks[b];
    const auto& triples = sk_.triples[b];
    std::vector<TripleOutput> outs(triples.size());
    parallel_for(triples.size(), [&](std::size_t i) { outs[i] = process_triple(block, triples[i].pmc); });
    WTable& table = alpha_[b];
    for (auto& out : outs) {
      result.stats.dp_keys += out.keys;
      result.stats.max_classes_per_w = std::max(result.stats.max_classes_per_w, out.widest);
      classes_.insert(out.classes.begin(), out.classes.end());
      for (auto& [w, cells] : out.alpha) {
        ClassTable& dst = table[w];
        for (auto& [k, wit] : cells) offer(dst, k, wit);
      }
      if (opt_.keep_tables)
        for (auto& e : out.beta) result.tables.push_back(std::move(e));
    }
    for (const auto& [w, cells] : table) {
      result.stats.dp_keys += cells.size();
      result.stats.max_classes_per_w = std::max(result.stats.max_classes_per_w, cells.size());
      if (!opt_.keep_tables) continue;
      for (const auto& [k, wit] : cells)
        result.tables.push_back({false, block.separator, block.component, {}, w, k.cls, wit});
    }
  }

  TripleOutput process_triple(const FullBlock& block, const VertexSet& omega) const {
    TripleOutput out;
    const VertexSet& s = block.separator;
    auto comps = component_blocks(g_, block, omega);
    std::vector<int> comp_index;
    for (const auto& c : comps) comp_index.push_back(sk_.block_index(c.component));

    for (const VertexSet& w : small_subsets(omega, opt_.t + 1, opt_.required & omega)) {
      Bag bag = make_bag(g_, w);
      std::vector<HClass> base(std::size_t{1} << bag.size());
      for (Mask x = 0; x < base.size(); ++x) base[x] = a_.base(bag, x);

      ClassTable gamma;
      if (comps.empty()) {
        for (Mask x = 0; x < base.size(); ++x) {
          if (base[x].reject) continue;
          VertexSet xs = bag.to_set(x);
          Witness wit{weight(xs), w, xs};
          offer(gamma, key_for(base[x], wit), wit);
        }
      }
      for (std::size_t i = 0; i < comps.size(); ++i) {
        ClassTable delta = compute_delta(comps[i], comp_index[i], w, bag, base);
        if (i == 0) {
          gamma = std::move(delta);
        } else {
          gamma = combine(gamma, delta, bag);
        }
        if (gamma.empty()) break;
      }
      if (gamma.empty()) continue;

      out.keys += gamma.size();
      out.widest = std::max(out.widest, gamma.size());
      VertexSet ws = w & s;
      Bag bag_s = make_bag(g_, ws);
      ClassTable& dst = out.alpha[ws];
      for (const auto& [k, wit] : gamma) {
        out.classes.insert(k.cls.stable_hash());
        if (opt_.keep_tables) out.beta.push_back({true, s, block.component, omega, w, k.cls, wit});
        HClass c = a_.forget(k.cls, bag, bag_s);
        if (c.reject) continue;
        out.classes.insert(c.stable_hash());
        offer(dst, key_for(c, wit), wit);
      }
    }
    return out;
  }

  ClassTable compute_delta(const FullBlock& child, int child_index, const VertexSet& w, const Bag& bag,
                           const std::vector<HClass>& base) const {
    ClassTable delta;
    VertexSet wi = w & child.separator;
    const WTable& table = alpha_[child_index];
    auto found = table.find(wi);
    if (found == table.end()) return delta;
    Bag bag_i = make_bag(g_, wi);
    auto map = embed_ranks(bag_i, bag);
    Mask shared = remap_mask(bag_i.full(), map);
    Mask free = bag.full() & ~shared;
    for (const auto& [k, wit] : found->second) {
      Mask xi = remap_mask(k.cls.members, map);
      for (Mask y = free;; y = (y - 1) & free) {
        const HClass& cw = base[xi | y];
        if (!cw.reject) {
          auto c = a_.introduce(k.cls, bag_i, cw, bag);
          if (c && !c->reject) {
            VertexSet ys = bag.to_set(y);
            Witness next{wit.value + weight(ys), wit.f | w, wit.x | ys};
            offer(delta, key_for(*c, next), next);
          }
        }
        if (y == 0) break;
      }
    }
    return delta;
  }

  ClassTable combine(const ClassTable& gamma, const ClassTable& delta, const Bag& bag) const {
    std::unordered_map<Mask, std::vector<const ClassTable::value_type*>> by_members;
    for (const auto& entry : delta) by_members[entry.first.cls.members].push_back(&entry);
    ClassTable out;
    for (const auto& [k1, w1] : gamma) {
      auto it = by_members.find(k1.cls.members);
      if (it == by_members.end()) continue;
      double shared = weight(bag.to_set(k1.cls.members));
      for (const auto* entry : it->second) {
        const auto& [k2, w2] = *entry;
        auto c = a_.join(k1.cls, k2.cls, bag);
        if (!c || c->reject) continue;
        Witness next{w1.value + w2.value - shared, w1.f | w2.f, w1.x | w2.x};
        offer(out, key_for(*c, next), next);
      }
    }
    return out;
  }

  void finish(EngineResult& result) {
    result.stats.separators = sk_.separators.size();
    result.stats.pmcs = sk_.pmcs.size();
    result.stats.blocks = sk_.blocks.size();
    result.stats.good_triples = sk_.good_triple_count();
    result.stats.classes = classes_.size();
    if (opt_.by_size) result.by_size.assign(g_.n() + 1, std::nullopt);
    const WTable& root = alpha_[sk_.root()];
    auto it = root.find(VertexSet{});
    if (it == root.end()) return;
    Bag empty;
    for (const auto& [k, wit] : it->second) {
      if (!a_.accepting(k.cls)) continue;
      if (!result.best || better(wit, *result.best, opt_.mode)) result.best = wit;
      if (opt_.by_size) {
        auto& slot = result.by_size[wit.x.size()];
        if (!slot || better(wit, *slot, opt_.mode)) slot = wit;
      }
    }
  }

  const Graph& g_;
  const Skeleton& sk_;
  const Automaton& a_;
  EngineOptions opt_;
  std::vector<WTable> alpha_;
  std::unordered_set<std::uint64_t> classes_;
};

std::string join_set(const VertexSet& s) { return format_set(s, 1, ','); }

}  // namespace

EngineResult run_engine(const Graph& g, const Skeleton& skeleton, const Automaton& a,
                        const EngineOptions& options) {
  auto start = std::chrono::steady_clock::now();
  EngineResult r = Engine(g, skeleton, a, options).run();
  r.stats.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

EngineResult run_engine(const Graph& g, const Automaton& a, const EngineOptions& options) {
  auto start = std::chrono::steady_clock::now();
  Skeleton sk = build_skeleton(g, options.budgets);
  EngineResult r = Engine(g, sk, a, options).run();
  r.stats.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_table_entry(const TableEntry& e) {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(e.cls.stable_hash()));
  char value[64];
  std::snprintf(value, sizeof value, "%.17g", e.witness.value);
  return std::string(e.is_beta ? "beta " : "alpha ") + join_set(e.separator) + "|" + join_set(e.component) + "|" +
         join_set(e.pmc) + "|" + join_set(e.w) + "|" + hash + " " + value;
}

}  // namespace pmcsolve
