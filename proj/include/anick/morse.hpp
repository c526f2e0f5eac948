#pragma once

// Algebraic Morse matching on the two-sided bar complex and the resulting
// Anick differentials, computed as path sums over the matched graph.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "anick/differential.hpp"

namespace anick {

/// Basis element [w_1|...|w_n] of B_n; the empty tuple is the degree-0 vertex.
struct BarVertex {
  std::vector<Word> factors;

  int degree() const { return static_cast<int>(factors.size()); }
  Word word() const { return concat(factors); }

  friend auto operator<=>(const BarVertex&, const BarVertex&) = default;
  friend bool operator==(const BarVertex&, const BarVertex&) = default;
};

inline std::string render(const BarVertex& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.factors.size(); ++i) {
    if (i) out += "|";
    out += render_word(v.factors[i]);
  }
  return out + "]";
}

struct BarEdge {
  BarVertex target;
  BimoduleCoefficient weight;
};

/// Edges of the bar differential out of v, with coinciding targets summed and
/// zero edges dropped. Interior products that reduce to scalars vanish in
/// Lambda/k and produce no edge.
inline std::vector<BarEdge> bar_edges(const BarVertex& v, NormalFormCache& nf) {
  const int n = v.degree();
  if (n == 0) return {};
  std::map<BarVertex, BimoduleCoefficient> acc;
  auto add = [&](BarVertex t, BimoduleCoefficient w) { acc[std::move(t)] += w; };

  add(BarVertex{{v.factors.begin() + 1, v.factors.end()}}, {v.factors.front(), Word{}, 1});
  add(BarVertex{{v.factors.begin(), v.factors.end() - 1}},
      {Word{}, v.factors.back(), n % 2 == 0 ? 1 : -1});
  for (int i = 1; i < n; ++i) {
    const NCPolynomial& product = nf(v.factors[i - 1] + v.factors[i]);
    for (const auto& [u, c] : product) {
      if (u.empty()) continue;
      BarVertex t;
      t.factors.reserve(n - 1);
      t.factors.insert(t.factors.end(), v.factors.begin(), v.factors.begin() + (i - 1));
      t.factors.push_back(u);
      t.factors.insert(t.factors.end(), v.factors.begin() + (i + 1), v.factors.end());
      add(std::move(t), {Word{}, Word{}, i % 2 == 0 ? c : Scalar(-c)});
    }
  }
  std::vector<BarEdge> out;
  for (auto& [t, w] : acc)
    if (!w.is_zero()) out.push_back({t, std::move(w)});
  return out;
}

inline std::vector<BarEdge> bar_edges(const BarVertex& v, const Presentation& p) {
  NormalFormCache nf(p);
  return bar_edges(v, nf);
}

/// Role of a vertex in the matching.
///   matched_to_finer: partner has degree + 1; weight is the reversed-edge
///                     weight -1/w of the matched bar edge partner -> this.
///   matched_to_coarser: partner has degree - 1; weight is the bar edge
///                     weight w of this -> partner.
struct MatchInfo {
  enum class Kind { critical, matched_to_finer, matched_to_coarser };

  Kind kind = Kind::critical;
  BarVertex partner;
  Scalar weight;

  bool critical() const { return kind == Kind::critical; }
};

inline const char* to_string(MatchInfo::Kind k) {
  switch (k) {
    case MatchInfo::Kind::critical: return "critical";
    case MatchInfo::Kind::matched_to_finer: return "matched_to_finer";
    case MatchInfo::Kind::matched_to_coarser: return "matched_to_coarser";
  }
  return "?";
}

namespace detail {

inline void check_vertex(const BarVertex& v, const ObstructionSet& obs) {
  for (const auto& f : v.factors)
    if (f.empty() || !obs.is_reduced(f))
      throw Error("invalid bar vertex " + render(v) + ": factors must be nonempty and reduced");
}

/// Matching rule without the reciprocity check; weights left unset.
/// Let j be the largest index such that [w_1|...|w_{j+1}] is the canonical
/// factorization of a j-chain (j = -1 if w_1 is not a letter). If j = n-1 the
/// vertex is critical. Otherwise split w_{j+2} at the point where the chain
/// extends, or, when no proper prefix extends it, merge w_{j+1} and w_{j+2}.
inline MatchInfo match_rule(const BarVertex& v, const ObstructionSet& obs) {
  const int n = v.degree();
  MatchInfo info;
  if (n == 0) return info;
  const auto& f = v.factors;
  if (f[0].size() > 1) {
    info.kind = MatchInfo::Kind::matched_to_finer;
    info.partner.factors = {f[0].substr(0, 1), f[0].substr(1)};
    info.partner.factors.insert(info.partner.factors.end(), f.begin() + 1, f.end());
    return info;
  }
  int j = 0;
  while (j < n - 1) {
    const Word& next = f[j + 1];
    auto m = next_chain_end(f[j], next, obs);
    if (m && *m == next.size()) {
      ++j;
      continue;
    }
    if (m) {
      info.kind = MatchInfo::Kind::matched_to_finer;
      info.partner.factors.assign(f.begin(), f.begin() + (j + 1));
      info.partner.factors.push_back(next.substr(0, *m));
      info.partner.factors.push_back(next.substr(*m));
      info.partner.factors.insert(info.partner.factors.end(), f.begin() + (j + 2), f.end());
    } else {
      info.kind = MatchInfo::Kind::matched_to_coarser;
      info.partner.factors.assign(f.begin(), f.begin() + j);
      info.partner.factors.push_back(f[j] + next);
      info.partner.factors.insert(info.partner.factors.end(), f.begin() + (j + 2), f.end());
    }
    return info;
  }
  return info;
}

inline Scalar matched_weight(const BarVertex& finer, const BarVertex& coarser, NormalFormCache& nf) {
  for (const auto& e : bar_edges(finer, nf)) {
    if (e.target != coarser) continue;
    auto s = e.weight.as_scalar();
    if (!s)
      throw NonScalarMatchWeight("matched edge " + render(finer) + " -> " + render(coarser) +
                                 " has non-scalar weight");
    return *s;
  }
  throw NonScalarMatchWeight("matched edge " + render(finer) + " -> " + render(coarser) +
                             " has zero weight");
}

}  // namespace detail

/// Classifies v under the matching and fills in the matched weight.
/// Throws MatchingInconsistency if the partner does not point back.
inline MatchInfo classify_vertex(const BarVertex& v, const ObstructionSet& obs, NormalFormCache& nf) {
  detail::check_vertex(v, obs);
  MatchInfo info = detail::match_rule(v, obs);
  switch (info.kind) {
    case MatchInfo::Kind::critical:
      break;
    case MatchInfo::Kind::matched_to_finer:
      info.weight = -1 / detail::matched_weight(info.partner, v, nf);
      break;
    case MatchInfo::Kind::matched_to_coarser: {
      for (const auto& pf : info.partner.factors)
        if (!obs.is_reduced(pf))
          throw MatchingInconsistency("merge partner " + render(info.partner) + " of " + render(v) +
                                      " is not a bar vertex");
      MatchInfo back = detail::match_rule(info.partner, obs);
      if (back.kind != MatchInfo::Kind::matched_to_finer || back.partner != v)
        throw MatchingInconsistency(render(v) + " merges to " + render(info.partner) +
                                    ", which does not split back");
      info.weight = detail::matched_weight(v, info.partner, nf);
      break;
    }
  }
  return info;
}

inline MatchInfo classify_vertex(const BarVertex& v, const Presentation& p) {
  NormalFormCache nf(p);
  return classify_vertex(v, ObstructionSet(p), nf);
}

/// Results of auditing every vertex classified so far.
struct MatchingAudit {
  std::size_t vertices = 0;
  std::size_t critical = 0;
  std::size_t matched_pairs = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Explored part of the matched graph, for DOT export.
struct ExploredGraph {
  struct Edge {
    BarVertex from, to;
    BimoduleCoefficient weight;
    bool reversed;
  };
  std::map<BarVertex, MatchInfo::Kind> vertices;
  std::vector<Edge> edges;
};

inline constexpr std::size_t kDepthPerDegree = 10;

/// Computes Anick differentials for one presentation. Memoizes normal forms,
/// classifications, edges and per-vertex path sums; not safe for concurrent use.
class MorseComplex {
 public:
  /// depth_budget caps the number of reversed (upward) edges on a single path;
  /// 0 means the default of 10 * chain degree.
  explicit MorseComplex(Presentation p, std::size_t depth_budget = 0)
      : p_(std::make_unique<Presentation>(std::move(p))),
        obs_(*p_),
        nf_(*p_),
        depth_budget_(depth_budget) {}

  const Presentation& presentation() const { return *p_; }
  const ObstructionSet& obstructions() const { return obs_; }
  NormalFormCache& normal_forms() { return nf_; }

  const MatchInfo& classify(const BarVertex& v) {
    auto it = match_.find(v);
    if (it != match_.end()) return it->second;
    return match_.emplace(v, classify_vertex(v, obs_, nf_)).first->second;
  }

  const std::vector<BarEdge>& edges(const BarVertex& v) {
    auto it = edges_.find(v);
    if (it != edges_.end()) return it->second;
    return edges_.emplace(v, bar_edges(v, nf_)).first->second;
  }

  void set_trace(ExploredGraph* trace) { trace_ = trace; }

  /// d_{n+1} of an n-chain: sum over paths in the matched graph from the
  /// chain's vertex to critical vertices of degree n.
  DifferentialRow differential(const ChainElement& chain) {
    BarVertex start{chain.factors};
    if (!classify(start).critical())
      throw NotAChain(render(start) + " is not a critical cell");
    budget_ = depth_budget_ ? depth_budget_ : kDepthPerDegree * static_cast<std::size_t>(chain.degree);
    on_path_.clear();
    if (trace_) trace_->vertices[start] = MatchInfo::Kind::critical;
    DifferentialRow row{chain, expand(start, nullptr, 0)};
    return row;
  }

  DifferentialTable table(int n) {
    DifferentialTable out;
    for (const auto& c : enumerate_chains(n, obs_)) out.emplace(c.word, differential(c));
    return out;
  }

  MatchingAudit audit() {
    MatchingAudit a;
    std::map<BarVertex, BarVertex> owner;
    std::vector<BarVertex> seen;
    for (const auto& [v, info] : match_) seen.push_back(v);
    for (const auto& v : seen) {
      const MatchInfo info = classify(v);
      ++a.vertices;
      if (info.critical()) {
        ++a.critical;
        auto c = try_chain_factorization(v.word(), obs_);
        if (v.degree() > 0 && (!c || c->factors != v.factors))
          a.violations.push_back("critical " + render(v) + " is not a chain factorization");
        continue;
      }
      const MatchInfo& back = classify(info.partner);
      if (back.critical() || back.partner != v)
        a.violations.push_back(render(v) + " and " + render(info.partner) + " do not reciprocate");
      if (info.kind == MatchInfo::Kind::matched_to_finer) {
        ++a.matched_pairs;
        if (info.partner.degree() != v.degree() + 1)
          a.violations.push_back(render(v) + " matched across a non-adjacent degree");
      }
      auto [it, fresh] = owner.emplace(info.partner, v);
      if (!fresh && it->second != v)
        a.violations.push_back(render(info.partner) + " is matched twice");
    }
    return a;
  }

 private:
  using PathSum = std::map<Word, BimoduleCoefficient>;

  static void accumulate(PathSum& into, const BimoduleCoefficient& w, const PathSum& from,
                         NormalFormCache& nf) {
    for (const auto& [target, coef] : from) {
      auto& slot = into[target];
      slot += compose(w, coef, nf);
      if (slot.is_zero()) into.erase(target);
    }
  }

  /// Sum over the non-matched bar edges out of `vertex`, skipping `matched`.
  PathSum expand(const BarVertex& vertex, const BarVertex* matched, std::size_t depth) {
    PathSum out;
    const auto edge_list = edges(vertex);
    for (const auto& e : edge_list) {
      if (matched && e.target == *matched) continue;
      const MatchInfo& info = classify(e.target);
      if (trace_) {
        trace_->vertices[e.target] = info.kind;
        trace_->edges.push_back({vertex, e.target, e.weight, false});
      }
      switch (info.kind) {
        case MatchInfo::Kind::critical:
          accumulate(out, e.weight, PathSum{{e.target.word(), BimoduleCoefficient::unit()}}, nf_);
          break;
        case MatchInfo::Kind::matched_to_finer:
          accumulate(out, e.weight, ascend(e.target, depth + 1), nf_);
          break;
        case MatchInfo::Kind::matched_to_coarser:
          break;
      }
    }
    return out;
  }

  /// Path sum from a vertex that is matched upward: cross the reversed edge,
  /// then continue from the finer partner.
  const PathSum& ascend(const BarVertex& v, std::size_t depth) {
    if (auto it = sums_.find(v); it != sums_.end()) return it->second;
    if (on_path_.count(v)) throw CycleDetected("cycle in matched graph through " + render(v));
    if (depth > budget_)
      throw DepthBudgetExceeded("path depth exceeded " + std::to_string(budget_) + " at " + render(v));
    const MatchInfo info = classify(v);
    on_path_.insert(v);
    if (trace_) {
      trace_->vertices[info.partner] = MatchInfo::Kind::matched_to_coarser;
      trace_->edges.push_back({v, info.partner, BimoduleCoefficient(Word{}, Word{}, info.weight), true});
    }
    PathSum sum = expand(info.partner, &v, depth);
    for (auto& [t, c] : sum) c *= info.weight;
    on_path_.erase(v);
    return sums_.emplace(v, std::move(sum)).first->second;
  }

  std::unique_ptr<Presentation> p_;
  ObstructionSet obs_;
  NormalFormCache nf_;
  std::size_t depth_budget_;
  std::size_t budget_ = 0;
  std::map<BarVertex, MatchInfo> match_;
  std::map<BarVertex, std::vector<BarEdge>> edges_;
  std::map<BarVertex, PathSum> sums_;
  std::set<BarVertex> on_path_;
  ExploredGraph* trace_ = nullptr;
};

/// Convenience wrapper with a fresh cache.
inline DifferentialRow anick_differential(const ChainElement& c, const Presentation& p) {
  MorseComplex mc(p);
  return mc.differential(c);
}

/// d_n o d_{n+1} = 0 on every n-chain.
inline bool compose_check(int n, MorseComplex& mc) {
  auto upper = mc.table(n);
  auto lower = mc.table(n - 1);
  return compose_vanishes(upper, lower, mc.normal_forms());
}

inline bool compose_check(int n, const Presentation& p) {
  MorseComplex mc(p);
  return compose_check(n, mc);
}

/// Graphviz rendering: critical cells boxed, matched pairs dashed with the
/// reversed-edge weight as label.
inline void write_dot(std::ostream& os, const ExploredGraph& g, const std::string& name = "morse") {
  std::map<BarVertex, std::size_t> id;
  os << "digraph " << name << " {\n  rankdir=TB;\n  node [fontname=\"monospace\"];\n";
  for (const auto& [v, kind] : g.vertices) {
    std::size_t k = id.size();
    id[v] = k;
    os << "  v" << k << " [label=\"" << render(v) << "\""
       << (kind == MatchInfo::Kind::critical ? ", shape=box" : ", shape=plaintext") << "];\n";
  }
  std::set<std::tuple<std::size_t, std::size_t, bool>> emitted;
  for (const auto& e : g.edges) {
    auto key = std::make_tuple(id[e.from], id[e.to], e.reversed);
    if (!emitted.insert(key).second) continue;
    std::string label;
    for (const auto& [k, c] : e.weight) {
      if (!label.empty()) label += sgn(c) < 0 ? " - " : " + ";
      else if (sgn(c) < 0) label += "-";
      std::string l = k.first.empty() ? "1" : render_word(k.first);
      std::string r = k.second.empty() ? "1" : render_word(k.second);
      label += (abs(c) == 1 ? "" : to_string(abs(c)) + "*") + l + "(x)" + r;
    }
    os << "  v" << id[e.from] << " -> v" << id[e.to] << " [label=\"" << label << "\""
       << (e.reversed ? ", style=dashed" : "") << "];\n";
  }
  os << "}\n";
}

}  // namespace anick
