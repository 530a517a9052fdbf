#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmcsolve/automata.hpp"
#include "pmcsolve/engine.hpp"

namespace pmcsolve {

// Exhaustive reference implementations. None of them uses the separator or
// PMC enumerators; all throw SizeLimitExceeded beyond their stated limits.

inline constexpr int kBruteForceSolveLimit = 14;
inline constexpr int kBruteForceSeparatorLimit = 10;
inline constexpr int kBruteForcePmcLimit = 9;
inline constexpr int kExtensionCheckLimit = 8;
inline constexpr int kTerminalCheckLimit = 10;

struct OracleQuery {
  int t = 1;
  Mode mode = Mode::Max;
  std::vector<double> weights;  // empty: all 1
  VertexSet required;
  std::optional<int> exact_size;
};

/// Scans every F ⊇ required with tw(G[F]) <= t and every X ⊆ F satisfying
/// the property; same tie-break as the engine. nullopt when infeasible.
std::optional<Witness> brute_force_solve(const Graph& g, const Automaton& a, const OracleQuery& q);

/// Every S with two or more full components, by subset scan; sorted.
std::vector<VertexSet> brute_force_separators(const Graph& g);

/// Maximal cliques of every minimal triangulation; sorted, duplicate-free.
std::vector<VertexSet> brute_force_pmcs(const Graph& g);

/// For every minimal triangulation TF of G[F], some minimal triangulation TG
/// of G has TG[F] = TF. `detail` receives a counterexample description.
bool check_triangulation_extension(const Graph& g, const VertexSet& f, std::string* detail = nullptr);

struct TerminalCheck {
  bool ok = true;
  std::size_t connectors = 0;  // inclusion-minimal connected A ⊇ T
  int max_treewidth = -1;
};

/// Every inclusion-minimal connected A ⊇ T has tw(G[A]) <= |T| - 1.
/// T must be non-empty and lie in one component.
TerminalCheck check_terminal_treewidth(const Graph& g, const VertexSet& terminals);

struct OracleReport {
  std::string instance;
  std::string check;
  bool oracle_feasible = false;
  double oracle_value = 0;
  bool engine_feasible = false;
  double engine_value = 0;
  bool agree = false;
  VertexSet f;
  VertexSet x;
  std::string detail;
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  int instances = 20;  // per problem
  int min_n = 3;
  int max_n = 9;
  std::vector<std::string> problems;  // empty: a default list
  /// Negative control: perturb every engine value so the run must fail.
  bool inject_bug = false;
};

/// Random G(n,p) instances per problem, engine against brute force.
std::vector<OracleReport> verify_corpus(const VerifyConfig& config);

/// Terminal treewidth sweep over random connected graphs.
std::vector<OracleReport> verify_terminal_lemma(const VerifyConfig& config);
/// Triangulation extension sweep over random (G, F), n <= 7.
std::vector<OracleReport> verify_extension_lemma(const VerifyConfig& config);

}  // namespace pmcsolve
