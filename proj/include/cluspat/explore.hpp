#pragma once

#include <optional>

#include "cluspat/gca.hpp"

namespace cluspat {

/// Exploration of the n-regular tree by reduced mutation words.
struct ExploreConfig {
    IntMatrix B;
    DegreeR R;                                  // empty: ordinary pattern
    int depth = -1;                             // >= 0: depth mode; < 0: run to closure
    size_t max_nodes = 100000;
    int jobs = 1;
    std::vector<CoeffPattern> coeffs = {CoeffPattern::Trivial, CoeffPattern::Principal,
                                        CoeffPattern::Universal};
};

struct Node {
    std::vector<int> word;                      // reduced word from the root
    int parent = -1;
    int via = -1;                               // direction taken from the parent
    int cls = -1;                               // seed equivalence class

    FGCSeed fgc;                                // ordinary pattern
    std::vector<Seed> seeds;                    // parallel to cfg.coeffs
    GCAFGCSeed gfgc;                            // degree-R pattern
    std::vector<GCASeed> gseeds;
};

/// t1-object = sigma applied to t2-object, for nodes of one store.
struct PeriodRecord {
    int t1 = 0, t2 = 0;
    Permutation sigma;
};

struct NodeStore {
    ExploreConfig cfg;
    bool gca = false;
    IntMatrix D;                                // skew-symmetrizer of B (or of RB)
    std::vector<Node> nodes;                    // BFS order; node 0 is the root
    std::vector<int> class_rep;                 // class id -> node index
    bool truncated = false;                     // hit max_nodes
    bool closed = false;                        // closure reached (finite type)
    Report findings;                            // canonicalization soundness checks
};

/// BFS with canonical-key deduplication. Closure mode expands only nodes that
/// open a new class and stops when a layer adds none; depth mode expands
/// everything. Layer expansion parallelizes over cfg.jobs with a
/// deterministic merge order.
NodeStore explore(const ExploreConfig& cfg);

/// All node pairs related by a C-matrix match (these are exactly the seed
/// periods). Each record is re-verified by replaying both words from scratch.
std::vector<PeriodRecord> detect_periods(const NodeStore& store);

/// Canonical text form of a period set for cross-family comparison:
/// sorted "word1|word2|sigma" lines.
std::vector<std::string> period_set(const NodeStore& store);

struct ExchangeGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;     // class ids, a < b
    Report findings;                            // conjecture checks
};

/// Unlabeled exchange graph on seed classes, with the cluster-determines-seed,
/// adjacency (n-1 common variables), and seed/Y-seed finiteness checks.
ExchangeGraph build_exchange_graph(const NodeStore& store);

/// Pairwise synchronicity on every explored node pair:
/// C-match <=> G-match <=> x-match, each => y-match, and (for coefficient
/// patterns covering a principal one) y-match => the rest. Violations of
/// theorem-backed implications are Fail; x-match directions that rest on the
/// degree-R positivity conjecture are reported with Status::Conjecture.
Report synchronicity_pairs(const NodeStore& store);

/// Compare period sets of two stores explored over the same tree horizon.
Report compare_period_sets(const NodeStore& a, const NodeStore& b, const std::string& label);

/// DOT export; labeled = true adds one representative sigma-arrow per period.
std::string dot_exchange_graph(const NodeStore& store, const ExchangeGraph& g,
                               bool labeled = false);

} // namespace cluspat
