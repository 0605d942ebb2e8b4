#pragma once

#include <utility>
#include <vector>

#include "altfree/types.hpp"

namespace altfree {

/// Discrete model of an arrangement of x-monotone curves: n wires, an
/// initial bottom-to-top permutation, and adjacent-transposition events.
/// Event p swaps the wires currently at heights p and p+1 (0-based).
struct WiringDiagram {
    int n_wires = 0;
    std::vector<int> initial;  // initial[height] = wire id
    std::vector<int> events;
};

struct CrossingReport {
    std::vector<std::vector<int>> counts;  // symmetric per-pair event counts
    long long total = 0;
    int max_pair = 0;
};

/// Per-pair crossing counts: the number of events that swap exactly that
/// pair of wires. Throws if an event position is out of range.
CrossingReport wiring_crossings(const WiringDiagram& w);

/// Bottom-to-top wire order after the full event list.
std::vector<int> final_permutation(const WiringDiagram& w);

/// The tree hypergraph H(a,b) on a full a-ary tree of depth b-1:
/// horizontal edges are children sets, vertical edges are root-to-leaf
/// paths. Vertices are ordered by level top-to-bottom, then left-to-right.
/// Edge order: verticals by leaf left-to-right; horizontals top-to-bottom
/// then left-to-right, each combed in as late as possible while still
/// preceding the first vertical that contains any of its vertices, ties
/// keeping their mutual order.
OrderedHypergraph build_tree(int arity, int depth);

/// Vertices 1..n split into t-1 near-equal contiguous intervals (the first
/// n mod (t-1) intervals one longer); edges are all distinct nonempty
/// unions of one prefix per interval. Edge count = prod(len_i + 1) - 1.
OrderedHypergraph build_prefix_union(int n, int t);

struct DualExtremal {
    WiringDiagram wiring;
    OrderedHypergraph hypergraph;  // vertices = wires, edges = bottom-prefix sets
    int n_a = 0;                   // wires t'..n-1 are A_1..A_{n-t'}
    int n_b = 0;                   // wires 0..t'-1 are B_1..B_{t'}
    std::vector<std::pair<int, int>> part_event_ranges;  // [begin, end) per part
};

/// The t'-part wiring construction with t' = floor((t-2)/2): B_j holds the
/// bottom during part j while the A-block performs one full rotation (each
/// A to the top once), then B_j ascends just above the A-block and the
/// next B descends. Hyperedges are all distinct bottom-d wire sets over
/// every event-prefix time and every depth d in 1..n-1. The construction's
/// crossing bounds (A-A at most 2 per part and t-2 total, any pair with a
/// B at most 2) and the t'*C(n-t'-1,2) edge-count lower bound are checked
/// on the output.
DualExtremal build_dual_extremal(int n, int t);

}  // namespace altfree
