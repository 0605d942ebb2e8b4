#include "altfree/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "altfree/analysis.hpp"

namespace altfree {

CrossingReport wiring_crossings(const WiringDiagram& w) {
    const int n = w.n_wires;
    CrossingReport rep;
    rep.counts.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    std::vector<int> perm = w.initial;  // height -> wire id
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("initial permutation has wrong length");
    for (std::size_t k = 0; k < w.events.size(); ++k) {
        const int p = w.events[k];
        if (p < 0 || p + 1 >= n)
            throw std::invalid_argument("event " + std::to_string(k) + " position out of range");
        const int a = perm[static_cast<std::size_t>(p)];
        const int b = perm[static_cast<std::size_t>(p) + 1];
        ++rep.counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        ++rep.counts[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
        ++rep.total;
        rep.max_pair = std::max(rep.max_pair, rep.counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        std::swap(perm[static_cast<std::size_t>(p)], perm[static_cast<std::size_t>(p) + 1]);
    }
    return rep;
}

std::vector<int> final_permutation(const WiringDiagram& w) {
    std::vector<int> perm = w.initial;
    for (int p : w.events) {
        if (p < 0 || p + 1 >= w.n_wires) throw std::invalid_argument("event position out of range");
        std::swap(perm[static_cast<std::size_t>(p)], perm[static_cast<std::size_t>(p) + 1]);
    }
    return perm;
}

OrderedHypergraph build_tree(int arity, int depth) {
    if (arity < 2 || depth < 2) throw std::invalid_argument("build_tree needs arity >= 2 and depth >= 2");

    // Vertices in BFS order: levels top to bottom, left to right.
    std::vector<int> level_start(static_cast<std::size_t>(depth) + 1, 0);
    std::vector<long long> level_size(static_cast<std::size_t>(depth), 1);
    for (int l = 1; l < depth; ++l)
        level_size[static_cast<std::size_t>(l)] = level_size[static_cast<std::size_t>(l - 1)] * arity;
    for (int l = 0; l < depth; ++l) {
        const long long next = level_start[static_cast<std::size_t>(l)] + level_size[static_cast<std::size_t>(l)];
        if (next > 1000000) throw std::invalid_argument("tree too large");
        level_start[static_cast<std::size_t>(l) + 1] = static_cast<int>(next);
    }
    const int n = level_start[static_cast<std::size_t>(depth)];

    // Horizontal edges: the children of each internal vertex, in BFS order
    // of the parent.
    std::vector<std::vector<int>> horizontals;
    for (int l = 0; l + 1 < depth; ++l) {
        for (int i = 0; i < level_size[static_cast<std::size_t>(l)]; ++i) {
            std::vector<int> e;
            for (int c = 0; c < arity; ++c)
                e.push_back(level_start[static_cast<std::size_t>(l) + 1] + i * arity + c);
            horizontals.push_back(std::move(e));
        }
    }

    // Vertical edges: root-to-leaf paths, ordered by leaf left to right.
    std::vector<std::vector<int>> verticals;
    for (int leaf = 0; leaf < level_size[static_cast<std::size_t>(depth - 1)]; ++leaf) {
        std::vector<int> e;
        int idx = leaf;
        for (int l = depth - 1; l >= 0; --l) {
            e.push_back(level_start[static_cast<std::size_t>(l)] + idx);
            idx /= arity;
        }
        std::sort(e.begin(), e.end());
        verticals.push_back(std::move(e));
    }

    // Comb: each horizontal goes as late as possible while still preceding
    // the first vertical containing any of its vertices; ties keep their
    // mutual order.
    std::vector<std::vector<std::vector<int>>> before(verticals.size());
    for (const auto& hor : horizontals) {
        int slot = -1;
        for (std::size_t vi = 0; vi < verticals.size() && slot < 0; ++vi)
            for (int v : hor)
                if (std::binary_search(verticals[vi].begin(), verticals[vi].end(), v)) {
                    slot = static_cast<int>(vi);
                    break;
                }
        before[static_cast<std::size_t>(slot)].push_back(hor);
    }

    std::vector<std::vector<int>> edges;
    for (std::size_t vi = 0; vi < verticals.size(); ++vi) {
        for (auto& hor : before[vi]) edges.push_back(std::move(hor));
        edges.push_back(std::move(verticals[vi]));
    }
    return make_hypergraph(n, std::move(edges));
}

OrderedHypergraph build_prefix_union(int n, int t) {
    if (t < 3 || n < t - 1) throw std::invalid_argument("build_prefix_union needs n >= t-1 >= 2");
    const int parts = t - 1;
    std::vector<int> len(static_cast<std::size_t>(parts), n / parts);
    for (int i = 0; i < n % parts; ++i) ++len[static_cast<std::size_t>(i)];
    std::vector<int> start(static_cast<std::size_t>(parts), 0);
    for (int i = 1; i < parts; ++i)
        start[static_cast<std::size_t>(i)] = start[static_cast<std::size_t>(i - 1)] + len[static_cast<std::size_t>(i - 1)];

    // Odometer over prefix lengths, lexicographic with the first interval
    // most significant; the all-zero union is excluded.
    std::vector<int> p(static_cast<std::size_t>(parts), 0);
    std::vector<std::vector<int>> edges;
    while (true) {
        int i = parts - 1;
        while (i >= 0 && p[static_cast<std::size_t>(i)] == len[static_cast<std::size_t>(i)]) {
            p[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++p[static_cast<std::size_t>(i)];
        std::vector<int> e;
        for (int q = 0; q < parts; ++q)
            for (int v = 0; v < p[static_cast<std::size_t>(q)]; ++v)
                e.push_back(start[static_cast<std::size_t>(q)] + v);
        edges.push_back(std::move(e));
    }
    return make_hypergraph(n, std::move(edges));
}

namespace {

struct WiringBuilder {
    WiringDiagram w;
    std::vector<int> perm;  // height -> wire id

    void swap_at(int p) {
        w.events.push_back(p);
        std::swap(perm[static_cast<std::size_t>(p)], perm[static_cast<std::size_t>(p) + 1]);
    }

    // Moves the wire at height `from` to height `to` by adjacent swaps.
    void lift(int from, int to) {
        for (int h = from; h < to; ++h) swap_at(h);
    }
    void drop(int from, int to) {
        for (int h = from; h > to; --h) swap_at(h - 1);
    }
};

}  // namespace

DualExtremal build_dual_extremal(int n, int t) {
    if (t < 4) throw std::invalid_argument("build_dual_extremal needs t >= 4");
    const int tp = (t - 2) / 2;
    const int k = n - tp;
    if (k < 1) throw std::invalid_argument("need at least one A wire (n > floor((t-2)/2))");

    // Wire ids: 0..tp-1 are B_1..B_tp, tp..n-1 are A_1..A_k.
    // Initial bottom-to-top: B_1, A_1..A_k, B_2..B_tp.
    WiringBuilder b;
    b.w.n_wires = n;
    b.perm.push_back(0);
    for (int i = 0; i < k; ++i) b.perm.push_back(tp + i);
    for (int j = 1; j < tp; ++j) b.perm.push_back(j);
    b.w.initial = b.perm;

    DualExtremal out;
    out.n_a = k;
    out.n_b = tp;

    // Record every bottom-d set, d in 1..n-1, at every event-prefix time;
    // duplicates collapse, first appearance fixes the edge order.
    std::vector<std::vector<int>> edges;
    std::map<std::vector<int>, bool> seen;
    auto snapshot = [&]() {
        std::vector<int> prefix;
        for (int d = 1; d < n; ++d) {
            prefix.push_back(b.perm[static_cast<std::size_t>(d) - 1]);
            std::vector<int> key = prefix;
            std::sort(key.begin(), key.end());
            if (seen.emplace(key, true).second) edges.push_back(key);
        }
    };

    snapshot();  // time 0
    for (int part = 0; part < tp; ++part) {
        const int begin = static_cast<int>(b.w.events.size());
        // Full rotation of the A-block (heights 1..k): the bottom A rises
        // to the top of the block, k times, so each A goes up exactly once.
        for (int rot = 0; rot < k; ++rot) {
            for (int h = 1; h < k; ++h) {
                b.swap_at(h);
                snapshot();
            }
        }
        out.part_event_ranges.emplace_back(begin, static_cast<int>(b.w.events.size()));
        // B_part ascends just above the A-block ...
        for (int h = 0; h < k; ++h) {
            b.swap_at(h);
            snapshot();
        }
        // ... and the next B (lowest of the remaining top stack) descends
        // to the bottom.
        if (part + 1 < tp) {
            int from = -1;
            for (int h = 0; h < n; ++h)
                if (b.perm[static_cast<std::size_t>(h)] == part + 1) from = h;
            for (int h = from; h > 0; --h) {
                b.swap_at(h - 1);
                snapshot();
            }
        }
    }

    out.wiring = b.w;
    out.hypergraph = make_hypergraph(n, std::move(edges));

    // Machine-check every bound the construction promises.
    const CrossingReport rep = wiring_crossings(out.wiring);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int c = rep.counts[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            const bool both_a = u >= tp && v >= tp;
            if (both_a) {
                if (c > t - 2) throw std::logic_error("A-A crossing bound violated");
            } else if (c > 2) {
                throw std::logic_error("crossing bound for a B pair violated");
            }
        }
    }
    for (auto [begin, end] : out.part_event_ranges) {
        WiringDiagram partw{n, {}, {}};
        // Replay the part on its own starting permutation.
        std::vector<int> start = out.wiring.initial;
        for (int i = 0; i < begin; ++i)
            std::swap(start[static_cast<std::size_t>(out.wiring.events[static_cast<std::size_t>(i)])],
                      start[static_cast<std::size_t>(out.wiring.events[static_cast<std::size_t>(i)]) + 1]);
        partw.initial = start;
        partw.events.assign(out.wiring.events.begin() + begin, out.wiring.events.begin() + end);
        const CrossingReport part_rep = wiring_crossings(partw);
        if (part_rep.max_pair > 2) throw std::logic_error("per-part A-A crossing bound violated");
    }
    long long bound = 0;
    if (k >= 3) bound = static_cast<long long>(tp) * ((static_cast<long long>(k - 1) * (k - 2)) / 2);
    if (static_cast<long long>(out.hypergraph.edges.size()) < bound)
        throw std::logic_error("edge-count lower bound violated");
    return out;
}

}  // namespace altfree
