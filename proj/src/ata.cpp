#include "altlink/ata.hpp"

#include <algorithm>
#include <set>

#include "altlink/errors.hpp"

namespace altlink {

std::pair<TaitGraph, TaitGraph> build_tait_graphs(const DecoratedDiagram& dd) {
    const LinkDiagram& d = dd.diagram;
    const SpaceCensus census = seifert_spaces(d);
    if (!census.alternative)
        throw NotAlternative("diagram has a mixed-sign space; the tree algorithm does not apply");

    TaitGraph black{true, dd.region_a, {}, {}};
    TaitGraph white{false, dd.region_b, {}, {}};
    for (int f = 0; f < d.num_faces(); ++f) (d.is_black(f) ? black : white).vertices.push_back(f);

    for (int c = 0; c < d.num_crossings(); ++c) {
        const auto cls = classify_quadrants(d, c);
        for (int q : {0, 1}) {
            // opposite pair {q, q+2}; both its regions share one color
            const int qu = q, qv = q + 2;
            TaitEdge e;
            e.crossing = c;
            e.quadrant_u = qu;
            e.quadrant_v = qv;
            e.region_u = d.corner_region(c, qu);
            e.region_v = d.corner_region(c, qv);
            const QuadrantClass cu = cls[static_cast<std::size_t>(qu)];
            e.ns = cu == QuadrantClass::N || cu == QuadrantClass::S;
            if (e.ns) {
                const QuadrantClass plus_half = d.sign(c) > 0 ? QuadrantClass::S : QuadrantClass::N;
                e.pre_target = cu == plus_half ? 0 : 1;
            }
            TaitGraph& g = d.is_black(e.region_u) ? black : white;
            if (d.is_black(e.region_u) != d.is_black(e.region_v))
                throw InternalError("opposite quadrants straddle the checkerboard coloring");
            g.edges.push_back(e);
        }
    }
    for (const TaitGraph* g : {&black, &white})
        if (g->edges.size() != static_cast<std::size_t>(d.num_crossings()))
            throw InternalError("each crossing must contribute one edge per color");
    return {std::move(black), std::move(white)};
}

namespace {

// Backtracking search over tree-growth histories. Crossings are claimed
// globally: each is either a closure edge of its home color or a joining
// edge of the other color, never both.
struct TreeSearch {
    const DecoratedDiagram& dd;
    const LinkDiagram& d;
    std::array<TaitGraph, 2> graphs; // 0 = black, 1 = white
    std::vector<char> used;          // by crossing: claimed as a tree edge
    std::vector<char> deleted;       // by crossing: locally excluded closure edge
    std::array<std::vector<char>, 2> covered; // by region id
    std::array<int, 2> covered_count{};
    std::vector<int> corner; // crossing -> chosen quadrant
    std::set<std::vector<int>> emitted;

    explicit TreeSearch(const DecoratedDiagram& dd_, std::pair<TaitGraph, TaitGraph> gs)
        : dd(dd_), d(dd_.diagram), graphs{std::move(gs.first), std::move(gs.second)},
          used(static_cast<std::size_t>(d.num_crossings()), 0),
          deleted(static_cast<std::size_t>(d.num_crossings()), 0),
          corner(static_cast<std::size_t>(d.num_crossings()), -1) {
        for (int side = 0; side < 2; ++side)
            covered[static_cast<std::size_t>(side)].assign(static_cast<std::size_t>(d.num_faces()), 0);
    }

    bool is_covered(int side, int region) const {
        return covered[static_cast<std::size_t>(side)][static_cast<std::size_t>(region)] != 0;
    }
    void set_covered(int side, int region, bool v) {
        covered[static_cast<std::size_t>(side)][static_cast<std::size_t>(region)] = v ? 1 : 0;
        covered_count[static_cast<std::size_t>(side)] += v ? 1 : -1;
    }
    bool complete(int side) const {
        return covered_count[static_cast<std::size_t>(side)] ==
               static_cast<int>(graphs[static_cast<std::size_t>(side)].vertices.size());
    }

    // Directed reading of an {N,S} edge: source and target regions.
    static int edge_src(const TaitEdge& e) { return e.pre_target == 0 ? e.region_v : e.region_u; }
    static int edge_tgt(const TaitEdge& e) { return e.pre_target == 0 ? e.region_u : e.region_v; }
    static int edge_tgt_quadrant(const TaitEdge& e) { return e.pre_target == 0 ? e.quadrant_u : e.quadrant_v; }

    // Vertices of this color reachable from the covered set along unused,
    // undeleted pre-oriented edges; used both to fix a closure's span and to
    // prune exclusion branches that orphan part of it.
    std::vector<int> reachable_targets(int side) const {
        const TaitGraph& g = graphs[static_cast<std::size_t>(side)];
        std::vector<char> reach(static_cast<std::size_t>(d.num_faces()), 0);
        bool grew = true;
        while (grew) {
            grew = false;
            for (const TaitEdge& e : g.edges) {
                if (!e.ns || used[static_cast<std::size_t>(e.crossing)] || deleted[static_cast<std::size_t>(e.crossing)]) continue;
                const int u = edge_src(e), v = edge_tgt(e);
                const bool u_ok = is_covered(side, u) || reach[static_cast<std::size_t>(u)];
                if (u_ok && !is_covered(side, v) && !reach[static_cast<std::size_t>(v)]) {
                    reach[static_cast<std::size_t>(v)] = 1;
                    grew = true;
                }
            }
        }
        std::vector<int> out;
        for (int f = 0; f < d.num_faces(); ++f)
            if (reach[static_cast<std::size_t>(f)]) out.push_back(f);
        return out;
    }

    // Enumerates every arborescence covering `span` (Gabow-Myers style:
    // first frontier edge is either taken or locally deleted), then runs
    // the continuation with the closure in place.
    template <typename Fn>
    void closures(int side, std::vector<int> span, const Fn& then) {
        if (span.empty()) {
            then();
            return;
        }
        const TaitGraph& g = graphs[static_cast<std::size_t>(side)];
        const TaitEdge* pick = nullptr;
        for (const TaitEdge& e : g.edges) {
            if (!e.ns || used[static_cast<std::size_t>(e.crossing)] || deleted[static_cast<std::size_t>(e.crossing)]) continue;
            if (is_covered(side, edge_src(e)) && !is_covered(side, edge_tgt(e))) {
                pick = &e;
                break;
            }
        }
        if (pick == nullptr) return; // exclusions severed the span: dead branch
        const TaitEdge& e = *pick;
        const int v = edge_tgt(e);

        used[static_cast<std::size_t>(e.crossing)] = 1;
        corner[static_cast<std::size_t>(e.crossing)] = edge_tgt_quadrant(e);
        set_covered(side, v, true);
        std::vector<int> rest;
        for (int r : span)
            if (r != v) rest.push_back(r);
        closures(side, rest, then);
        set_covered(side, v, false);
        corner[static_cast<std::size_t>(e.crossing)] = -1;
        used[static_cast<std::size_t>(e.crossing)] = 0;

        deleted[static_cast<std::size_t>(e.crossing)] = 1;
        const auto still = reachable_targets(side);
        const bool intact = std::includes(still.begin(), still.end(), span.begin(), span.end());
        if (intact) closures(side, std::move(span), then);
        deleted[static_cast<std::size_t>(e.crossing)] = 0;
    }

    void maximal_closure(int side, const auto& then) {
        closures(side, reachable_targets(side), then);
    }

    void emit() {
        for (int c = 0; c < d.num_crossings(); ++c)
            if (!used[static_cast<std::size_t>(c)] || corner[static_cast<std::size_t>(c)] < 0)
                throw InternalError("completed tree pair left crossing " + std::to_string(c) + " unassigned");
        emitted.insert(corner);
    }

    void rounds() {
        const bool done_b = complete(0), done_w = complete(1);
        if (done_b && done_w) {
            emit();
            return;
        }
        for (int side = 0; side < 2; ++side) {
            if (complete(side)) continue;
            const TaitGraph& g = graphs[static_cast<std::size_t>(side)];
            for (const TaitEdge& e : g.edges) {
                if (e.ns || used[static_cast<std::size_t>(e.crossing)]) continue;
                const bool cu = is_covered(side, e.region_u), cv = is_covered(side, e.region_v);
                if (cu == cv) continue; // joins must bridge covered -> uncovered
                const int root = cu ? e.region_v : e.region_u;
                const int q = cu ? e.quadrant_v : e.quadrant_u;
                used[static_cast<std::size_t>(e.crossing)] = 1;
                corner[static_cast<std::size_t>(e.crossing)] = q;
                set_covered(side, root, true);
                maximal_closure(side, [&] { rounds(); });
                set_covered(side, root, false);
                corner[static_cast<std::size_t>(e.crossing)] = -1;
                used[static_cast<std::size_t>(e.crossing)] = 0;
            }
        }
    }

    std::vector<KauffmanState> run() {
        set_covered(0, graphs[0].root, true);
        set_covered(1, graphs[1].root, true);
        maximal_closure(0, [&] { maximal_closure(1, [&] { rounds(); }); });
        std::vector<KauffmanState> out;
        for (const auto& corners : emitted) out.push_back(make_state(dd, corners));
        sort_states(d, out);
        return out;
    }
};

} // namespace

std::vector<KauffmanState> ata_enumerate(const DecoratedDiagram& dd) {
    TreeSearch search(dd, build_tait_graphs(dd));
    return search.run();
}

HalfInt gr_max_formula(const SpaceCensus& census, int nL) {
    return HalfInt::from_twice(nL - 1) + HalfInt::whole(census.r_minus - census.c_minus);
}

HalfInt fil_max_formula(const SpaceCensus& census, int nL) {
    const HalfInt by_regions = HalfInt::from_twice(nL - 1 + census.r - census.c);
    int m = 0;
    for (const auto& sp : census.spaces) m += static_cast<int>(sp.crossings.size());
    const HalfInt by_crossings = HalfInt::from_twice(nL + 1 + m - census.c);
    if (by_regions != by_crossings)
        throw InconsistentCensus("region and crossing counts disagree: " + by_regions.str() +
                                 " vs " + by_crossings.str());
    return by_regions;
}

} // namespace altlink
