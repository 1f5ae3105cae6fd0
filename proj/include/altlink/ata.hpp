#pragma once

#include <utility>
#include <vector>

#include "altlink/diagram.hpp"
#include "altlink/halfint.hpp"
#include "altlink/seifert.hpp"
#include "altlink/states.hpp"

namespace altlink {

// One crossing seen from one color: the edge joining its two same-color
// opposite quadrants. Exactly one color sees the {N,S} pair (the crossing's
// "home" color); the other sees {E,W}.
struct TaitEdge {
    int crossing = 0;
    int region_u = 0, region_v = 0;
    int quadrant_u = 0, quadrant_v = 0;
    bool ns = false;     // this color's pair is {N,S}
    int pre_target = -1; // for ns edges: 0/1, endpoint holding the +1/2 corner
};

struct TaitGraph {
    bool black = false;
    int root = 0;               // regionA for black, regionB for white
    std::vector<int> vertices;  // region ids of this color, increasing
    std::vector<TaitEdge> edges; // one per crossing, in crossing order
};

// Throws NotAlternative on diagrams with a mixed-sign space.
std::pair<TaitGraph, TaitGraph> build_tait_graphs(const DecoratedDiagram& dd);

// All top-filtration Kauffman states via the rooted-tree search: maximal
// pre-oriented closures inside each color's {N,S} subgraph, joined across
// gaps by {E,W} edges pointed at the uncovered endpoint, with black and
// white growth interleaved in every order and the results deduplicated.
// Output is sorted in the enumerate_states emission order.
std::vector<KauffmanState> ata_enumerate(const DecoratedDiagram& dd);

// (|L|-1)/2 + r_minus - c_minus: the common grading of the tree states.
HalfInt gr_max_formula(const SpaceCensus& census, int nL);

// (|L|-1+r-c)/2, cross-computed as (|L|+1+m-c)/2 with m recounted from the
// per-space crossing lists; throws InconsistentCensus if the two disagree.
HalfInt fil_max_formula(const SpaceCensus& census, int nL);

} // namespace altlink
