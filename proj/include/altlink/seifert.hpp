#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altlink/diagram.hpp"

namespace altlink {

// One circle produced by Seifert's algorithm; arcs in traversal order,
// starting at the smallest label on the circle.
struct SeifertCircle {
    std::vector<int> arcs;
};

// Orientation-respecting smoothing of every crossing. The circles partition
// the arcs.
std::vector<SeifertCircle> seifert_circles(const LinkDiagram& d);

enum class SpaceSign { plus, minus, empty, mixed };
std::string to_string(SpaceSign s);

// A connected component of the sphere minus the Seifert circles, as the set
// of diagram regions glued across crossings, plus the crossings living in it.
struct SeifertSpace {
    std::vector<int> regions;
    std::vector<int> crossings;
    SpaceSign sign = SpaceSign::empty;
};

// Crossing-free spaces carry no sign of their own; the census charges each
// to one side of the +/- split. Either choice leaves r_+ - c_+ and
// r_- - c_- unchanged (an empty space has exactly one region), which is
// asserted by tests computing the top grading under both policies.
enum class EmptySpacePolicy { count_positive, count_negative };

struct SpaceCensus {
    int s = 0; // Seifert circles
    int c = 0, c_plus = 0, c_minus = 0; // spaces
    int r = 0, r_plus = 0, r_minus = 0; // regions
    std::vector<SeifertSpace> spaces;   // ordered by smallest region id
    bool alternative = false;           // every nonempty space sign-uniform
    std::optional<int> offending_space; // index of a mixed space when not
};

SpaceCensus seifert_spaces(const LinkDiagram& d,
                           EmptySpacePolicy policy = EmptySpacePolicy::count_positive);

bool is_alternative(const LinkDiagram& d);

// Euler characteristic s - m of the surface Seifert's algorithm builds;
// maximal over all Seifert surfaces when the diagram is alternative.
int euler_characteristic_seifert(const LinkDiagram& d);

} // namespace altlink
