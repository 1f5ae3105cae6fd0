#pragma once

#include <array>
#include <string>
#include <vector>

#include "altlink/diagram.hpp"
#include "altlink/halfint.hpp"
#include "altlink/laurent.hpp"

namespace altlink {

// The four quadrants of a crossing, named by the local orientation picture:
// S sits between the two incoming slots, N between the two outgoing ones,
// E and W are the mixed quadrants right resp. left of the under-strand.
enum class QuadrantClass { N, S, E, W };
std::string to_string(QuadrantClass q);

// Class of each quadrant index 0..3 at crossing c.
std::array<QuadrantClass, 4> classify_quadrants(const LinkDiagram& d, int c);

// Per-crossing filtration and grading contributions of an occupied corner.
HalfInt local_fil(int sign, QuadrantClass q);
HalfInt local_gr(int sign, QuadrantClass q);

// A Kauffman state: one corner per crossing, regions pairwise distinct and
// disjoint from the marked regions A and B. With m crossings and m+2 regions
// this is a bijection crossings <-> unmarked regions.
struct KauffmanState {
    struct Entry {
        int region = 0;
        int quadrant = 0; // index at the crossing; class follows from the diagram
        friend constexpr auto operator<=>(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> assignment; // indexed by crossing
    HalfInt fil;
    HalfInt gr;
};

// Builds a state from its quadrant choices and computes fil/gr. Throws
// InternalError if the choices do not form a valid state.
KauffmanState make_state(const DecoratedDiagram& dd, const std::vector<int>& quadrants);

// All Kauffman states by backtracking, crossings in id order, corners tried
// in class order N,S,E,W; the emitted sequence is lexicographic in that key.
std::vector<KauffmanState> enumerate_states(const DecoratedDiagram& dd);

// Reorders states into the enumerate_states emission order.
void sort_states(const LinkDiagram& d, std::vector<KauffmanState>& states);

// Sum over states of (-1)^gr * t^fil. Throws GradingNotInteger when some
// gr is a strict half-integer (happens exactly for even component counts).
LaurentPoly state_polynomial(const DecoratedDiagram& dd);

} // namespace altlink
