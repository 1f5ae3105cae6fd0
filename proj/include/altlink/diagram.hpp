#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace altlink {

// One PD tuple X(a,b,c,d): arc labels in counterclockwise cyclic order
// around the crossing, slot 0 being the incoming under-strand. The
// under-strand runs slot 0 -> slot 2, the over-strand occupies slots 1 and 3.
struct Crossing {
    std::array<int, 4> arcs{};
    int sign = 0; // +1 when the over-strand enters at slot 1, else -1
};

// Half-edge: the occurrence of an arc at one crossing slot.
struct Dart {
    int crossing = 0;
    int slot = 0;
    friend constexpr auto operator<=>(Dart, Dart) = default;
};

// Corner q at a crossing lies between slots q and q+1 (mod 4).
struct Corner {
    int crossing = 0;
    int quadrant = 0;
    friend constexpr auto operator<=>(Corner, Corner) = default;
};

// Oriented 4-valent diagram on the sphere with its rotation system, faces,
// checkerboard coloring, components and crossing signs. Immutable once built.
class LinkDiagram {
public:
    // Accepts "X(a,b,c,d) X(e,f,g,h) ..." (whitespace/comma separated) or a
    // JSON array [[a,b,c,d],...]; the two forms are distinguished by a
    // leading '['. Validation order: syntax, emptiness, arc multiplicity,
    // connectivity, orientability, face count, checkerboard coloring.
    static LinkDiagram parse_pd(const std::string& text);
    static LinkDiagram from_tuples(std::vector<std::array<int, 4>> tuples);

    int num_crossings() const { return static_cast<int>(crossings_.size()); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    int sign(int c) const { return crossings_[static_cast<std::size_t>(c)].sign; }
    int writhe() const;

    // Distinct arc labels in increasing order; every label occurs at exactly
    // two slots.
    const std::vector<int>& arc_labels() const { return arc_labels_; }
    bool has_arc(int arc) const { return arc_darts_.count(arc) != 0; }
    const std::array<Dart, 2>& arc_darts(int arc) const { return arc_darts_.at(arc); }

    bool incoming(int c, int slot) const { return incoming_[static_cast<std::size_t>(4 * c + slot)]; }

    int num_faces() const { return static_cast<int>(faces_.size()); }
    // Face boundaries as corner cycles; face 0 always contains corner
    // (crossing 0, quadrant 0) and is colored white.
    const std::vector<std::vector<Corner>>& faces() const { return faces_; }
    int corner_region(int c, int q) const { return corner_face_[static_cast<std::size_t>(4 * c + q)]; }
    bool is_black(int face) const { return black_[static_cast<std::size_t>(face)]; }
    // The two distinct faces flanking an arc (4-valent graphs have no
    // bridges, so they never coincide).
    std::array<int, 2> arc_faces(int arc) const;

    int num_components() const { return num_components_; }
    int component_of_arc(int arc) const { return arc_component_.at(arc); }

    // Mirror image: over/under swapped at every crossing. Re-slots each
    // tuple to start at the old over-strand entry, which preserves the
    // rotation system and flips every sign.
    LinkDiagram mirrored() const;
    // All component orientations reversed: each tuple rotated by two slots.
    LinkDiagram reversed() const;

    std::string pd_text() const;

private:
    LinkDiagram() = default;
    void build(); // validates and fills everything below from crossings_

    std::vector<Crossing> crossings_;
    std::vector<int> arc_labels_;
    std::map<int, std::array<Dart, 2>> arc_darts_;
    std::vector<bool> incoming_;
    std::vector<std::vector<Corner>> faces_;
    std::vector<int> corner_face_;
    std::vector<bool> black_;
    std::map<int, int> arc_component_;
    int num_components_ = 0;
};

// Diagram with a marked edge; regionA is the black face flanking the edge,
// regionB the white one. States never occupy corners in A or B.
struct DecoratedDiagram {
    LinkDiagram diagram;
    int marked_edge = 0;
    int region_a = 0;
    int region_b = 0;
};

// Throws UnknownEdge if the arc does not exist.
DecoratedDiagram decorate(const LinkDiagram& d, int edge);
// Marks the lowest-numbered arc.
DecoratedDiagram decorate(const LinkDiagram& d);

} // namespace altlink
