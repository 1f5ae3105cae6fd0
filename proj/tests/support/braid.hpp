#pragma once

// Test support: PD codes from braid words and randomized diagrams built on
// top of them. Lives with the tests; the library itself has no braid input.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "altlink/diagram.hpp"

namespace altlink::testing {

// Closure of a braid word on `strands` strands. Letters are 1-based:
// +i for sigma_i, -i for its inverse. Arc labels are assigned top to
// bottom, then the loose bottom ends are relabeled to close the braid.
// Every strand must be touched by some letter, otherwise the closure has a
// crossing-free circle no PD code can carry.
inline std::vector<std::array<int, 4>> braid_pd(int strands, const std::vector<int>& word) {
    if (strands < 2) throw std::invalid_argument("braid needs at least 2 strands");
    std::vector<int> cur(static_cast<std::size_t>(strands));
    std::vector<bool> touched(static_cast<std::size_t>(strands), false);
    for (int i = 0; i < strands; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    int next = strands + 1;
    std::vector<std::array<int, 4>> tuples;
    for (int letter : word) {
        const int i = letter > 0 ? letter : -letter;
        if (i < 1 || i >= strands) throw std::invalid_argument("braid letter out of range");
        touched[static_cast<std::size_t>(i - 1)] = true;
        touched[static_cast<std::size_t>(i)] = true;
        const int a = cur[static_cast<std::size_t>(i - 1)]; // upper-left strand
        const int b = cur[static_cast<std::size_t>(i)];     // upper-right strand
        const int c = next++;                               // lower-left
        const int d = next++;                               // lower-right
        if (letter > 0)
            tuples.push_back({b, a, c, d}); // right strand dives under
        else
            tuples.push_back({a, c, d, b}); // left strand dives under
        cur[static_cast<std::size_t>(i - 1)] = c;
        cur[static_cast<std::size_t>(i)] = d;
    }
    for (bool t : touched)
        if (!t) throw std::invalid_argument("braid word leaves a strand crossing-free");
    // close up: bottom of strand j rejoins its top
    for (auto& t : tuples)
        for (int& arc : t)
            for (int j = 0; j < strands; ++j)
                if (arc == cur[static_cast<std::size_t>(j)]) arc = j + 1;
    return tuples;
}

// Splices a one-crossing curl into the arc `target`, turning its incoming
// end into a fresh label. `positive` picks the handedness of the new
// crossing. `first_free` must exceed every label in `tuples`.
inline void insert_kink(std::vector<std::array<int, 4>>& tuples, int target, int first_free, bool positive) {
    const int y = first_free, z = first_free + 1;
    // the downstream end is where `target` enters its next crossing; renaming
    // the outgoing end instead would give z two tails and no head
    const LinkDiagram d = LinkDiagram::from_tuples(tuples);
    if (!d.has_arc(target)) throw std::invalid_argument("kink target arc not found");
    bool done = false;
    for (const Dart& dart : d.arc_darts(target)) {
        if (!done && d.incoming(dart.crossing, dart.slot)) {
            tuples[static_cast<std::size_t>(dart.crossing)][static_cast<std::size_t>(dart.slot)] = z;
            done = true;
        }
    }
    if (!done) throw std::invalid_argument("kink target arc has no incoming end");
    if (positive)
        tuples.push_back({target, y, y, z});
    else
        tuples.push_back({target, z, y, y});
}

// Random connected braid closure with optional random curls. Deterministic
// in the seed.
inline std::vector<std::array<int, 4>> random_diagram(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int strands = 2 + static_cast<int>(rng() % 3);
    const int length = strands + 2 + static_cast<int>(rng() % 7);
    std::vector<int> word;
    for (int i = 0; i < length; ++i) {
        int pos;
        if (i < strands - 1)
            pos = i + 1; // touch every strand once so the closure is connected
        else
            pos = 1 + static_cast<int>(rng() % static_cast<unsigned>(strands - 1));
        word.push_back(rng() % 2 == 0 ? pos : -pos);
    }
    auto tuples = braid_pd(strands, word);
    const int kinks = static_cast<int>(rng() % 3);
    for (int k = 0; k < kinks; ++k) {
        int max_label = 0;
        for (const auto& t : tuples)
            for (int arc : t) max_label = std::max(max_label, arc);
        // any label present works as a splice point; sample until one hits
        int target = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_label));
        bool present = false;
        for (const auto& t : tuples)
            for (int arc : t) present = present || arc == target;
        if (!present) continue;
        insert_kink(tuples, target, max_label + 1, rng() % 2 == 0);
    }
    return tuples;
}

} // namespace altlink::testing
