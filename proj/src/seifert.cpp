#include "altlink/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "altlink/errors.hpp"

namespace altlink {

namespace {

// Smoothing reroutes an incoming strand to the outgoing slot adjacent to it;
// the non-adjacent choice would make the smoothed strands intersect.
int smoothing_exit(const LinkDiagram& d, int c, int in_slot) {
    const int left = (in_slot + 1) % 4;
    return d.incoming(c, left) ? (in_slot + 3) % 4 : left;
}

struct PlainUF {
    std::vector<int> parent;
    explicit PlainUF(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace

std::vector<SeifertCircle> seifert_circles(const LinkDiagram& d) {
    std::map<int, int> succ;
    for (int arc : d.arc_labels()) {
        const auto& ends = d.arc_darts(arc);
        const Dart in = d.incoming(ends[0].crossing, ends[0].slot) ? ends[0] : ends[1];
        const int exit = smoothing_exit(d, in.crossing, in.slot);
        succ[arc] = d.crossings()[static_cast<std::size_t>(in.crossing)].arcs[static_cast<std::size_t>(exit)];
    }
    std::vector<SeifertCircle> circles;
    std::map<int, bool> seen;
    for (int arc : d.arc_labels()) {
        if (seen[arc]) continue;
        SeifertCircle circle;
        for (int a = arc; !seen[a]; a = succ[a]) {
            seen[a] = true;
            circle.arcs.push_back(a);
        }
        circles.push_back(std::move(circle));
    }
    return circles;
}

std::string to_string(SpaceSign s) {
    switch (s) {
        case SpaceSign::plus: return "+";
        case SpaceSign::minus: return "-";
        case SpaceSign::empty: return "empty";
        case SpaceSign::mixed: return "mixed";
    }
    throw InternalError("unreachable space sign");
}

SpaceCensus seifert_spaces(const LinkDiagram& d, EmptySpacePolicy policy) {
    const int m = d.num_crossings();
    const int nf = d.num_faces();

    // Merge, at every crossing, the region between the two incoming slots
    // with the region between the two outgoing slots; these are the two
    // quadrants pinched between the smoothed strands.
    PlainUF uf(nf);
    std::vector<int> crossing_space(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
        int q_in = -1, q_out = -1;
        for (int q = 0; q < 4; ++q) {
            const bool a = d.incoming(c, q), b = d.incoming(c, (q + 1) % 4);
            if (a && b) q_in = q;
            if (!a && !b) q_out = q;
        }
        uf.unite(d.corner_region(c, q_in), d.corner_region(c, q_out));
        crossing_space[static_cast<std::size_t>(c)] = d.corner_region(c, q_in);
    }

    std::map<int, int> space_index; // UF root -> index, ordered by smallest region id
    SpaceCensus census;
    for (int f = 0; f < nf; ++f) {
        const int root = uf.find(f);
        auto [it, fresh] = space_index.emplace(root, static_cast<int>(census.spaces.size()));
        if (fresh) census.spaces.emplace_back();
        census.spaces[static_cast<std::size_t>(it->second)].regions.push_back(f);
    }
    for (int c = 0; c < m; ++c) {
        const int idx = space_index.at(uf.find(crossing_space[static_cast<std::size_t>(c)]));
        census.spaces[static_cast<std::size_t>(idx)].crossings.push_back(c);
    }

    census.alternative = true;
    for (std::size_t i = 0; i < census.spaces.size(); ++i) {
        SeifertSpace& sp = census.spaces[i];
        if (sp.crossings.empty()) {
            sp.sign = SpaceSign::empty;
            continue;
        }
        bool pos = false, neg = false;
        for (int c : sp.crossings) (d.sign(c) > 0 ? pos : neg) = true;
        sp.sign = pos && neg ? SpaceSign::mixed : pos ? SpaceSign::plus : SpaceSign::minus;
        if (sp.sign == SpaceSign::mixed && census.alternative) {
            census.alternative = false;
            census.offending_space = static_cast<int>(i);
        }
    }

    census.s = static_cast<int>(seifert_circles(d).size());
    census.c = static_cast<int>(census.spaces.size());
    census.r = nf;
    const bool empties_plus = policy == EmptySpacePolicy::count_positive;
    for (const SeifertSpace& sp : census.spaces) {
        const bool as_plus = sp.sign == SpaceSign::plus || (sp.sign == SpaceSign::empty && empties_plus);
        const bool as_minus = sp.sign == SpaceSign::minus || (sp.sign == SpaceSign::empty && !empties_plus);
        if (as_plus) {
            ++census.c_plus;
            census.r_plus += static_cast<int>(sp.regions.size());
        } else if (as_minus) {
            ++census.c_minus;
            census.r_minus += static_cast<int>(sp.regions.size());
        }
    }
    return census;
}

bool is_alternative(const LinkDiagram& d) { return seifert_spaces(d).alternative; }

int euler_characteristic_seifert(const LinkDiagram& d) {
    return static_cast<int>(seifert_circles(d).size()) - d.num_crossings();
}

} // namespace altlink
