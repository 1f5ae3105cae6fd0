#include "altlink/states.hpp"

#include <algorithm>

#include "altlink/errors.hpp"

namespace altlink {

std::string to_string(QuadrantClass q) {
    switch (q) {
        case QuadrantClass::N: return "N";
        case QuadrantClass::S: return "S";
        case QuadrantClass::E: return "E";
        case QuadrantClass::W: return "W";
    }
    throw InternalError("unreachable quadrant class");
}

std::array<QuadrantClass, 4> classify_quadrants(const LinkDiagram& d, int c) {
    std::array<QuadrantClass, 4> out{};
    for (int q = 0; q < 4; ++q) {
        const bool a = d.incoming(c, q), b = d.incoming(c, (q + 1) % 4);
        out[static_cast<std::size_t>(q)] = a ? (b ? QuadrantClass::S : QuadrantClass::E)
                                             : (b ? QuadrantClass::W : QuadrantClass::N);
    }
    return out;
}

HalfInt local_fil(int sign, QuadrantClass q) {
    switch (q) {
        case QuadrantClass::N: return HalfInt::from_twice(sign > 0 ? -1 : +1);
        case QuadrantClass::S: return HalfInt::from_twice(sign > 0 ? +1 : -1);
        default: return HalfInt::whole(0);
    }
}

HalfInt local_gr(int sign, QuadrantClass q) {
    if (q == QuadrantClass::N) return HalfInt::whole(sign > 0 ? -1 : +1);
    return HalfInt::whole(0);
}

namespace {

// Candidate quadrant indices of a crossing in class order N,S,E,W.
std::array<int, 4> quadrants_by_class(const LinkDiagram& d, int c) {
    const auto cls = classify_quadrants(d, c);
    std::array<int, 4> by_class{};
    for (int q = 0; q < 4; ++q) by_class[static_cast<std::size_t>(cls[static_cast<std::size_t>(q)])] = q;
    return by_class; // indexed by QuadrantClass value
}

HalfInt component_offset(const LinkDiagram& d) {
    return HalfInt::from_twice(d.num_components() - 1); // (|L|-1)/2
}

} // namespace

KauffmanState make_state(const DecoratedDiagram& dd, const std::vector<int>& quadrants) {
    const LinkDiagram& d = dd.diagram;
    const int m = d.num_crossings();
    if (static_cast<int>(quadrants.size()) != m) throw InternalError("state has wrong crossing count");
    KauffmanState st;
    st.fil = component_offset(d);
    st.gr = component_offset(d);
    std::vector<char> used(static_cast<std::size_t>(d.num_faces()), 0);
    for (int c = 0; c < m; ++c) {
        const int q = quadrants[static_cast<std::size_t>(c)];
        const int region = d.corner_region(c, q);
        if (region == dd.region_a || region == dd.region_b)
            throw InternalError("state occupies a marked region");
        if (used[static_cast<std::size_t>(region)]) throw InternalError("state repeats a region");
        used[static_cast<std::size_t>(region)] = 1;
        const QuadrantClass cls = classify_quadrants(d, c)[static_cast<std::size_t>(q)];
        st.assignment.push_back({region, q});
        st.fil += local_fil(d.sign(c), cls);
        st.gr += local_gr(d.sign(c), cls);
    }
    return st;
}

std::vector<KauffmanState> enumerate_states(const DecoratedDiagram& dd) {
    const LinkDiagram& d = dd.diagram;
    const int m = d.num_crossings();
    std::vector<std::array<int, 4>> order(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) order[static_cast<std::size_t>(c)] = quadrants_by_class(d, c);

    std::vector<KauffmanState> out;
    std::vector<int> chosen(static_cast<std::size_t>(m), -1);
    std::vector<char> used(static_cast<std::size_t>(d.num_faces()), 0);
    used[static_cast<std::size_t>(dd.region_a)] = 1;
    used[static_cast<std::size_t>(dd.region_b)] = 1;

    const auto descend = [&](auto&& self, int c) -> void {
        if (c == m) {
            out.push_back(make_state(dd, chosen));
            return;
        }
        for (int k = 0; k < 4; ++k) {
            const int q = order[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
            const int region = d.corner_region(c, q);
            if (used[static_cast<std::size_t>(region)]) continue;
            used[static_cast<std::size_t>(region)] = 1;
            chosen[static_cast<std::size_t>(c)] = q;
            self(self, c + 1);
            used[static_cast<std::size_t>(region)] = 0;
        }
    };
    descend(descend, 0);
    return out;
}

void sort_states(const LinkDiagram& d, std::vector<KauffmanState>& states) {
    const int m = d.num_crossings();
    std::vector<std::array<int, 4>> rank(static_cast<std::size_t>(m)); // quadrant -> class order position
    for (int c = 0; c < m; ++c) {
        const auto by_class = quadrants_by_class(d, c);
        for (int k = 0; k < 4; ++k) rank[static_cast<std::size_t>(c)][static_cast<std::size_t>(by_class[static_cast<std::size_t>(k)])] = k;
    }
    const auto key = [&](const KauffmanState& st) {
        std::vector<int> v(static_cast<std::size_t>(m));
        for (int c = 0; c < m; ++c)
            v[static_cast<std::size_t>(c)] = rank[static_cast<std::size_t>(c)][static_cast<std::size_t>(st.assignment[static_cast<std::size_t>(c)].quadrant)];
        return v;
    };
    std::sort(states.begin(), states.end(),
              [&](const KauffmanState& a, const KauffmanState& b) { return key(a) < key(b); });
}

LaurentPoly state_polynomial(const DecoratedDiagram& dd) {
    LaurentPoly p;
    for (const KauffmanState& st : enumerate_states(dd)) {
        if (!st.gr.is_integer())
            throw GradingNotInteger("state grading " + st.gr.str() + " has no parity");
        const bool odd = ((st.gr.as_integer() % 2) + 2) % 2 == 1;
        p.add_term(st.fil, odd ? -1 : +1);
    }
    return p;
}

} // namespace altlink
