#include "altlink/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>

#include <json.hpp>

#include "altlink/errors.hpp"

namespace altlink {

namespace {

// Union-find with an XOR offset per node, for two-valued constraint
// propagation ("these two darts have equal/opposite incoming-ness").
struct ParityUF {
    std::vector<int> parent;
    std::vector<char> offset;

    explicit ParityUF(int n) : parent(static_cast<std::size_t>(n)), offset(static_cast<std::size_t>(n), 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::pair<int, int> find(int x) {
        auto xi = static_cast<std::size_t>(x);
        if (parent[xi] == x) return {x, 0};
        auto [root, p] = find(parent[xi]);
        parent[xi] = root;
        offset[xi] = static_cast<char>(offset[xi] ^ p);
        return {root, offset[xi]};
    }

    bool unite(int a, int b, int d) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == d;
        parent[static_cast<std::size_t>(rb)] = ra;
        offset[static_cast<std::size_t>(rb)] = static_cast<char>(pa ^ pb ^ d);
        return true;
    }
};

int parse_positive_int(const std::string& s, std::size_t& i) {
    std::size_t start = i;
    long long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        if (v > 1000000000) throw SyntaxError("arc label too large");
        ++i;
    }
    if (i == start) throw SyntaxError("expected an arc label at position " + std::to_string(start));
    if (v == 0) throw SyntaxError("arc labels must be positive");
    return static_cast<int>(v);
}

void skip_soft(const std::string& s, std::size_t& i) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
}

std::vector<std::array<int, 4>> tuples_from_text(const std::string& text) {
    std::vector<std::array<int, 4>> tuples;
    std::size_t i = 0;
    skip_soft(text, i);
    while (i < text.size()) {
        if (text[i] != 'X') throw SyntaxError("expected 'X' at position " + std::to_string(i));
        ++i;
        if (i >= text.size() || text[i] != '(') throw SyntaxError("expected '(' after 'X'");
        ++i;
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            t[static_cast<std::size_t>(k)] = parse_positive_int(text, i);
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (k < 3) {
                if (i >= text.size() || text[i] != ',') throw SyntaxError("expected ',' inside tuple");
                ++i;
            }
        }
        if (i >= text.size() || text[i] != ')') throw SyntaxError("crossing tuple must have exactly 4 labels");
        ++i;
        tuples.push_back(t);
        skip_soft(text, i);
    }
    return tuples;
}

std::vector<std::array<int, 4>> tuples_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(std::string("bad JSON PD code: ") + e.what());
    }
    if (!j.is_array()) throw SyntaxError("JSON PD code must be an array of 4-tuples");
    std::vector<std::array<int, 4>> tuples;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 4) throw SyntaxError("crossing tuple must have exactly 4 labels");
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            const auto& v = row[static_cast<std::size_t>(k)];
            if (!v.is_number_integer()) throw SyntaxError("arc labels must be integers");
            auto n = v.get<std::int64_t>();
            if (n <= 0 || n > 1000000000) throw SyntaxError("arc labels must be positive");
            t[static_cast<std::size_t>(k)] = static_cast<int>(n);
        }
        tuples.push_back(t);
    }
    return tuples;
}

} // namespace

LinkDiagram LinkDiagram::parse_pd(const std::string& text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const bool json_form = i < text.size() && text[i] == '[';
    return from_tuples(json_form ? tuples_from_json(text) : tuples_from_text(text));
}

LinkDiagram LinkDiagram::from_tuples(std::vector<std::array<int, 4>> tuples) {
    LinkDiagram d;
    d.crossings_.reserve(tuples.size());
    for (const auto& t : tuples) d.crossings_.push_back(Crossing{t, 0});
    d.build();
    return d;
}

void LinkDiagram::build() {
    const int m = num_crossings();
    if (m == 0) throw EmptyDiagram("PD code has no crossings");

    // arc multiplicity: every label at exactly two slots
    std::map<int, std::vector<Dart>> occurrences;
    for (int c = 0; c < m; ++c)
        for (int s = 0; s < 4; ++s)
            occurrences[crossings_[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(s)]].push_back(Dart{c, s});
    for (const auto& [arc, darts] : occurrences) {
        if (darts.size() != 2)
            throw ArcMultiplicityError("arc " + std::to_string(arc) + " used " + std::to_string(darts.size()) +
                                       " times, expected 2");
        arc_darts_[arc] = {darts[0], darts[1]};
        arc_labels_.push_back(arc);
    }

    // connectivity of the underlying 4-valent graph
    {
        std::vector<char> seen(static_cast<std::size_t>(m), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int c = q.front();
            q.pop();
            for (int s = 0; s < 4; ++s) {
                int arc = crossings_[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(s)];
                for (const Dart& e : arc_darts_[arc]) {
                    if (!seen[static_cast<std::size_t>(e.crossing)]) {
                        seen[static_cast<std::size_t>(e.crossing)] = 1;
                        ++reached;
                        q.push(e.crossing);
                    }
                }
            }
        }
        if (reached != m) throw DisconnectedDiagram("diagram graph is not connected");
    }

    // orientation: incoming-ness of darts as a parity constraint system
    const auto dart_id = [](Dart e) { return 4 * e.crossing + e.slot; };
    const int anchor = 4 * m; // virtual node meaning "incoming"
    ParityUF uf(4 * m + 1);
    bool ok = true;
    for (int c = 0; c < m; ++c) {
        ok = ok && uf.unite(4 * c + 0, anchor, 0); // under-strand enters at slot 0
        ok = ok && uf.unite(4 * c + 2, anchor, 1); // and leaves at slot 2
        ok = ok && uf.unite(4 * c + 1, 4 * c + 3, 1); // over-strand passes through
    }
    for (const auto& [arc, darts] : arc_darts_)
        ok = ok && uf.unite(dart_id(darts[0]), dart_id(darts[1]), 1); // one end in, one out
    if (!ok) throw OrientationInconsistency("PD code is not orientable as a link diagram");

    incoming_.assign(static_cast<std::size_t>(4 * m), false);
    const auto [anchor_root, anchor_par] = uf.find(anchor);
    std::map<int, std::vector<int>> free_classes; // root -> darts never forced by an under-strand
    for (int x = 0; x < 4 * m; ++x) {
        auto [root, p] = uf.find(x);
        if (root == anchor_root)
            incoming_[static_cast<std::size_t>(x)] = (p == anchor_par);
        else
            free_classes[root].push_back(x);
    }
    for (const auto& [root, darts] : free_classes) {
        // A free class is a component that never passes under anything, so
        // only over-slots occur in it. Orient it the way that makes arc
        // labels mostly ascend, matching how published tables number arcs.
        const auto descents = [&](bool base) {
            int count = 0;
            for (int x : darts) {
                auto [r, p] = uf.find(x);
                const bool in = base != (p != 0);
                if (!in) continue;
                const int c = x / 4, s = x % 4;
                const int from = crossings_[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>(s)];
                const int to = crossings_[static_cast<std::size_t>(c)].arcs[static_cast<std::size_t>((s + 2) % 4)];
                if (to < from) ++count;
            }
            return count;
        };
        const int fwd = descents(true), bwd = descents(false);
        bool base = fwd <= bwd;
        if (fwd == bwd) {
            auto [r, p] = uf.find(darts.front()); // smallest dart becomes incoming
            base = (p == 0);
        }
        for (int x : darts) {
            auto [r, p] = uf.find(x);
            incoming_[static_cast<std::size_t>(x)] = base != (p != 0);
        }
    }

    // signs: over-strand entering at slot 1 is the positive crossing
    for (int c = 0; c < m; ++c)
        crossings_[static_cast<std::size_t>(c)].sign = incoming(c, 1) ? +1 : -1;

    // components: follow each strand straight through its crossings
    {
        std::map<int, int> succ;
        for (const auto& [arc, darts] : arc_darts_) {
            const Dart in = incoming(darts[0].crossing, darts[0].slot) ? darts[0] : darts[1];
            const int out_slot = in.slot == 0 ? 2 : (in.slot + 2) % 4;
            succ[arc] = crossings_[static_cast<std::size_t>(in.crossing)].arcs[static_cast<std::size_t>(out_slot)];
        }
        for (int arc : arc_labels_) {
            if (arc_component_.count(arc)) continue;
            for (int a = arc; !arc_component_.count(a); a = succ[a]) arc_component_[a] = num_components_;
            ++num_components_;
        }
    }

    // faces: orbits of "cross the arc, then take the clockwise-next dart".
    // The corner recorded at each step is the quadrant just before the
    // departure slot, so corner (c,q) and departure dart (c,q) share a face.
    corner_face_.assign(static_cast<std::size_t>(4 * m), -1);
    std::vector<char> used(static_cast<std::size_t>(4 * m), 0);
    for (int start = 0; start < 4 * m; ++start) {
        if (used[static_cast<std::size_t>(start)]) continue;
        std::vector<Corner> face;
        int d = start;
        do {
            used[static_cast<std::size_t>(d)] = 1;
            const Dart here{d / 4, d % 4};
            const auto& ends = arc_darts_.at(crossings_[static_cast<std::size_t>(here.crossing)].arcs[static_cast<std::size_t>(here.slot)]);
            const Dart other = (ends[0] == here) ? ends[1] : ends[0];
            const int q = (other.slot + 3) % 4;
            face.push_back(Corner{other.crossing, q});
            corner_face_[static_cast<std::size_t>(4 * other.crossing + q)] = static_cast<int>(faces_.size());
            d = 4 * other.crossing + q;
        } while (d != start);
        faces_.push_back(std::move(face));
    }
    if (num_faces() != m + 2)
        throw EmbeddingError("face count " + std::to_string(num_faces()) + " != crossings + 2; rotation system is not planar");

    // checkerboard coloring; the face holding corner (0,0) is white
    black_.assign(faces_.size(), false);
    std::vector<char> colored(faces_.size(), 0);
    std::queue<int> bfs;
    bfs.push(corner_region(0, 0));
    colored[static_cast<std::size_t>(corner_region(0, 0))] = 1;
    while (!bfs.empty()) {
        int f = bfs.front();
        bfs.pop();
        for (int arc : arc_labels_) {
            const auto [f1, f2] = arc_faces(arc);
            if (f1 != f && f2 != f) continue;
            const int g = f1 == f ? f2 : f1;
            if (!colored[static_cast<std::size_t>(g)]) {
                colored[static_cast<std::size_t>(g)] = 1;
                black_[static_cast<std::size_t>(g)] = !black_[static_cast<std::size_t>(f)];
                bfs.push(g);
            } else if (black_[static_cast<std::size_t>(g)] == black_[static_cast<std::size_t>(f)]) {
                throw ColoringError("faces sharing an edge received one color");
            }
        }
    }
    for (char c : colored)
        if (!c) throw ColoringError("face coloring did not reach every face");
}

int LinkDiagram::writhe() const {
    int w = 0;
    for (const auto& c : crossings_) w += c.sign;
    return w;
}

std::array<int, 2> LinkDiagram::arc_faces(int arc) const {
    const auto& darts = arc_darts_.at(arc);
    return {corner_face_[static_cast<std::size_t>(4 * darts[0].crossing + darts[0].slot)],
            corner_face_[static_cast<std::size_t>(4 * darts[1].crossing + darts[1].slot)]};
}

LinkDiagram LinkDiagram::mirrored() const {
    std::vector<std::array<int, 4>> tuples;
    tuples.reserve(crossings_.size());
    for (const auto& c : crossings_) {
        const int shift = c.sign > 0 ? 1 : 3; // old over-strand entry becomes slot 0
        std::array<int, 4> t{};
        for (int s = 0; s < 4; ++s) t[static_cast<std::size_t>(s)] = c.arcs[static_cast<std::size_t>((s + shift) % 4)];
        tuples.push_back(t);
    }
    return from_tuples(std::move(tuples));
}

LinkDiagram LinkDiagram::reversed() const {
    std::vector<std::array<int, 4>> tuples;
    tuples.reserve(crossings_.size());
    for (const auto& c : crossings_) {
        std::array<int, 4> t{};
        for (int s = 0; s < 4; ++s) t[static_cast<std::size_t>(s)] = c.arcs[static_cast<std::size_t>((s + 2) % 4)];
        tuples.push_back(t);
    }
    return from_tuples(std::move(tuples));
}

std::string LinkDiagram::pd_text() const {
    std::string out;
    for (const auto& c : crossings_) {
        if (!out.empty()) out += ' ';
        out += "X(" + std::to_string(c.arcs[0]) + ',' + std::to_string(c.arcs[1]) + ',' +
               std::to_string(c.arcs[2]) + ',' + std::to_string(c.arcs[3]) + ')';
    }
    return out;
}

DecoratedDiagram decorate(const LinkDiagram& d, int edge) {
    if (!d.has_arc(edge)) throw UnknownEdge("no arc labeled " + std::to_string(edge));
    const auto [f1, f2] = d.arc_faces(edge);
    DecoratedDiagram dd{d, edge, 0, 0};
    dd.region_a = d.is_black(f1) ? f1 : f2;
    dd.region_b = d.is_black(f1) ? f2 : f1;
    return dd;
}

DecoratedDiagram decorate(const LinkDiagram& d) { return decorate(d, d.arc_labels().front()); }

} // namespace altlink
