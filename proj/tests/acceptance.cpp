// Acceptance harness: one criterion per line, PASS or FAIL with the first
// violated expectation. Exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "altlink/analysis.hpp"
#include "altlink/ata.hpp"
#include "altlink/corpus.hpp"
#include "altlink/diagram.hpp"
#include "altlink/seifert.hpp"
#include "altlink/states.hpp"
#include "support/braid.hpp"

using namespace altlink;

namespace {

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string env_or_fail(const char* name) {
    const char* v = std::getenv(name);
    expect(v != nullptr, std::string(name) + " not set (run under ctest)");
    return v;
}

// stdout of the built binary, stderr silenced.
std::string run_cli(const std::string& args, int expect_exit = 0) {
    const std::string cmd = env_or_fail("ALTLINK_CLI") + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    expect(pipe != nullptr, "popen failed");
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    expect(code == expect_exit,
           "`" + args + "` exited " + std::to_string(code) + ", want " + std::to_string(expect_exit));
    return out;
}

std::vector<CorpusEntry> corpus() { return load_corpus(env_or_fail("ALTLINK_CORPUS")); }

DecoratedDiagram decorated(const LinkDiagram& d, const CorpusEntry& e) {
    return e.edge ? decorate(d, *e.edge) : decorate(d);
}

const CorpusEntry& entry_named(const std::vector<CorpusEntry>& entries, const std::string& name) {
    for (const auto& e : entries)
        if (e.name == name) return e;
    throw Failure("corpus entry '" + name + "' missing");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. The standard positive trefoil, end to end: top filtration 1 with a
//    single state in grading 0, state sum equal to the determinant oracle
//    up to a unit, fibred; all in under a second.
void criterion_trefoil() {
    const auto t0 = std::chrono::steady_clock::now();
    const LinkDiagram d = LinkDiagram::parse_pd(kTrefoil);
    const DecoratedDiagram dd = decorate(d);
    const TopReport r = top_report(dd);
    expect(r.alternative, "trefoil diagram not recognized as alternative");
    expect(r.fil_max == HalfInt::whole(1), "fil_max = " + r.fil_max.str() + ", want 1");
    expect(r.rank == 1, "rank = " + std::to_string(r.rank) + ", want 1");
    expect(r.gr_max.has_value() && *r.gr_max == HalfInt::whole(0),
           "gr_max != 0 on the positive trefoil");
    const LaurentPoly oracle = alexander_polynomial(d);
    expect(oracle.str() == "t^1 - 1 + t^-1", "oracle gave " + oracle.str());
    expect(equal_up_to_unit(state_polynomial(dd), oracle),
           "state sum disagrees with the determinant oracle");
    expect(r.fibred.has_value() && *r.fibred, "trefoil not reported fibred");
    expect(r.all_checks_passed(), "a report check failed");
    expect(seconds_since(t0) < 1.0, "took longer than 1 s");
}

// 2. On every alternative corpus diagram the tree algorithm reproduces the
//    brute-force top-filtration slice exactly, and all its states sit at the
//    closed-formula filtration and grading. At least 12 such diagrams,
//    under 30 s in total.
void criterion_tree_algorithm() {
    const auto t0 = std::chrono::steady_clock::now();
    int alternative_count = 0;
    for (const auto& e : corpus()) {
        const LinkDiagram d = LinkDiagram::parse_pd(e.pd);
        const SpaceCensus census = seifert_spaces(d);
        if (!census.alternative) continue;
        ++alternative_count;
        const DecoratedDiagram dd = decorated(d, e);
        const auto tree = ata_enumerate(dd);
        auto all = enumerate_states(dd);
        expect(!all.empty(), e.name + ": no states at all");
        HalfInt top = all.front().fil;
        for (const auto& st : all) top = std::max(top, st.fil, [](HalfInt a, HalfInt b) {
            return a.twice < b.twice;
        });
        std::vector<KauffmanState> slice;
        for (const auto& st : all)
            if (st.fil == top) slice.push_back(st);
        expect(tree.size() == slice.size(),
               e.name + ": tree found " + std::to_string(tree.size()) + " states, brute force " +
                   std::to_string(slice.size()));
        for (std::size_t i = 0; i < tree.size(); ++i)
            expect(tree[i].assignment == slice[i].assignment && tree[i].fil == slice[i].fil &&
                       tree[i].gr == slice[i].gr,
                   e.name + ": state " + std::to_string(i) + " differs between the routes");
        const HalfInt fil = fil_max_formula(census, d.num_components());
        const HalfInt gr = gr_max_formula(census, d.num_components());
        for (const auto& st : tree)
            expect(st.fil == fil && st.gr == gr,
                   e.name + ": a tree state misses the formula filtration or grading");
    }
    expect(alternative_count >= 12, "only " + std::to_string(alternative_count) +
                                        " alternative corpus diagrams, want >= 12");
    expect(seconds_since(t0) < 30.0, "took longer than 30 s");
}

// 3. Top filtration of an alternative diagram from the census alone:
//    (components - (circles - crossings))/2, with spaces = circles + 1
//    asserted independently.
void criterion_closed_formula() {
    for (const auto& e : corpus()) {
        const LinkDiagram d = LinkDiagram::parse_pd(e.pd);
        const SpaceCensus census = seifert_spaces(d);
        if (!census.alternative) continue;
        expect(census.c == census.s + 1,
               e.name + ": " + std::to_string(census.s) + " circles cut out " +
                   std::to_string(census.c) + " spaces");
        const TopReport r = top_report(decorated(d, e));
        const HalfInt want = HalfInt::from_twice(d.num_components() - census.s + d.num_crossings());
        expect(r.fil_max == want,
               e.name + ": fil_max = " + r.fil_max.str() + ", formula gives " + want.str());
    }
}

// 4. Fibredness through the top coefficient: trefoil and figure-eight are
//    fibred with monic Alexander polynomial; 5_2 and 6_1 are not, with rank 2
//    and top coefficient of absolute value 2.
void criterion_fibredness() {
    const auto entries = corpus();
    for (const char* name : {"trefoil", "figure_eight"}) {
        const auto& e = entry_named(entries, name);
        const TopReport r = top_report(decorated(LinkDiagram::parse_pd(e.pd), e));
        expect(r.fibred.has_value() && *r.fibred, std::string(name) + " not reported fibred");
        expect(r.monic.has_value() && *r.monic, std::string(name) + " polynomial not monic");
    }
    for (const char* name : {"5_2", "6_1"}) {
        const auto& e = entry_named(entries, name);
        const TopReport r = top_report(decorated(LinkDiagram::parse_pd(e.pd), e));
        expect(r.fibred.has_value() && !*r.fibred, std::string(name) + " wrongly reported fibred");
        expect(r.rank == 2, std::string(name) + " rank = " + std::to_string(r.rank) + ", want 2");
        const std::int64_t lead = r.alexander.coeff(r.alexander.max_exp());
        expect(lead == 2 || lead == -2,
               std::string(name) + " top coefficient " + std::to_string(lead) + ", want |2|");
    }
}

// 5. The determinant oracle is independent of the deleted column pair, and
//    agrees with the state sum up to a unit, on every corpus knot.
void criterion_oracle_independence() {
    for (const auto& e : corpus()) {
        const LinkDiagram d = LinkDiagram::parse_pd(e.pd);
        if (d.num_components() != 1) continue;
        const LaurentPoly base = alexander_polynomial(d);
        for (int arc : d.arc_labels()) {
            const LaurentPoly p = alexander_polynomial_at(d, arc);
            expect(p == base, e.name + ": oracle at arc " + std::to_string(arc) + " gave " +
                                  p.str() + " instead of " + base.str());
        }
        expect(equal_up_to_unit(state_polynomial(decorate(d)), base),
               e.name + ": state sum disagrees with the oracle");
    }
}

// 6. Structural properties over the corpus plus 100 random diagrams:
//    faces = crossings + 2; spaces = circles + 1; crossing-free spaces hold
//    exactly one region; each crossing shows all four quadrant classes, its
//    filtration contributions cancel and gr(N) = 2 fil(N); every state is a
//    bijection avoiding the marked regions; mirroring negates filtration
//    levels (about the (|L|-1)/2 center that mirroring fixes).
void criterion_structure() {
    std::vector<LinkDiagram> pool;
    for (const auto& e : corpus()) pool.push_back(LinkDiagram::parse_pd(e.pd));
    for (std::uint64_t seed = 1; seed <= 100; ++seed)
        pool.push_back(LinkDiagram::from_tuples(testing::random_diagram(seed)));

    for (const LinkDiagram& d : pool) {
        const int m = d.num_crossings();
        expect(d.num_faces() == m + 2, "faces != crossings + 2");
        const SpaceCensus census = seifert_spaces(d);
        expect(census.c == census.s + 1, "spaces != circles + 1");
        for (const SeifertSpace& sp : census.spaces)
            if (sp.sign == SpaceSign::empty)
                expect(sp.regions.size() == 1 && sp.crossings.empty(),
                       "crossing-free space with more than its one region");
        for (int c = 0; c < m; ++c) {
            const auto classes = classify_quadrants(d, c);
            std::set<QuadrantClass> seen(classes.begin(), classes.end());
            expect(seen.size() == 4, "quadrant classes not a permutation of N,S,E,W");
            int fil_sum = 0;
            for (QuadrantClass q : classes) fil_sum += local_fil(d.sign(c), q).twice;
            expect(fil_sum == 0, "filtration contributions do not cancel at a crossing");
            expect(local_gr(d.sign(c), QuadrantClass::N).twice ==
                       2 * local_fil(d.sign(c), QuadrantClass::N).twice,
                   "gr(N) != 2 fil(N)");
        }

        const DecoratedDiagram dd = decorate(d);
        const auto states = enumerate_states(dd);
        for (const auto& st : states) {
            expect(static_cast<int>(st.assignment.size()) == m, "state misses a crossing");
            std::set<int> regions;
            for (const auto& en : st.assignment) {
                expect(en.region != dd.region_a && en.region != dd.region_b,
                       "state occupies a marked region");
                regions.insert(en.region);
            }
            expect(static_cast<int>(regions.size()) == m, "state reuses a region");
        }

        const int center = d.num_components() - 1; // twice the (|L|-1)/2 offset
        const auto mirrored = enumerate_states(decorate(d.mirrored(), dd.marked_edge));
        expect(mirrored.size() == states.size(), "mirror changes the state count");
        std::multiset<int> fils, mirrored_fils;
        for (const auto& st : states) fils.insert(st.fil.twice - center);
        for (const auto& st : mirrored) mirrored_fils.insert(center - st.fil.twice);
        expect(fils == mirrored_fils, "mirror does not negate the filtration multiset");
    }
}

// 7. Determinism and decoration independence: repeated CLI runs are
//    byte-identical, and moving the marked edge never changes fil_max or
//    rank on an alternative corpus knot. Non-alternative diagrams are out of
//    scope here: their top slice is a chain-level artifact and genuinely
//    moves with the decoration (on the 5-crossing trefoil diagram, arcs 9
//    and 10 admit a canceling pair one level above the top elsewhere), even
//    though the signed state sum stays put.
void criterion_determinism() {
    const std::string corpus_file = env_or_fail("ALTLINK_CORPUS");
    const std::string report_cmd = std::string("report --pd \"") + kTrefoil + "\"";
    expect(run_cli(report_cmd) == run_cli(report_cmd), "report output not byte-identical");
    const std::string verify_cmd = std::string("verify --pd \"") + kTrefoil + "\"";
    expect(run_cli(verify_cmd) == run_cli(verify_cmd), "verify output not byte-identical");
    const std::string batch_cmd = "verify --corpus " + corpus_file;
    expect(run_cli(batch_cmd) == run_cli(batch_cmd), "corpus output not byte-identical");

    for (const auto& e : corpus()) {
        const LinkDiagram d = LinkDiagram::parse_pd(e.pd);
        if (d.num_components() != 1 || !is_alternative(d)) continue;
        const TopReport base = top_report(decorate(d));
        for (int arc : d.arc_labels()) {
            const TopReport r = top_report(decorate(d, arc));
            expect(r.fil_max == base.fil_max && r.rank == base.rank,
                   e.name + ": marking arc " + std::to_string(arc) + " moved fil_max or rank");
        }
    }
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void()>>> criteria = {
        {"trefoil end-to-end", criterion_trefoil},
        {"tree algorithm equals brute force on the corpus", criterion_tree_algorithm},
        {"top filtration matches the census formula", criterion_closed_formula},
        {"fibredness decided by the top coefficient", criterion_fibredness},
        {"determinant oracle independence", criterion_oracle_independence},
        {"structural properties on corpus and random diagrams", criterion_structure},
        {"deterministic output, decoration independence", criterion_determinism},
    };
    int failed = 0;
    for (const auto& [name, body] : criteria) {
        try {
            body();
            std::printf("PASS  %s\n", name);
        } catch (const std::exception& e) {
            ++failed;
            std::printf("FAIL  %s: %s\n", name, e.what());
        }
    }
    if (failed) std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed;
}
