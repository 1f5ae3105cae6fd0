#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altlink/diagram.hpp"
#include "altlink/halfint.hpp"
#include "altlink/laurent.hpp"

namespace altlink {

// Alexander polynomial by the classical region determinant (Dehn
// presentation): one row per crossing, one column per region, entries
// {1,-1,t,-t} fixed by the crossing sign and quadrant class; the two columns
// flanking one arc are deleted before taking the determinant. The result is
// returned symmetrized and, up to units, does not depend on the chosen arc.
// Shares no code with the state-sum route, so the two can check each other.
LaurentPoly alexander_polynomial(const LinkDiagram& d); // flanks the lowest arc
LaurentPoly alexander_polynomial_at(const LinkDiagram& d, int arc);

// Genus of the Seifert surface after banding its boundary components into
// one: (components - chi)/2. Throws ParityError when the difference is odd,
// which no Euler characteristic of a genuine Seifert surface produces.
int genus_bound(int components, int chi);

struct NamedCheck {
    std::string name;
    bool passed = false;
};

// Summary of the top filtration level. On alternative diagrams the tree
// algorithm and the closed formulas fill fil_max/gr_max/rank, and that rank
// is the dimension of the top Alexander grading of knot Floer homology;
// otherwise the fields fall back to the brute-force enumeration and no
// structural claims are attached.
struct TopReport {
    bool alternative = false;
    int components = 0;
    int chi = 0; // of the Seifert surface: circles - crossings
    HalfInt fil_max;
    std::optional<HalfInt> gr_max; // unset if the top slice mixes gradings
    int rank = 0;                  // number of maximal-filtration states
    HalfInt genus_bound;
    std::optional<bool> fibred; // rank == 1; decided only when alternative
    LaurentPoly alexander;
    std::optional<bool> monic; // unset when alexander == 0
    std::vector<NamedCheck> checks;
    bool all_checks_passed() const;
};

// force_brute replays the brute-force comparison even when the tree
// algorithm applies, adding a named cross-check.
TopReport top_report(const DecoratedDiagram& dd, bool force_brute = false);

struct TopLevelVerification {
    std::vector<NamedCheck> checks;
    // state-sum vs determinant agreement is a check only for knots; for
    // odd-component links the outcome is recorded here as data
    std::optional<bool> link_state_sum_agrees;
    bool all_passed() const;
};

// Everything the top filtration level of an alternative decorated diagram
// must satisfy, each fact reported separately; throws NotAlternative
// otherwise.
TopLevelVerification verify_top_level(const DecoratedDiagram& dd);

} // namespace altlink
