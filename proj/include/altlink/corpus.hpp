#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altlink/analysis.hpp"
#include "altlink/halfint.hpp"
#include "altlink/json_io.hpp"

namespace altlink {

// Expectations are compared against a TopReport; every field is optional so
// entries can pin only the invariants that make sense for them (for example
// fibredness is undefined off the alternative class).
struct CorpusExpected {
    std::optional<HalfInt> fil_max;
    std::optional<int> rank;
    std::optional<bool> fibred;
    std::optional<std::string> alexander; // canonical symmetrized rendering
};

struct CorpusEntry {
    std::string name;
    std::string pd;
    std::optional<int> edge; // marked edge; lowest arc when absent
    std::optional<CorpusExpected> expected;
};

// Parses and validates {schema:1, entries:[{name, pd, edge?, expected?}]}.
// Unknown fields, a bad schema number, a non-parsing pd, or an edge label
// missing from its diagram raise SchemaError naming the entry; unreadable
// files raise IOError.
std::vector<CorpusEntry> load_corpus(const std::string& path);

struct CorpusOutcome {
    std::string name;
    bool pass = false;
    std::vector<NamedCheck> checks;
    std::string error; // set when evaluation threw instead of reporting
};

// Evaluates every entry: report checks, full top-level verification on
// alternative diagrams, and expectation comparisons. Entries run on a small
// thread pool (capped by ALTLINK_THREADS); results keep corpus order.
std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusEntry>& entries);

// {schema, count, passed, results:[{name, pass, error?, checks}]}
ordered_json corpus_json(const std::vector<CorpusOutcome>& results);

} // namespace altlink
