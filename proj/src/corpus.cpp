#include "altlink/corpus.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "altlink/errors.hpp"

namespace altlink {

namespace {

HalfInt parse_half(const std::string& s, const std::string& entry) {
    try {
        std::size_t used = 0;
        if (const auto slash = s.find('/'); slash != std::string::npos) {
            if (s.substr(slash) != "/2") throw SchemaError("");
            const long long num = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw SchemaError("");
            return HalfInt::from_twice(num);
        }
        const long long whole = std::stoll(s, &used);
        if (used != s.size()) throw SchemaError("");
        return HalfInt::whole(whole);
    } catch (const std::exception&) {
        throw SchemaError("entry \"" + entry + "\": bad half-integer \"" + s + "\"");
    }
}

void reject_unknown(const ordered_json& obj, std::initializer_list<const char*> known,
                    const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw SchemaError(where + ": unknown field \"" + key + "\"");
    }
}

CorpusExpected parse_expected(const ordered_json& j, const std::string& entry) {
    if (!j.is_object()) throw SchemaError("entry \"" + entry + "\": expected block is not an object");
    reject_unknown(j, {"fil_max", "rank", "fibred", "alexander"}, "entry \"" + entry + "\"");
    CorpusExpected e;
    if (j.contains("fil_max")) {
        if (!j["fil_max"].is_string())
            throw SchemaError("entry \"" + entry + "\": fil_max must be a half-integer string");
        e.fil_max = parse_half(j["fil_max"].get<std::string>(), entry);
    }
    if (j.contains("rank")) {
        if (!j["rank"].is_number_integer())
            throw SchemaError("entry \"" + entry + "\": rank must be an integer");
        e.rank = j["rank"].get<int>();
    }
    if (j.contains("fibred")) {
        if (!j["fibred"].is_boolean())
            throw SchemaError("entry \"" + entry + "\": fibred must be a boolean");
        e.fibred = j["fibred"].get<bool>();
    }
    if (j.contains("alexander")) {
        if (!j["alexander"].is_string())
            throw SchemaError("entry \"" + entry + "\": alexander must be a string");
        e.alexander = j["alexander"].get<std::string>();
    }
    return e;
}

CorpusOutcome evaluate(const CorpusEntry& entry) {
    CorpusOutcome out;
    out.name = entry.name;
    try {
        const LinkDiagram d = LinkDiagram::parse_pd(entry.pd);
        const DecoratedDiagram dd = entry.edge ? decorate(d, *entry.edge) : decorate(d);
        const TopReport report = top_report(dd);
        out.checks = report.checks;
        if (report.alternative) {
            const TopLevelVerification v = verify_top_level(dd);
            out.checks.insert(out.checks.end(), v.checks.begin(), v.checks.end());
        }
        if (entry.expected) {
            const CorpusExpected& e = *entry.expected;
            if (e.fil_max) out.checks.push_back({"expected_fil_max", report.fil_max == *e.fil_max});
            if (e.rank) out.checks.push_back({"expected_rank", report.rank == *e.rank});
            if (e.fibred)
                out.checks.push_back(
                    {"expected_fibred", report.fibred.has_value() && *report.fibred == *e.fibred});
            if (e.alexander)
                out.checks.push_back({"expected_alexander", report.alexander.str() == *e.alexander});
        }
        out.pass = std::all_of(out.checks.begin(), out.checks.end(),
                               [](const NamedCheck& c) { return c.passed; });
    } catch (const Error& err) {
        out.error = err.what();
        out.pass = false;
    }
    return out;
}

int thread_budget(std::size_t entries) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("ALTLINK_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) n = static_cast<unsigned>(v);
    }
    if (n > entries) n = static_cast<unsigned>(entries);
    return static_cast<int>(n == 0 ? 1 : n);
}

} // namespace

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open corpus file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    ordered_json j;
    try {
        j = ordered_json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("corpus file " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw SchemaError("corpus root must be an object");
    reject_unknown(j, {"schema", "entries"}, "corpus root");
    if (!j.contains("schema") || j["schema"] != 1)
        throw SchemaError("corpus schema must be 1");
    if (!j.contains("entries") || !j["entries"].is_array())
        throw SchemaError("corpus entries must be an array");

    std::vector<CorpusEntry> entries;
    for (const auto& je : j["entries"]) {
        if (!je.is_object() || !je.contains("name") || !je["name"].is_string())
            throw SchemaError("corpus entry without a name");
        CorpusEntry entry;
        entry.name = je["name"].get<std::string>();
        reject_unknown(je, {"name", "pd", "edge", "expected"}, "entry \"" + entry.name + "\"");
        if (!je.contains("pd") || !je["pd"].is_string())
            throw SchemaError("entry \"" + entry.name + "\": missing pd string");
        entry.pd = je["pd"].get<std::string>();
        LinkDiagram d = [&] {
            try {
                return LinkDiagram::parse_pd(entry.pd);
            } catch (const Error& e) {
                throw SchemaError("entry \"" + entry.name + "\": pd does not parse: " + e.what());
            }
        }();
        if (je.contains("edge")) {
            if (!je["edge"].is_number_integer())
                throw SchemaError("entry \"" + entry.name + "\": edge must be an integer");
            entry.edge = je["edge"].get<int>();
            if (!d.has_arc(*entry.edge))
                throw SchemaError("entry \"" + entry.name + "\": edge " +
                                  std::to_string(*entry.edge) + " is not an arc of pd");
        }
        if (je.contains("expected")) entry.expected = parse_expected(je["expected"], entry.name);
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusEntry>& entries) {
    std::vector<CorpusOutcome> results(entries.size());
    if (entries.empty()) return results;
    const int workers = thread_budget(entries.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < entries.size(); i = next.fetch_add(1))
            results[i] = evaluate(entries[i]);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();
    return results;
}

ordered_json corpus_json(const std::vector<CorpusOutcome>& results) {
    ordered_json arr = ordered_json::array();
    std::size_t passed = 0;
    for (const CorpusOutcome& r : results) {
        ordered_json checks = ordered_json::array();
        for (const NamedCheck& c : r.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}});
        ordered_json row;
        row["name"] = r.name;
        row["pass"] = r.pass;
        if (!r.error.empty()) row["error"] = r.error;
        row["checks"] = checks;
        arr.push_back(row);
        if (r.pass) ++passed;
    }
    ordered_json j;
    j["schema"] = 1;
    j["count"] = results.size();
    j["passed"] = passed;
    j["results"] = arr;
    return j;
}

} // namespace altlink
