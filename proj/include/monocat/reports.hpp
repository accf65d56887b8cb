#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "monocat/serialize.hpp"

namespace monocat {

// 0 all claims pass, 1 some claim fails, 2 inconclusive at the bound, 3 bad input.
enum class ExitStatus { Pass = 0, Fail = 1, Inconclusive = 2, InputError = 3 };

struct RunConfig {
    std::string algebra = "loop:2";
    std::string subcat = "all";  // or a JSON file with a list of modules
    Scalar p = 2;
    std::size_t bound = 9;       // dim A + dim B for objects of S, dim M for modules
    std::vector<StructureKind> kinds{StructureKind::Canonical, StructureKind::CW, StructureKind::SCW};
};

struct Report {
    Json json;
    ExitStatus status = ExitStatus::Pass;
};

// The algebra, subcategory and enumerated indecomposables of S for a config.
struct Context {
    RunConfig config;
    AlgebraPtr algebra;
    Subcat sub;
    std::vector<MorphObj> universe;
    static Context load(const RunConfig& c);
};

extern const std::vector<std::string> kSuites;

// what: "modules", "s" or "gamma".
Report cmd_enumerate(const RunConfig& config, const std::string& what);
Report cmd_verify(const RunConfig& config, const std::string& suite);
// Re-runs one check from the "replay" payload of a claim.
Report cmd_replay(const RunConfig& config, const Json& payload);

// Runs f and turns the library's exceptions into a report with the right status.
Report guarded_report(const std::string& command, const std::function<Report()>& f);

}  // namespace monocat
