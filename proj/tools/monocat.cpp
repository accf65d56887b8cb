#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "monocat/errors.hpp"
#include "monocat/reports.hpp"

using namespace monocat;

namespace {

// Fail beats inconclusive: exit 0 only when everything passed.
ExitStatus worst(ExitStatus a, ExitStatus b) {
    auto rank = [](ExitStatus s) {
        switch (s) {
            case ExitStatus::Pass: return 0;
            case ExitStatus::Inconclusive: return 1;
            case ExitStatus::Fail: return 2;
            case ExitStatus::InputError: return 3;
        }
        return 3;
    };
    return rank(a) >= rank(b) ? a : b;
}

std::vector<StructureKind> parse_kinds(const std::string& s) {
    if (s == "all") return {kAllKinds[0], kAllKinds[1], kAllKinds[2]};
    std::vector<StructureKind> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = std::min(s.find(',', start), s.size());
        out.push_back(parse_kind(s.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

int emit(const Report& r, const std::string& out) {
    const std::string text = r.json.dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "monocat: cannot write '" << out << "'\n";
            return static_cast<int>(ExitStatus::InputError);
        }
        f << text;
    }
    if (r.json.contains("error")) std::cerr << "monocat: " << r.json["error"].get<std::string>() << "\n";
    return static_cast<int>(r.status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monomorphism categories, their exact structures and almost split sequences"};
    app.require_subcommand(1);

    RunConfig config;
    std::string kinds = "all", out, objects = "s", suite = "all", payload_path;
    long long p = 2;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--algebra", config.algebra, "loop:N, linear:M, preprojective:M or an algebra JSON file")
            ->capture_default_str();
        sub->add_option("--subcat", config.subcat, "'all' or comma-separated JSON files of generator modules")
            ->capture_default_str();
        sub->add_option("--p", p, "prime field size")->capture_default_str();
        sub->add_option("--bound", config.bound, "dimension bound for enumeration")->capture_default_str();
        sub->add_option("--kind", kinds, "canonical, cw, scw, a comma list, or all")->capture_default_str();
        sub->add_option("--out", out, "output file (default stdout)");
    };

    auto* enumerate = app.add_subcommand("enumerate", "list indecomposables as JSON");
    common(enumerate);
    enumerate->add_option("--objects", objects, "modules, s or gamma")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify);
    std::string suites_help = "one of all";
    for (const auto& s : kSuites) suites_help += ", " + s;
    verify->add_option("--suite", suite, suites_help)->capture_default_str();

    auto* replay = app.add_subcommand("replay", "re-run the check behind one claim's replay payload");
    common(replay);
    replay->add_option("--payload", payload_path, "JSON file holding the payload")->required();

    auto* algebra = app.add_subcommand("algebra", "print the algebra presentation as JSON");
    common(algebra);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ExitStatus::InputError);
    }

    auto configure = [&] {
        if (p < 2) throw InputError("p must be a prime");
        config.p = static_cast<Scalar>(p);
        config.kinds = parse_kinds(kinds);
        Budget::from_environment();
    };

    if (*enumerate)
        return emit(guarded_report("enumerate", [&] {
                        configure();
                        return cmd_enumerate(config, objects);
                    }),
                    out);
    if (*algebra)
        return emit(guarded_report("algebra", [&] {
                        configure();
                        return Report{Json{{"command", "algebra"},
                                           {"algebra", algebra_to_json(*algebra_from_spec(config.algebra, config.p))}},
                                      ExitStatus::Pass};
                    }),
                    out);
    if (*replay)
        return emit(guarded_report("replay", [&] {
                        configure();
                        std::ifstream in(payload_path);
                        if (!in) throw InputError("cannot open payload '" + payload_path + "'");
                        Json j;
                        try {
                            j = Json::parse(in);
                        } catch (const nlohmann::json::exception& e) {
                            throw InputError(std::string("malformed payload: ") + e.what());
                        }
                        // A whole claim is accepted too.
                        if (j.contains("replay")) j = j.at("replay");
                        return cmd_replay(config, j);
                    }),
                    out);

    if (suite != "all") return emit(guarded_report("verify", [&] {
                                        configure();
                                        return cmd_verify(config, suite);
                                    }),
                                    out);
    Report all;
    all.json = Json{{"command", "verify"}, {"suite", "all"}, {"reports", Json::array()}};
    for (const auto& s : kSuites) {
        auto r = guarded_report("verify", [&] {
            configure();
            return cmd_verify(config, s);
        });
        if (!r.json.contains("suite")) r.json["suite"] = s;
        all.status = worst(all.status, r.status);
        all.json["reports"].push_back(std::move(r.json));
    }
    all.json["status"] = all.status == ExitStatus::Pass ? "pass"
                         : all.status == ExitStatus::Fail ? "fail"
                         : all.status == ExitStatus::Inconclusive ? "inconclusive"
                                                                  : "input-error";
    return emit(all, out);
}
