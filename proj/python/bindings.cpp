#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monocat/errors.hpp"
#include "monocat/reports.hpp"

namespace py = pybind11;
using namespace monocat;

namespace {

RunConfig make_config(const std::string& algebra, const std::string& subcat, long long p, std::size_t bound,
                      const std::vector<std::string>& kinds) {
    if (p < 2) throw InputError("p must be a prime");
    RunConfig c;
    c.algebra = algebra;
    c.subcat = subcat;
    c.p = static_cast<Scalar>(p);
    c.bound = bound;
    if (!kinds.empty()) {
        c.kinds.clear();
        for (const auto& k : kinds) c.kinds.push_back(parse_kind(k));
    }
    return c;
}

// (report as JSON text, exit status)
std::pair<std::string, int> run(const std::string& command, const std::function<Report()>& f) {
    Report r;
    {
        py::gil_scoped_release release;
        r = guarded_report(command, f);
    }
    return {r.json.dump(), static_cast<int>(r.status)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Monomorphism categories over finite fields: enumeration and verification reports";
    m.attr("SUITES") = kSuites;

    m.def(
        "enumerate",
        [](const std::string& what, const std::string& algebra, const std::string& subcat, long long p,
           std::size_t bound) {
            auto c = make_config(algebra, subcat, p, bound, {});
            return run("enumerate", [&] { return cmd_enumerate(c, what); });
        },
        py::arg("what") = "s", py::arg("algebra") = "loop:2", py::arg("subcat") = "all", py::arg("p") = 2,
        py::arg("bound") = 9);

    m.def(
        "verify",
        [](const std::string& suite, const std::string& algebra, const std::string& subcat, long long p,
           std::size_t bound, const std::vector<std::string>& kinds) {
            auto c = make_config(algebra, subcat, p, bound, kinds);
            return run("verify", [&] { return cmd_verify(c, suite); });
        },
        py::arg("suite"), py::arg("algebra") = "loop:2", py::arg("subcat") = "all", py::arg("p") = 2,
        py::arg("bound") = 9, py::arg("kinds") = std::vector<std::string>{});

    m.def(
        "replay",
        [](const std::string& payload, const std::string& algebra, const std::string& subcat, long long p,
           std::size_t bound) {
            auto c = make_config(algebra, subcat, p, bound, {});
            return run("replay", [&] {
                Json j;
                try {
                    j = Json::parse(payload);
                } catch (const nlohmann::json::exception& e) {
                    throw InputError(std::string("malformed payload: ") + e.what());
                }
                return cmd_replay(c, j);
            });
        },
        py::arg("payload"), py::arg("algebra") = "loop:2", py::arg("subcat") = "all", py::arg("p") = 2,
        py::arg("bound") = 9);

    m.def(
        "algebra",
        [](const std::string& spec, long long p) {
            if (p < 2) throw py::value_error("p must be a prime");
            try {
                return algebra_to_json(*algebra_from_spec(spec, static_cast<Scalar>(p))).dump();
            } catch (const InputError& e) {
                throw py::value_error(e.what());
            }
        },
        py::arg("spec"), py::arg("p") = 2);
}
