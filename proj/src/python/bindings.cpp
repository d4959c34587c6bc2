#include "dicrit/corpus/acceptance.hpp"
#include "dicrit/io/commands.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using dicrit::io::Json;

namespace {

// Errors come back as {"error": {...}} so the Python side can raise typed exceptions.
std::string run(const std::string& command, const std::string& action, const std::string& input,
                std::uint64_t seed, int max_depth, std::optional<int> bound, bool extend) {
    dicrit::io::Options opts;
    opts.seed = seed;
    opts.max_depth = max_depth;
    opts.bound = bound;
    opts.extend = extend ? dicrit::pencil::ExtensionPolicy::quadratic : dicrit::pencil::ExtensionPolicy::none;
    Json out;
    try {
        Json in = Json::parse(input);
        py::gil_scoped_release release;
        out = Json{{"result", dicrit::io::run_command(command, action, in, opts)}};
    } catch (const dicrit::Error& e) {
        out = Json{{"error", dicrit::io::error_to_json(e)}};
    } catch (const Json::parse_error& e) {
        out = Json{{"error", {{"kind", "ParseError"}, {"field", "input"}, {"reason", e.what()}}}};
    }
    return out.dump();
}

py::list acceptance(const std::string& dir) {
    std::vector<dicrit::acceptance::CriterionResult> results;
    {
        py::gil_scoped_release release;
        results = dicrit::acceptance::run_all(dir.empty() ? dicrit::acceptance::default_corpus_dir() : dir);
    }
    py::list out;
    for (const auto& r : results) {
        py::dict d;
        d["id"] = r.id;
        d["title"] = r.title;
        d["pass"] = r.pass;
        d["detail"] = r.detail;
        d["seconds"] = r.seconds;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_dicrit, m) {
    m.def("run", &run, py::arg("command"), py::arg("action"), py::arg("input"), py::arg("seed") = 0,
          py::arg("max_depth") = 24, py::arg("bound") = py::none(), py::arg("extend") = true);
    m.def("commands", [] { return dicrit::io::command_table(); });
    m.def("acceptance", &acceptance, py::arg("corpus_dir") = "");
    m.attr("__version__") = "0.1.0";
}
