#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kci/errors.hpp"
#include "kci/io.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Koszul support varieties and complete intersection witnesses";

  static py::exception<kci::Error> error(m, "KciError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const kci::Error& e) {
      py::object exc = py::handle(error.ptr())(e.what());
      exc.attr("code") = std::string(kci::error_code_name(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.attr("__version__") = kci::kVersion;
  m.def("commands", [] { return std::vector<std::string>(std::begin(kci::kCommands), std::end(kci::kCommands)); });

  m.def(
      "run",
      [](const std::string& command, const std::string& job_text, std::optional<int> n_bound,
         std::optional<int> smax) {
        kci::JobSpec job = kci::parse_input(job_text);
        job.command = command;
        if (n_bound) job.n_bound = n_bound;
        if (smax) job.smax = smax;
        py::gil_scoped_release release;
        return kci::run_command(job);
      },
      py::arg("command"), py::arg("job_text"), py::arg("N") = py::none(), py::arg("smax") = py::none(),
      "Runs one command on a job file's text and returns the JSON report.");

  m.def(
      "canonical_job", [](const std::string& text) { return kci::print_job(kci::parse_input(text)); },
      py::arg("job_text"), "Parses a job and prints it in canonical form.");

  m.def("exit_status", [](const std::string& code) {
    for (int c = 0; c <= static_cast<int>(kci::ErrorCode::TooManyVariables); ++c)
      if (kci::error_code_name(static_cast<kci::ErrorCode>(c)) == code)
        return kci::exit_status(static_cast<kci::ErrorCode>(c));
    return 1;
  });
}
