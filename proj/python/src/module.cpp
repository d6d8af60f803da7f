// Copyright 2026 The gcl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gcl/attr_expr.hpp"
#include "gcl/classical.hpp"
#include "gcl/cli.hpp"
#include "gcl/context.hpp"
#include "gcl/error.hpp"
#include "gcl/export.hpp"
#include "gcl/gcl_lattice.hpp"
#include "gcl/oracle.hpp"

namespace py = pybind11;

namespace {

gcl::FormalContext parse(const std::string& text, const std::string& format) {
  if (format == "cxt") return gcl::parse_context(text, gcl::ContextFormat::kCxt);
  if (format == "csv") return gcl::parse_context(text, gcl::ContextFormat::kCsv);
  if (format == "auto") return gcl::parse_context_auto(text);
  throw gcl::InvalidArgument("unknown context format '" + format + "'");
}

std::string export_lattice(const gcl::FormalContext& ctx, const std::string& lattice,
                           const std::string& format) {
  const auto fmt = gcl::parse_export_format(format);
  if (lattice == "gcl") return gcl::export_lattice(gcl::build_gcl(ctx), fmt);
  if (lattice == "fcl") return gcl::export_lattice(gcl::build_fcl(ctx), ctx, fmt);
  if (lattice == "rsl") return gcl::export_lattice(gcl::build_rsl(ctx), ctx, fmt);
  throw gcl::InvalidArgument("unknown lattice kind '" + lattice + "'");
}

std::vector<std::string> names(const gcl::ObjectSet& x, const gcl::FormalContext& ctx) {
  std::vector<std::string> out;
  x.for_each([&](std::size_t g) { out.push_back(ctx.objects()[g]); });
  return out;
}

}  // namespace

PYBIND11_MODULE(_gcl, m) {
  m.doc() = "Concept lattices over generalised attributes";

  py::register_exception<gcl::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<gcl::CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<gcl::InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  py::class_<gcl::FormalContext>(m, "FormalContext")
      .def(py::init<std::vector<std::string>, std::vector<std::string>,
                    std::vector<std::vector<bool>>>(),
           py::arg("objects"), py::arg("attributes"), py::arg("rows"))
      .def_property_readonly("objects", &gcl::FormalContext::objects)
      .def_property_readonly("attributes", &gcl::FormalContext::attributes)
      .def("incident", &gcl::FormalContext::incident)
      .def("to_cxt", [](const gcl::FormalContext& c) { return gcl::write_cxt(c); })
      .def("to_csv", [](const gcl::FormalContext& c) { return gcl::write_csv(c); })
      .def("__eq__", [](const gcl::FormalContext& a, const gcl::FormalContext& b) {
        return a == b;
      });

  m.def("parse_context", &parse, py::arg("text"), py::arg("format") = "auto");
  m.def("random_context", &gcl::random_context, py::arg("seed"), py::arg("objects"),
        py::arg("attributes"), py::arg("density"));
  m.def("context_digest", &gcl::context_digest);
  m.def("export_lattice", &export_lattice, py::arg("context"),
        py::arg("lattice") = "gcl", py::arg("format") = "json");
  m.def("verify", [](const gcl::FormalContext& ctx) {
    const auto report = gcl::verify_all(ctx);
    return gcl::export_report(report, ctx, gcl::ExportFormat::kJson);
  });
  m.def("evaluate", [](const gcl::FormalContext& ctx, const std::string& expr) {
    return names(gcl::eval_contextual(gcl::parse_expr(expr, ctx.attributes()), ctx), ctx);
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = gcl::cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
