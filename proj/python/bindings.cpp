#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhecke/registry.hpp"

namespace py = pybind11;

namespace {

py::dict report_dict(const qhecke::VerifyReport& r) {
  py::dict d;
  d["identity"] = r.identity;
  d["ring"] = r.ring;
  d["order"] = r.order;
  d["status"] = qhecke::status_name(r.status);
  if (r.first_mismatch) {
    py::dict m;
    m["exponent"] = r.first_mismatch->exponent;
    m["lhs"] = r.first_mismatch->lhs;
    m["rhs"] = r.first_mismatch->rhs;
    d["first_mismatch"] = std::move(m);
  }
  if (r.status == qhecke::VerifyStatus::kError) d["error"] = r.error;
  d["elapsed_ms"] = r.elapsed_ms;
  return d;
}

qhecke::Exp resolve_order(const qhecke::Identity& id,
                          std::optional<qhecke::Exp> order) {
  return order ? *order : id.default_order;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact q-series verification kernel";
  m.attr("__version__") = "0.1.0";

  m.def(
      "list_identities",
      [] {
        py::list out;
        for (const auto& id : qhecke::registry()) {
          py::dict d;
          d["name"] = id.name;
          d["ring"] = id.ring;
          d["description"] = id.description;
          d["default_order"] = id.default_order;
          d["order_cap"] = id.order_cap;
          out.append(std::move(d));
        }
        return out;
      },
      "Registry rows: name, ring, description, default_order, order_cap.");

  m.def(
      "verify",
      [](const std::string& name, std::optional<qhecke::Exp> order) {
        const auto* id = qhecke::find_identity(name);
        if (!id) throw std::invalid_argument("unknown identity: " + name);
        return report_dict(qhecke::run_identity(name, resolve_order(*id, order)));
      },
      py::arg("name"), py::arg("order") = py::none(),
      "Verify one identity; order falls back to the registry default.");

  m.def(
      "verify_all",
      [](std::optional<qhecke::Exp> order) {
        py::list out;
        for (const auto& id : qhecke::registry())
          out.append(report_dict(qhecke::run_identity(id.name, resolve_order(id, order))));
        return out;
      },
      py::arg("order") = py::none(), "Verify every identity in registry order.");

  m.def(
      "series_table",
      [](const std::string& name, std::optional<qhecke::Exp> order,
         std::optional<qhecke::Exp> count) {
        const auto t = qhecke::series_table(name, order, count);
        std::vector<std::pair<qhecke::Exp, std::string>> rows;
        rows.reserve(t.rows.size());
        for (const auto& row : t.rows) rows.emplace_back(row.index, row.value);
        return rows;
      },
      py::arg("name"), py::arg("order") = py::none(),
      py::arg("count") = py::none(),
      "Rows of a named series as (index, value) pairs.");
}
