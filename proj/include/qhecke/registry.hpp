#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhecke/report.hpp"

namespace qhecke {

// One verifiable identity. run(order) rebuilds both sides and returns the
// first differing position, or nullopt on a perfect match. For most entries
// order is the q-truncation; for the finite-polynomial families it bounds
// the index range instead, as the description states.
struct Identity {
  std::string name;
  std::string ring;
  std::string description;
  Exp default_order = 0;
  Exp order_cap = 0;  // 0 is uncapped; otherwise the effective order is clamped
  std::function<std::optional<Mismatch>(Exp)> run;
};

const std::vector<Identity>& registry();
const Identity* find_identity(std::string_view name);

// Resolves the name, clamps the order against the entry's cap, times the
// run, and folds any exception into an error-status report.
VerifyReport run_identity(const std::string& name, Exp order);

struct TableRow {
  Exp index = 0;
  std::string value;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Table {
  std::string index_key;
  std::string value_key;
  std::vector<TableRow> rows;
};

// Coefficient rows for a named series (S, P1, T, U, V, gamma:R) or value
// rows for the pentagonal polynomial family DN. Exactly one of order
// (rows through that index) and count (that many rows) must be given.
Table series_table(const std::string& name, std::optional<Exp> order,
                   std::optional<Exp> count);

}  // namespace qhecke
