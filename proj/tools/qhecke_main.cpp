#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <mutex>
#include <optional>
#include <semaphore>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qhecke/registry.hpp"

namespace {

using qhecke::Exp;
using qhecke::VerifyReport;
using qhecke::VerifyStatus;

std::optional<Exp> env_default_order() {
  const char* v = std::getenv("QHECKE_DEFAULT_ORDER");
  if (v == nullptr) return std::nullopt;
  const std::string_view s(v);
  Exp n = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || p != s.data() + s.size() || n <= 0)
    throw std::invalid_argument("QHECKE_DEFAULT_ORDER must be a positive integer");
  return n;
}

// Points at stdout unless --out was given, in which case it owns the file.
struct Sink {
  std::ofstream file;
  std::ostream* out = &std::cout;

  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path);
    if (!file) {
      std::cerr << "error: cannot open " << path << " for writing\n";
      return false;
    }
    out = &file;
    return true;
  }
};

int cmd_verify(const std::string& name, bool all, std::optional<Exp> order, bool json,
               bool ordered, const std::string& out_path) {
  if (all == !name.empty()) {
    std::cerr << "error: pass exactly one of an identity name or --all\n";
    return 2;
  }
  if (!order) order = env_default_order();

  Sink sink;
  if (!sink.open(out_path)) return 2;
  std::mutex emit_mu;
  auto emit = [&](const VerifyReport& r) {
    const std::lock_guard<std::mutex> lock(emit_mu);
    *sink.out << (json ? report_to_json(r) : report_to_text(r)) << std::endl;
  };

  if (!all) {
    if (qhecke::find_identity(name) == nullptr) {
      std::cerr << "error: unknown identity: " << name << "\n";
      return 2;
    }
    auto r = qhecke::run_identity(
        name, order.value_or(qhecke::find_identity(name)->default_order));
    emit(r);
    return r.status == VerifyStatus::kMatch ? 0 : 1;
  }

  const auto& reg = qhecke::registry();
  std::counting_semaphore<64> slots(8);
  std::atomic<bool> all_match{true};
  std::vector<std::future<VerifyReport>> pending;
  pending.reserve(reg.size());
  for (const auto& id : reg) {
    pending.push_back(std::async(std::launch::async, [&, &id = id]() {
      slots.acquire();
      auto r = qhecke::run_identity(id.name, order.value_or(id.default_order));
      slots.release();
      if (r.status != VerifyStatus::kMatch) all_match = false;
      if (!ordered) emit(r);
      return r;
    }));
  }
  for (auto& f : pending) {
    auto r = f.get();
    if (ordered) emit(r);
  }
  return all_match ? 0 : 1;
}

int cmd_table(const std::string& name, std::optional<Exp> order,
              std::optional<Exp> count, const std::string& format,
              const std::string& out_path) {
  auto t = qhecke::series_table(name, order, count);
  Sink sink;
  if (!sink.open(out_path)) return 2;
  if (format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& row : t.rows)
      arr.push_back({{t.index_key, row.index}, {t.value_key, row.value}});
    *sink.out << arr.dump() << "\n";
  } else {
    for (const auto& row : t.rows) *sink.out << row.index << "," << row.value << "\n";
  }
  return 0;
}

int cmd_list(const std::string& out_path) {
  Sink sink;
  if (!sink.open(out_path)) return 2;
  size_t width = 0;
  for (const auto& id : qhecke::registry()) width = std::max(width, id.name.size());
  for (const auto& id : qhecke::registry())
    *sink.out << id.name << std::string(width - id.name.size(), ' ') << "  order "
              << id.default_order << "  [" << id.ring << "]  " << id.description
              << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coefficient-level verification of a two-variable Hecke-type "
               "identity family"};
  app.require_subcommand(1);

  std::string verify_name;
  bool all = false, json = false, ordered = false;
  long long verify_order = 0;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "rebuild both sides of an identity");
  verify->add_option("name", verify_name, "identity name, see `qhecke list`");
  verify->add_flag("--all", all, "verify every registry entry");
  verify->add_option("--order", verify_order, "truncation or index bound")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", json, "emit one JSON report per line");
  verify->add_flag("--ordered", ordered, "emit --all reports in registry order");
  verify->add_option("--out", verify_out, "write reports to this file");

  std::string table_name, table_format = "csv", table_out;
  long long table_order = 0, table_count = 0;
  auto* table = app.add_subcommand("table", "print coefficients of a named series");
  table->add_option("name", table_name, "S, P1, T, U, V, gamma:R, or DN")->required();
  auto* order_opt = table->add_option("--order", table_order, "rows through this index")
                        ->check(CLI::NonNegativeNumber);
  auto* count_opt = table->add_option("--count", table_count, "this many rows")
                        ->check(CLI::PositiveNumber);
  order_opt->excludes(count_opt);
  table->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", table_out, "write the table to this file");

  std::string list_out;
  auto* list = app.add_subcommand("list", "print the identity registry");
  list->add_option("--out", list_out, "write the listing to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed())
      return cmd_verify(verify_name, all,
                        verify->count("--order") ? std::optional<Exp>(verify_order)
                                                 : std::nullopt,
                        json, ordered, verify_out);
    if (table->parsed())
      return cmd_table(table_name,
                       table->count("--order") ? std::optional<Exp>(table_order)
                                               : std::nullopt,
                       table->count("--count") ? std::optional<Exp>(table_count)
                                               : std::nullopt,
                       table_format, table_out);
    return cmd_list(list_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
