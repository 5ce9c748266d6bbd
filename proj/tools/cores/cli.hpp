// Copyright 2026 The coreabacus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command dispatch for the `cores` tool. run_cli() never prints: it returns
// the exit code and both output streams so it can be tested in-process.
//
// Exit codes: 0 success, 1 a verification cell failed, 2 usage error or
// guard-rail breach, 3 internal invariant breach or ambiguous result.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coreabacus.hpp"
#include "cores/cache.hpp"

namespace cores {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

using coreabacus::CoreFamily;
using coreabacus::FamilyFilters;
using coreabacus::Partition;
using nlohmann::json;

inline std::string join_ints(const std::vector<std::int64_t>& xs, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0) out += sep;
    out += std::to_string(xs[k]);
  }
  return out;
}

inline std::string filters_key(const FamilyFilters& f) {
  return std::string("distinct=") + (f.distinct_parts ? "1" : "0") +
         "|self-conjugate=" + (f.self_conjugate ? "1" : "0");
}

inline json filters_json(const FamilyFilters& f) {
  json out = json::array();
  if (f.distinct_parts) out.push_back("distinct");
  if (f.self_conjugate) out.push_back("self-conjugate");
  return out;
}

inline std::string pretty(const json& j) { return j.dump(2) + "\n"; }

/// Left-aligned columns separated by two spaces, header underlined.
inline std::string render_table(const std::vector<std::string>& header,
                                const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out += "  ";
      out += cells[c];
      if (c + 1 < cells.size()) out += std::string(width[c] - cells[c].size(), ' ');
    }
    return out + "\n";
  };
  std::string out = line(header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  out += line(rule);
  for (const auto& row : rows) out += line(row);
  return out;
}

inline void require_budget(const std::vector<std::int64_t>& moduli) {
  const auto pair = coreabacus::choose_coprime_pair(moduli);
  if (!pair) return;  // reported by the enumerator itself
  const auto& rails = coreabacus::GuardRails::builtin();
  if (coreabacus::st_core_count_estimate(pair->first, pair->second) >
      static_cast<double>(rails.max_family_size)) {
    throw coreabacus::GuardRailError(
        "the (" + std::to_string(pair->first) + "," + std::to_string(pair->second) +
            ")-core family exceeds max_family_size " + std::to_string(rails.max_family_size),
        "use smaller moduli");
  }
}

inline CoreFamily filtered_family(const std::vector<std::int64_t>& moduli,
                                  const FamilyFilters& filters) {
  require_budget(moduli);
  CoreFamily family{moduli, filters, {}};
  coreabacus::for_each_multi_core_beadset(moduli, filters, [&](const coreabacus::BeadSet& x) {
    family.members.push_back(coreabacus::beadset_to_partition(x));
  });
  std::sort(family.members.begin(), family.members.end());
  return family;
}

template <typename Compute>
json cached(const ResultCache& cache, const std::string& key, Compute&& compute) {
  if (auto hit = cache.get(key)) return *hit;
  json payload = compute();
  cache.put(key, payload);
  return payload;
}

// --- renderers ------------------------------------------------------------

inline std::string render_family(const json& payload, const std::string& format) {
  if (format == "json") return pretty(payload);
  const json& parts = payload.at("partitions");
  if (format == "csv") {
    std::string out = "weight,length,partition\n";
    for (const auto& p : parts) {
      const Partition q = p.get<Partition>();
      out += std::to_string(q.weight()) + "," + std::to_string(q.length()) + ",\"" +
             coreabacus::to_string(q) + "\"\n";
    }
    return out;
  }
  std::vector<std::vector<std::string>> rows;
  std::size_t index = 0;
  for (const auto& p : parts) {
    const Partition q = p.get<Partition>();
    rows.push_back({std::to_string(++index), std::to_string(q.weight()),
                    std::to_string(q.length()), coreabacus::to_string(q)});
  }
  const json& meta = payload.at("metadata");
  return render_table({"#", "weight", "parts", "partition"}, rows) +
         std::to_string(meta.at("count").get<std::int64_t>()) + " cores\n";
}

inline std::string render_report(const json& report) {
  std::vector<std::vector<std::string>> rows;
  std::size_t failed = 0;
  for (const auto& cell : report.at("cells")) {
    const bool pass = cell.at("pass").get<bool>();
    failed += !pass;
    std::string result = pass ? "PASS" : "FAIL";
    if (cell.contains("status")) result += " " + cell.at("status").get<std::string>();
    if (cell.contains("m_squared_divides")) {
      result += cell.at("m_squared_divides").get<bool>() ? " m^2|w" : " m^2!|w";
    }
    rows.push_back({cell.at("params").dump(), cell.at("expected").dump(),
                    cell.at("observed").dump(), result});
  }
  std::string grid;
  for (const auto& [axis, range] : report.at("grid").items()) {
    if (!grid.empty()) grid += ",";
    grid += axis + "=" + std::to_string(range.at(0).get<std::int64_t>()) + ".." +
            std::to_string(range.at(1).get<std::int64_t>());
  }
  return "claim " + report.at("claim").get<std::string>() + " over " + grid + "\n" +
         render_table({"params", "expected", "observed", "result"}, rows) +
         std::to_string(rows.size()) + " cells, " + std::to_string(failed) + " failed\n";
}

inline bool report_passed(const json& report) {
  for (const auto& cell : report.at("cells")) {
    if (!cell.at("pass").get<bool>()) return false;
  }
  return true;
}

}  // namespace detail

inline CommandResult run_cli(std::vector<std::string> args) {
  using namespace detail;
  CommandResult result;
  std::ostringstream out;
  std::ostringstream err;

  CLI::App app{"Simultaneous core partitions on the abacus", "cores"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(coreabacus::kToolVersion));
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "Neither read nor write the result cache");

  const auto formats = [](std::vector<std::string> allowed) {
    return CLI::IsMember(std::move(allowed));
  };

  // show
  std::string show_name;
  std::int64_t show_s = 0;
  std::int64_t show_m = 1;
  std::string show_format = "text";
  auto* show = app.add_subcommand("show", "Render a named construction as an abacus");
  show->add_option("name", show_name, "A, B0, B1, C0, C1, E-, E+ or L")
      ->required()
      ->check(CLI::IsMember({"A", "B0", "B1", "C0", "C1", "E-", "E+", "L"}));
  show->add_option("--s", show_s, "Modulus s")->required();
  show->add_option("--m", show_m, "Block count m (E-, E+, L)");
  show->add_option("--format", show_format, "text or json")->check(formats({"text", "json"}));

  // enumerate / count
  std::vector<std::int64_t> moduli;
  bool distinct = false;
  bool self_conjugate = false;
  std::string family_format = "table";
  auto* enumerate = app.add_subcommand("enumerate", "List every simultaneous core");
  auto* count = app.add_subcommand("count", "Count simultaneous cores");
  for (auto* sub : {enumerate, count}) {
    sub->add_option("--moduli", moduli, "Core moduli a,b[,c]")->required()->delimiter(',');
    sub->add_flag("--distinct", distinct, "Only partitions with distinct parts");
    sub->add_flag("--self-conjugate", self_conjugate, "Only self-conjugate partitions");
  }
  enumerate->add_option("--format", family_format, "json, csv or table")
      ->check(formats({"json", "csv", "table"}));
  std::string count_format = "text";
  count->add_option("--format", count_format, "text or json")->check(formats({"text", "json"}));

  // verify
  std::string claim;
  std::string grid_text;
  std::string verify_format = "table";
  std::string rails_path;
  unsigned workers = 0;
  auto* verify = app.add_subcommand("verify", "Check a claim over a parameter grid");
  verify->add_option("--claim", claim, "Claim id")->required();
  verify->add_option("--grid", grid_text, "Grid such as s=1..6,m=1..3");
  verify->add_option("--format", verify_format, "table or json")
      ->check(formats({"table", "json"}));
  verify->add_option("--guard-rails", rails_path, "Guard-rail JSON file")
      ->check(CLI::ExistingFile);
  verify->add_option("--workers", workers, "Worker threads (0 = all cores)");

  // maximal
  std::int64_t max_s = 0;
  std::int64_t max_t = 0;
  std::string max_format = "text";
  auto* maximal = app.add_subcommand("maximal", "Maximal-weight (s,t)-cores");
  maximal->add_option("--s", max_s, "Modulus s")->required();
  maximal->add_option("--t", max_t, "Modulus t")->required();
  maximal->add_option("--format", max_format, "text or json")->check(formats({"text", "json"}));

  // longest
  std::int64_t long_s = 0;
  std::int64_t long_m = 0;
  std::string long_format = "text";
  auto* longest = app.add_subcommand("longest", "Longest (s, ms-1, ms+1)-core");
  longest->add_option("--s", long_s, "Modulus s")->required();
  longest->add_option("--m", long_m, "Multiplier m")->required();
  longest->add_option("--format", long_format, "text or json")->check(formats({"text", "json"}));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    result.exit_code = app.exit(e, out, err) == 0 ? 0 : 2;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  const ResultCache cache(no_cache ? std::nullopt : ResultCache::default_dir());
  try {
    if (*show) {
      const auto a = coreabacus::build_named(show_name, show_s, show_m);
      const Partition p = coreabacus::beadset_to_partition(a.beads());
      if (show_format == "json") {
        out << pretty({{"name", show_name},
                       {"s", show_s},
                       {"m", show_m},
                       {"runners", a.runners()},
                       {"beads", a.beads()},
                       {"partition", p},
                       {"weight", p.weight()}});
      } else {
        out << coreabacus::render_abacus(a, show_s - 1);
      }
    } else if (*enumerate || *count) {
      const FamilyFilters filters{distinct, self_conjugate};
      const std::string key = std::string(*enumerate ? "enumerate" : "count") +
                              "|moduli=" + join_ints(moduli, ",") + "|" + filters_key(filters);
      if (*enumerate) {
        const json payload = cached(cache, key, [&] {
          return coreabacus::family_to_json(filtered_family(moduli, filters));
        });
        out << render_family(payload, family_format);
      } else {
        const json payload = cached(cache, key, [&]() -> json {
          require_budget(moduli);
          return {{"moduli", moduli},
                  {"filters", filters_json(filters)},
                  {"count", coreabacus::count_cores(moduli, filters)}};
        });
        if (count_format == "json") {
          out << pretty(payload);
        } else {
          out << payload.at("count").get<std::int64_t>() << "\n";
        }
      }
    } else if (*verify) {
      std::optional<coreabacus::Grid> grid;
      if (!grid_text.empty()) grid = coreabacus::parse_grid(grid_text);
      const coreabacus::GuardRails rails = rails_path.empty()
                                               ? coreabacus::GuardRails::builtin()
                                               : coreabacus::GuardRails::load(rails_path);
      const auto& def = coreabacus::find_claim(claim);
      const coreabacus::Grid resolved = coreabacus::resolve_grid(def, grid, rails);
      const std::string key = "verify|claim=" + claim + "|grid=" +
                              coreabacus::grid_to_string(resolved) + "|rails=" + rails.version +
                              "|max_family_size=" + std::to_string(rails.max_family_size);
      const bool custom_rails = !rails_path.empty();
      const auto compute = [&] {
        return coreabacus::verify_claim(claim, resolved, rails, workers).to_json();
      };
      const json report = custom_rails ? compute() : cached(cache, key, compute);
      out << (verify_format == "json" ? pretty(report) : render_report(report));
      if (!report_passed(report)) result.exit_code = 1;
    } else if (*maximal) {
      const std::string key =
          "maximal|s=" + std::to_string(max_s) + "|t=" + std::to_string(max_t);
      const json payload = cached(cache, key, [&]() -> json {
        require_budget({max_s, max_t});
        const CoreFamily family = coreabacus::enumerate_st_cores(max_s, max_t);
        return {{"s", max_s},
                {"t", max_t},
                {"max_weight", family.max_weight()},
                {"members", coreabacus::maximal_members(family)}};
      });
      if (max_format == "json") {
        out << pretty(payload);
      } else {
        for (const auto& p : payload.at("members")) {
          out << "weight " << payload.at("max_weight").get<std::int64_t>() << ": "
              << coreabacus::to_string(p.get<Partition>()) << "\n";
        }
      }
    } else if (*longest) {
      if (long_s < 1 || long_m < 1) throw coreabacus::PreconditionError("s and m must be positive");
      const std::vector<std::int64_t> mods{long_s, long_m * long_s - 1, long_m * long_s + 1};
      if (mods[1] < 1) throw coreabacus::PreconditionError("ms-1 must be positive");
      const std::string key =
          "longest|s=" + std::to_string(long_s) + "|m=" + std::to_string(long_m);
      const json payload = cached(cache, key, [&]() -> json {
        require_budget(mods);
        const Partition p = coreabacus::longest_member(coreabacus::enumerate_multi_cores(mods));
        return {{"moduli", mods}, {"parts", p.length()}, {"weight", p.weight()}, {"partition", p}};
      });
      if (long_format == "json") {
        out << pretty(payload);
      } else {
        out << payload.at("parts").get<std::int64_t>() << " parts, weight "
            << payload.at("weight").get<std::int64_t>() << ": "
            << coreabacus::to_string(payload.at("partition").get<Partition>()) << "\n";
      }
    }
  } catch (const coreabacus::GuardRailError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 2;
  } catch (const coreabacus::PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = 2;
  } catch (const coreabacus::AmbiguityError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& t : e.tied()) err << "  " << t << "\n";
    result.exit_code = 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    result.exit_code = 3;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace cores
