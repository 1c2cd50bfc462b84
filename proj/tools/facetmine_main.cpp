#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "facetmine/compressor.hpp"
#include "facetmine/facet_miner.hpp"
#include "facetmine/fimi.hpp"
#include "facetmine/row012e.hpp"
#include "facetmine/testkit.hpp"
#include "facetmine/vertical_layout.hpp"

namespace {

using facetmine::BigCount;
using facetmine::CompressedComplex;
using facetmine::ItemSet;
using facetmine::TransactionDb;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string command;
  std::string input_path;
  int min_support = 0;
  int k = -1;
  std::string set_spec;
  std::string format = "text";
  int universe_override = 0;
  std::string order_file;
  std::optional<std::uint64_t> seed;
};

std::string itemset_line(const ItemSet& x) {
  std::string out;
  for (int i : x.items()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
  }
  return out;
}

Json itemset_json(const ItemSet& x) { return Json(x.items()); }

Json row_json(const facetmine::Row012e& row) {
  Json groups = Json::array();
  for (const auto& g : row.egroups()) groups.push_back(g.items());
  return Json{{"ones", row.ones().items()},
              {"zeros", row.zeros().items()},
              {"dontcares", row.dontcares().items()},
              {"egroups", groups},
              {"count", row.cardinality().str()}};
}

void emit(const Json& payload) { std::cout << payload.dump(2) << "\n"; }

std::vector<ItemSet> sorted_canonically(std::vector<ItemSet> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

TransactionDb load_db(const Options& opt) {
  return facetmine::parse_transactions(facetmine::read_file(opt.input_path),
                                       opt.universe_override);
}

std::vector<ItemSet> mine(const TransactionDb& db, const Options& opt) {
  facetmine::FrequencyOracle oracle(db, facetmine::MiningConfig(opt.min_support));
  facetmine::MinerOptions miner;
  miner.shuffle_seed = opt.seed;
  return find_all_facets(oracle, miner);
}

/// Facet order for compression: discovery order, unless an order file gives
/// a permutation (the file must list exactly the mined facets).
std::vector<ItemSet> facet_order(const TransactionDb& db, const Options& opt,
                                 std::vector<ItemSet> mined) {
  if (opt.order_file.empty()) return mined;
  const auto given =
      facetmine::parse_transactions(facetmine::read_file(opt.order_file), db.universe().size())
          .transactions();
  if (sorted_canonically(given) != sorted_canonically(mined))
    throw std::invalid_argument("order file does not list exactly the mined facets");
  return given;
}

ItemSet parse_set_spec(const std::string& spec, const facetmine::Universe& universe) {
  ItemSet x(universe);
  std::istringstream in(spec);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int item = 0;
    try {
      item = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad item id in --set: '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("bad item id in --set: '" + token + "'");
    x.insert(item);  // throws out_of_range when outside 1..w
  }
  return x;
}

int run_facets(const Options& opt) {
  const auto db = load_db(opt);
  const auto facets = sorted_canonically(mine(db, opt));
  if (opt.format == "json") {
    Json out{{"universe", db.universe().size()}, {"alpha", opt.min_support}};
    Json list = Json::array();
    for (const auto& f : facets) list.push_back(itemset_json(f));
    out["facets"] = list;
    emit(out);
  } else {
    for (const auto& f : facets) std::cout << itemset_line(f) << "\n";
  }
  return kExitOk;
}

int run_compress(const Options& opt) {
  const auto db = load_db(opt);
  const auto facets = facet_order(db, opt, mine(db, opt));
  const auto compressed = facets_to_faces(facets, db.universe());
  if (opt.format == "json") {
    Json out{{"universe", db.universe().size()}, {"alpha", opt.min_support}};
    Json flist = Json::array();
    for (const auto& f : compressed.source_facets) flist.push_back(itemset_json(f));
    out["facets"] = flist;
    Json rows = Json::array();
    for (const auto& r : compressed.rows) rows.push_back(row_json(r));
    out["rows"] = rows;
    out["total"] = total_count(compressed).str();
    emit(out);
  } else {
    for (const auto& r : compressed.rows)
      std::cout << r.to_text() << "  " << r.cardinality().str() << "\n";
  }
  return kExitOk;
}

int run_count(const Options& opt) {
  const auto db = load_db(opt);
  const auto compressed =
      facets_to_faces(facet_order(db, opt, mine(db, opt)), db.universe());
  const BigCount total = total_count(compressed);
  if (opt.format == "json")
    emit(Json{{"universe", db.universe().size()},
              {"alpha", opt.min_support},
              {"total", total.str()}});
  else
    std::cout << total.str() << "\n";
  return kExitOk;
}

int run_count_k(const Options& opt) {
  const auto db = load_db(opt);
  const auto compressed =
      facets_to_faces(facet_order(db, opt, mine(db, opt)), db.universe());
  const BigCount count = count_faces_of_size(compressed, opt.k);
  if (opt.format == "json")
    emit(Json{{"universe", db.universe().size()},
              {"alpha", opt.min_support},
              {"k", opt.k},
              {"count", count.str()}});
  else
    std::cout << count.str() << "\n";
  return kExitOk;
}

int run_supersets(const Options& opt) {
  const auto db = load_db(opt);
  const ItemSet x = parse_set_spec(opt.set_spec, db.universe());
  const auto compressed =
      facets_to_faces(facet_order(db, opt, mine(db, opt)), db.universe());
  const BigCount count = count_supersets(compressed, x);
  if (opt.format == "json") {
    Json per_row = Json::array();
    for (const auto& r : compressed.rows) per_row.push_back(count_supersets(r, x).str());
    emit(Json{{"universe", db.universe().size()},
              {"alpha", opt.min_support},
              {"set", x.items()},
              {"count", count.str()},
              {"per_row", per_row}});
  } else {
    std::cout << count.str() << "\n";
  }
  return kExitOk;
}

int run_delta(const Options& opt) {
  const auto db = load_db(opt);
  const BigCount delta = facetmine::threshold_delta(db, opt.min_support);
  if (opt.format == "json")
    emit(Json{{"universe", db.universe().size()},
              {"alpha", opt.min_support},
              {"delta", delta.str()}});
  else
    std::cout << delta.str() << "\n";
  return kExitOk;
}

int run_maxsets(const Options& opt) {
  const auto db = load_db(opt);  // a set family uses the same flat format
  const auto indices = facetmine::max_sieve(db.transactions(), db.universe());
  if (opt.format == "json") {
    Json sets = Json::array();
    for (int j : indices) sets.push_back(itemset_json(db.transaction(j)));
    emit(Json{{"universe", db.universe().size()}, {"indices", indices}, {"maxsets", sets}});
  } else {
    for (int j : indices) std::cout << itemset_line(db.transaction(j)) << "\n";
  }
  return kExitOk;
}

int run_verify(const Options& opt) {
  const auto db = load_db(opt);
  const auto compressed =
      facets_to_faces(facet_order(db, opt, mine(db, opt)), db.universe());
  const auto reference = facetmine::brute_force_frequent(db, opt.min_support);
  const auto report = facetmine::verify_partition(compressed, reference);
  if (opt.format == "json") {
    Json out{{"universe", db.universe().size()}, {"alpha", opt.min_support}, {"ok", report.ok}};
    if (!report.ok) out["violation"] = report.reason;
    emit(out);
  } else {
    std::cout << (report.ok ? "ok" : "violation: " + report.reason) << "\n";
  }
  return report.ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Maximal-frequent-set mining and 012e-row compression"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd, bool mining) {
    cmd->add_option("input", opt.input_path, "transaction file (one transaction per line)")
        ->required();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--universe", opt.universe_override,
                    "universe size override (must cover every item id)")
        ->check(CLI::PositiveNumber);
    if (mining) {
      cmd->add_option("--min-support", opt.min_support, "support threshold alpha")
          ->required()
          ->check(CLI::PositiveNumber);
      cmd->add_option_function<std::uint64_t>(
          "--seed", [&opt](std::uint64_t s) { opt.seed = s; },
          "randomize the facet-extension order (result set is unchanged)");
    }
    return cmd;
  };
  const auto add_order_file = [&](CLI::App* cmd) {
    cmd->add_option("--order-file", opt.order_file,
                    "compress facets in this file's order (must equal the mined set)");
  };

  auto* facets_cmd = add_common(app.add_subcommand("facets", "list all maximal frequent sets"),
                                true);
  auto* compress_cmd = add_common(
      app.add_subcommand("compress", "emit the disjoint 012e-row compression"), true);
  add_order_file(compress_cmd);
  auto* count_cmd =
      add_common(app.add_subcommand("count", "total number of frequent sets"), true);
  add_order_file(count_cmd);
  auto* count_k_cmd = add_common(
      app.add_subcommand("count-k", "number of frequent sets of one cardinality"), true);
  count_k_cmd->add_option("--k", opt.k, "cardinality to count")->required();
  add_order_file(count_k_cmd);
  auto* supersets_cmd = add_common(
      app.add_subcommand("supersets", "number of frequent sets containing a given set"), true);
  supersets_cmd->add_option("--set", opt.set_spec, "items, e.g. \"7 8 9\"")->required();
  add_order_file(supersets_cmd);
  auto* delta_cmd = add_common(
      app.add_subcommand("delta", "frequent sets lost when alpha rises by one"), true);
  auto* maxsets_cmd = add_common(
      app.add_subcommand("maxsets", "maximal members of a set family (no threshold)"), false);
  auto* verify_cmd = add_common(
      app.add_subcommand("verify", "check the compression against brute force (w <= 20)"), true);
  (void)facets_cmd;
  (void)delta_cmd;
  (void)maxsets_cmd;
  (void)verify_cmd;

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  opt.command = app.get_subcommands().front()->get_name();
  try {
    if (opt.command == "facets") return run_facets(opt);
    if (opt.command == "compress") return run_compress(opt);
    if (opt.command == "count") return run_count(opt);
    if (opt.command == "count-k") return run_count_k(opt);
    if (opt.command == "supersets") return run_supersets(opt);
    if (opt.command == "delta") return run_delta(opt);
    if (opt.command == "maxsets") return run_maxsets(opt);
    if (opt.command == "verify") return run_verify(opt);
  } catch (const facetmine::ParseError& e) {
    std::cerr << "error: " << opt.input_path << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "error: unknown command\n";
  return kExitUsage;
}
