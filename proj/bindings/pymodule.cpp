#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "facetmine/compressor.hpp"
#include "facetmine/facet_miner.hpp"
#include "facetmine/fimi.hpp"
#include "facetmine/row012e.hpp"
#include "facetmine/testkit.hpp"
#include "facetmine/vertical_layout.hpp"

namespace py = pybind11;
using namespace facetmine;

namespace {

/// Counts routinely exceed 64 bits, so they cross the boundary as exact
/// Python ints built from the decimal form.
py::int_ to_py_int(const BigCount& value) {
  const std::string digits = value.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (obj == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

ItemSet to_itemset(const std::vector<int>& items, const Universe& universe) {
  return ItemSet(universe, items);
}

std::vector<std::vector<int>> to_lists(const std::vector<ItemSet>& sets) {
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.items());
  return out;
}

std::vector<ItemSet> to_itemsets(const std::vector<std::vector<int>>& lists, int universe_size) {
  const Universe universe(universe_size);
  std::vector<ItemSet> out;
  out.reserve(lists.size());
  for (const auto& l : lists) out.emplace_back(universe, l);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maximal-frequent-set mining and 012e-row compression";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<TransactionDb>(m, "TransactionDb")
      .def_property_readonly("universe",
                             [](const TransactionDb& db) { return db.universe().size(); })
      .def_property_readonly("transaction_count", &TransactionDb::transaction_count)
      .def("transactions", [](const TransactionDb& db) { return to_lists(db.transactions()); })
      .def("__repr__", [](const TransactionDb& db) {
        return "TransactionDb(universe=" + std::to_string(db.universe().size()) +
               ", transactions=" + std::to_string(db.transaction_count()) + ")";
      });

  py::class_<Row012e>(m, "Row012e")
      .def_static(
          "from_text",
          [](const std::string& text, int universe) {
            return Row012e::from_text(text, Universe(universe));
          },
          py::arg("text"), py::arg("universe"))
      .def_property_readonly("universe",
                             [](const Row012e& r) { return r.universe().size(); })
      .def_property_readonly("ones", [](const Row012e& r) { return r.ones().items(); })
      .def_property_readonly("zeros", [](const Row012e& r) { return r.zeros().items(); })
      .def_property_readonly("dontcares", [](const Row012e& r) { return r.dontcares().items(); })
      .def_property_readonly("egroups", [](const Row012e& r) { return to_lists(r.egroups()); })
      .def("to_text", &Row012e::to_text)
      .def("cardinality", [](const Row012e& r) { return to_py_int(r.cardinality()); })
      .def(
          "contains",
          [](const Row012e& r, const std::vector<int>& items) {
            return r.contains(to_itemset(items, r.universe()));
          },
          py::arg("items"))
      .def("__eq__", [](const Row012e& a, const Row012e& b) { return a == b; })
      .def("__repr__", [](const Row012e& r) { return "Row012e('" + r.to_text() + "')"; });

  py::class_<CompressedComplex>(m, "CompressedComplex")
      .def_property_readonly("universe",
                             [](const CompressedComplex& c) { return c.universe.size(); })
      .def_property_readonly("rows", [](const CompressedComplex& c) { return c.rows; })
      .def_property_readonly("source_facets",
                             [](const CompressedComplex& c) { return to_lists(c.source_facets); })
      .def("total_count", [](const CompressedComplex& c) { return to_py_int(total_count(c)); })
      .def(
          "count_faces_of_size",
          [](const CompressedComplex& c, int k) { return to_py_int(count_faces_of_size(c, k)); },
          py::arg("k"))
      .def(
          "count_supersets",
          [](const CompressedComplex& c, const std::vector<int>& items) {
            return to_py_int(count_supersets(c, to_itemset(items, c.universe)));
          },
          py::arg("items"))
      .def("__repr__", [](const CompressedComplex& c) {
        return "CompressedComplex(universe=" + std::to_string(c.universe.size()) +
               ", rows=" + std::to_string(c.rows.size()) + ")";
      });

  m.def(
      "parse_transactions",
      [](const std::string& text, int universe) { return parse_transactions(text, universe); },
      py::arg("text"), py::arg("universe") = 0,
      "Parse the flat one-transaction-per-line format.");

  m.def(
      "mine_facets",
      [](const TransactionDb& db, int alpha, std::optional<std::uint64_t> seed) {
        FrequencyOracle oracle(db, MiningConfig(alpha));
        MinerOptions options;
        options.shuffle_seed = seed;
        return to_lists(find_all_facets(oracle, options));
      },
      py::arg("db"), py::arg("alpha"), py::arg("seed") = std::nullopt,
      "All maximal frequent sets, in discovery order.");

  m.def(
      "facets_to_faces",
      [](const std::vector<std::vector<int>>& facets, int universe) {
        return facets_to_faces(to_itemsets(facets, universe), Universe(universe));
      },
      py::arg("facets"), py::arg("universe"),
      "Compress an ordered facet list into disjoint 012e-rows.");

  m.def(
      "support",
      [](const TransactionDb& db, const std::vector<int>& items) {
        return support(db, to_itemset(items, db.universe()));
      },
      py::arg("db"), py::arg("items"), "Number of transactions containing the set.");

  m.def(
      "threshold_delta",
      [](const TransactionDb& db, int alpha) { return to_py_int(threshold_delta(db, alpha)); },
      py::arg("db"), py::arg("alpha"),
      "How many alpha-frequent sets are not (alpha+1)-frequent.");

  m.def(
      "max_sieve",
      [](const std::vector<std::vector<int>>& family, int universe) {
        return max_sieve(to_itemsets(family, universe), Universe(universe));
      },
      py::arg("family"), py::arg("universe"),
      "1-based indices of the inclusion-maximal members, ascending.");

  m.def(
      "min_sieve",
      [](const std::vector<std::vector<int>>& family, int universe) {
        return min_sieve(to_itemsets(family, universe), Universe(universe));
      },
      py::arg("family"), py::arg("universe"),
      "1-based indices of the inclusion-minimal members, ascending.");

  m.def(
      "minimal_transversals",
      [](const std::vector<std::vector<int>>& edges, int universe) {
        return to_lists(
            minimal_transversals(Hypergraph(Universe(universe), to_itemsets(edges, universe))));
      },
      py::arg("edges"), py::arg("universe"),
      "All inclusion-minimal sets meeting every edge, in canonical order.");

  m.def(
      "brute_force_frequent",
      [](const TransactionDb& db, int alpha) { return to_lists(brute_force_frequent(db, alpha)); },
      py::arg("db"), py::arg("alpha"), "Oracle enumeration of every frequent set (w <= 20).");

  m.def(
      "verify_partition",
      [](const CompressedComplex& c, const std::vector<std::vector<int>>& reference) {
        const auto report = verify_partition(c, to_itemsets(reference, c.universe.size()));
        return py::make_tuple(report.ok, report.reason);
      },
      py::arg("compressed"), py::arg("reference"),
      "(ok, reason): disjoint-cover check against an explicit family (w <= 20).");
}
