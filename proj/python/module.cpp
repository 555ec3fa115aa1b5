#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "cchw/clans.hpp"
#include "cchw/emit.hpp"
#include "cchw/fixtures.hpp"
#include "cchw/typeb.hpp"

namespace py = pybind11;
using namespace cchw;

namespace {

HermitianDatum datum_for(const std::string& group, int rank, int split) {
  if (group == "e6") return build_hermitian(GroupKind::E6, 6);
  if (group == "e7") return build_hermitian(GroupKind::E7, 7);
  if (group == "so") return build_hermitian(GroupKind::SO_ODD, rank);
  if (group == "sp") return build_hermitian(GroupKind::SP, rank);
  if (group == "so-even") return build_hermitian(GroupKind::SO_EVEN, rank);
  if (group == "so-star") return build_hermitian(GroupKind::SO_STAR, rank);
  if (group == "su") return build_hermitian(GroupKind::SU, rank, split);
  throw std::invalid_argument("unknown group '" + group + "'");
}

py::dict cc_dict(const HermitianDatum& hd, const WeylElement& w) {
  auto cc = characteristic_cycle(hd, w);
  auto ltc = leading_term_cycle(hd, w);
  auto dump = [&](const std::vector<CcTerm>& terms) {
    py::list out;
    for (const auto& t : terms) {
      py::dict d;
      d["index"] = t.index + 1;
      d["multiplicity"] = t.multiplicity;
      d["mu_rank"] = mu_rank(hd, hd.script_w[t.index]);
      out.append(d);
    }
    return out;
  };
  py::dict r;
  r["provenance"] = cc.provenance;
  r["cc"] = dump(cc.terms);
  r["ltc"] = dump(ltc.terms);
  return r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Characteristic cycles and leading term cycles of highest weight "
      "Harish-Chandra modules, by exact combinatorial computation.";

  m.attr("REFERENCE_VERSION") = fixtures::kReferenceVersion;

  m.def(
      "script_w",
      [](const std::string& group, int rank, int split) {
        auto hd = datum_for(group, rank, split);
        py::list out;
        for (const auto& w : hd.script_w) {
          py::dict d;
          d["word"] = w.reduced_word();
          d["length"] = w.length();
          d["tau"] = w.tau();
          d["mu_rank"] = mu_rank(hd, w);
          out.append(d);
        }
        return out;
      },
      py::arg("group"), py::arg("rank") = 0, py::arg("split") = 0,
      "The highest weight parameter set, in the canonical order, with reduced "
      "words, lengths, tau-invariants and moment-map ranks.");

  m.def(
      "possible_cc",
      [](const std::string& group, int rank, int split) {
        auto hd = datum_for(group, rank, split);
        py::list out;
        for (const auto& w : hd.script_w) {
          py::list row;
          for (int y : possible_cc(hd, w)) row.append(y + 1);
          out.append(row);
        }
        return out;
      },
      py::arg("group"), py::arg("rank") = 0, py::arg("split") = 0);

  m.def(
      "cc",
      [](const std::string& group, int index, int rank, int split) {
        auto hd = datum_for(group, rank, split);
        if (index < 1 || index > static_cast<int>(hd.script_w.size()))
          throw std::out_of_range("index");
        return cc_dict(hd, hd.script_w[index - 1]);
      },
      py::arg("group"), py::arg("index"), py::arg("rank") = 0, py::arg("split") = 0,
      "Characteristic and leading term cycle of the index-th parameter "
      "(1-based, canonical order). For Sp use cc_clan.");

  m.def(
      "cc_so",
      [](int n, int k, const std::string& sign) {
        auto hd = build_hermitian(GroupKind::SO_ODD, n);
        auto w = build_wk(hd, k, sign == "+" ? Sign::PLUS : Sign::MINUS);
        return cc_dict(hd, w);
      },
      py::arg("n"), py::arg("k"), py::arg("sign"));

  m.def(
      "cc_clan",
      [](const std::string& clan) {
        Clan c = parse_clan(clan);
        py::dict r;
        r["parameter"] = format_clan(c);
        r["provenance"] = "clan-algorithm";
        r["h_vector"] = h_vector(c);
        r["geometric_cell"] = geometric_cell(c);
        auto js = j_set(c);
        r["j_set"] = std::vector<int>(js.begin(), js.end());
        py::list terms, lterms;
        for (const auto& d : d_set_closed(c)) terms.append(format_clan(d));
        for (const auto& d : ltc_terms(c)) lterms.append(format_clan(d));
        r["cc"] = terms;
        r["ltc"] = lterms;
        r["irreducible"] = is_cc_irreducible(c);
        return r;
      },
      py::arg("clan"));

  m.def("h_vector", [](const std::string& s) { return h_vector(parse_clan(s)); });
  m.def("geometric_cell", [](const std::string& s) { return geometric_cell(parse_clan(s)); });
  m.def("j_set", [](const std::string& s) {
    auto js = j_set(parse_clan(s));
    return std::vector<int>(js.begin(), js.end());
  });
  m.def("d_set", [](const std::string& s) {
    py::list out;
    for (const auto& d : d_set_closed(parse_clan(s))) out.append(format_clan(d));
    return out;
  });
  m.def("is_cc_irreducible", [](const std::string& s) { return is_cc_irreducible(parse_clan(s)); });

  m.def(
      "count_irreducible",
      [](int n, bool enumerate) {
        BigInt v = enumerate ? count_irreducible(n) : path_count_total(n, true);
        return v.str();
      },
      py::arg("n"), py::arg("enumerate") = false,
      "N(n) as a decimal string (exact; enumeration capped at n = 30).");
  m.def(
      "count_by_cell",
      [](int n, int j, bool restricted) { return path_count_oracle(n, j, restricted).str(); },
      py::arg("n"), py::arg("j"), py::arg("restricted") = true);
  m.def("asymptotic_ratio", [](int l) { return static_cast<double>(asymptotic_ratio(l)); });

  m.def(
      "tables_clean",
      [](const std::string& group) {
        auto hd = datum_for(group, 0, 0);
        py::dict r;
        py::list diffs;
        for (const auto& d : diff_data_table(hd)) {
          py::dict e;
          e["cell"] = d.table + ":" + d.cell;
          e["computed"] = d.computed;
          e["reference"] = d.reference;
          e["known_erratum"] = d.known_erratum;
          diffs.append(e);
        }
        r["diffs"] = diffs;
        r["tab_table_clean"] = diff_tab_table(hd).empty();
        return r;
      },
      py::arg("group"), "Regenerate the reference tables and report the diffs.");

  m.def(
      "eliminate_all_irreducible",
      [](const std::string& group) {
        auto hd = datum_for(group, 0, 0);
        auto st = eliminate(build_candidate_table(hd));
        return st.all_off_diagonal_zero();
      },
      py::arg("group"));

  m.def(
      "verify_so_lemmas",
      [](int n) {
        py::dict r;
        auto rep = verify_lemma_b1(n);
        r["checks"] = rep.checks;
        r["mismatches"] = rep.mismatches;
        if (n >= 3) {
          auto t = verify_t_lemma(n);
          r["t_checks"] = t.checks;
          r["t_mismatches"] = t.mismatches;
        }
        return r;
      },
      py::arg("n"));

  m.def(
      "verify_slice",
      [](int n, int samples, uint64_t seed) {
        auto rep = verify_slice(n, samples, seed);
        py::dict r;
        r["samples"] = rep.samples;
        r["on_quadric"] = rep.on_quadric;
        r["members"] = rep.members;
        r["mismatches_closed"] = rep.mismatches_closed;
        r["mismatches_single"] = rep.mismatches_single;
        r["ok"] = rep.ok();
        return r;
      },
      py::arg("n"), py::arg("samples") = 200, py::arg("seed") = 7);

  m.attr("__all__") = py::make_tuple(
      "REFERENCE_VERSION", "script_w", "possible_cc", "cc", "cc_so", "cc_clan", "h_vector",
      "geometric_cell", "j_set", "d_set", "is_cc_irreducible", "count_irreducible",
      "count_by_cell", "asymptotic_ratio", "tables_clean", "eliminate_all_irreducible",
      "verify_so_lemmas", "verify_slice");
}
