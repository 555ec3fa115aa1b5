// cchw: characteristic cycles and leading term cycles of highest weight
// Harish-Chandra modules for the simple hermitian-type groups.
//
// Exit codes: 0 pass, 1 check or diff failure, 2 usage error.
// Payloads go to stdout and are byte-stable for a fixed command, convention
// version, and seed; timings go to stderr.

#include <chrono>
#include <iostream>
#include <set>
#include <unordered_set>

#include "CLI11.hpp"
#include "json.hpp"

#include "cchw/clans.hpp"
#include "cchw/emit.hpp"
#include "cchw/fixtures.hpp"
#include "cchw/typeb.hpp"

using namespace cchw;
using nlohmann::ordered_json;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cerr << "elapsed: " << ms << " ms\n";
  }
};

ordered_json report_header(const std::string& command) {
  ordered_json j;
  j["command"] = command;
  j["convention"] = fixtures::kReferenceVersion;
  return j;
}

int run_tables(const std::string& group, const std::string& fmt_name) {
  Timer timer;
  OutputFormat fmt = parse_format(fmt_name);
  auto hd = build_hermitian(group == "e6" ? GroupKind::E6 : GroupKind::E7,
                            group == "e6" ? 6 : 7);
  auto rows = compute_data_table(hd);
  auto tab = tab_table(hd);
  auto diffs = diff_data_table(hd);
  auto tdiffs = diff_tab_table(hd);
  diffs.insert(diffs.end(), tdiffs.begin(), tdiffs.end());

  if (fmt == OutputFormat::JSON) {
    ordered_json j = report_header("tables " + group);
    j["data_table"] = ordered_json::parse(emit_data_table(rows, group, OutputFormat::JSON));
    j["wall_crossing"] = ordered_json::parse(emit_tab_table(tab, group, OutputFormat::JSON));
    auto& dd = j["diffs"];
    dd = ordered_json::array();
    for (const auto& d : diffs)
      dd.push_back({{"cell", d.table + ":" + d.cell},
                    {"computed", d.computed},
                    {"reference", d.reference},
                    {"known_erratum", d.known_erratum}});
    j["clean"] = diffs.empty();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << emit_data_table(rows, group, fmt);
    std::cout << emit_tab_table(tab, group, fmt);
    for (const auto& d : diffs)
      std::cout << "diff " << d.table << " " << d.cell << ": computed " << d.computed
                << " vs reference " << d.reference
                << (d.known_erratum ? " [known erratum]" : "") << "\n";
  }
  return diffs.empty() ? 0 : 1;
}

ordered_json cc_payload(const HermitianDatum& hd, const WeylElement& w) {
  auto cc = characteristic_cycle(hd, w);
  auto ltc = leading_term_cycle(hd, w);
  ordered_json j;
  j["provenance"] = cc.provenance;
  auto dump_terms = [&](const std::vector<CcTerm>& terms) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : terms)
      arr.push_back({{"index", t.index + 1},
                     {"multiplicity", t.multiplicity},
                     {"mu_rank", mu_rank(hd, hd.script_w[t.index])}});
    return arr;
  };
  j["cc"] = dump_terms(cc.terms);
  j["ltc"] = dump_terms(ltc.terms);
  if (!cc.residual.empty()) {
    ordered_json arr = ordered_json::array();
    for (int y : cc.residual) arr.push_back(y + 1);
    j["residual_candidates"] = arr;
  }
  return j;
}

int run_cc_weyl(const std::string& command, const HermitianDatum& hd, int index) {
  if (index < 1 || index > static_cast<int>(hd.script_w.size()))
    throw std::invalid_argument("index out of range (1.." +
                                std::to_string(hd.script_w.size()) + ")");
  Timer timer;
  ordered_json j = report_header(command);
  j["index"] = index;
  j.update(cc_payload(hd, hd.script_w[index - 1]));
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_cc_so(int n, int k, const std::string& sign_name) {
  if (sign_name != "+" && sign_name != "-")
    throw std::invalid_argument("--sign expects + or -");
  Sign sign = sign_name == "+" ? Sign::PLUS : Sign::MINUS;
  Timer timer;
  auto hd = build_hermitian(GroupKind::SO_ODD, n);
  auto w = build_wk(hd, k, sign);
  ordered_json j = report_header("cc so");
  j["parameter"] = {{"n", n}, {"k", k}, {"sign", sign_name}};
  j.update(cc_payload(hd, w));
  ordered_json labels = ordered_json::array();
  for (const auto& [p, m] : cc_so(n, k, sign))
    labels.push_back(
        {{"k", p.k}, {"sign", p.sign == Sign::PLUS ? "+" : "-"}, {"multiplicity", m}});
  j["cc_labels"] = labels;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_cc_sp(const std::string& clan_str) {
  Timer timer;
  Clan c = parse_clan(clan_str);
  ordered_json j = report_header("cc sp");
  j["parameter"] = format_clan(c);
  j["provenance"] = "clan-algorithm";
  j["h_vector"] = h_vector(c);
  j["geometric_cell"] = geometric_cell(c);
  ordered_json jc = ordered_json::array();
  for (int v : j_set(c)) jc.push_back(v);
  j["j_set"] = jc;
  auto dump = [&](const std::set<Clan>& terms) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : terms)
      arr.push_back({{"clan", format_clan(d)},
                     {"multiplicity", 1},
                     {"geometric_cell", geometric_cell(d)}});
    return arr;
  };
  j["cc"] = dump(d_set_closed(c));
  j["ltc"] = dump(ltc_terms(c));
  j["irreducible"] = is_cc_irreducible(c);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_count(int n, bool by_cell, int max_enum) {
  Timer timer;
  if (n < 1) throw std::invalid_argument("count: need n >= 1");
  ordered_json j = report_header("count " + std::to_string(n));
  bool enumerated = n <= max_enum && n <= 30;
  BigInt total = path_count_total(n, true);
  j["n"] = n;
  j["value"] = total.str();
  j["method"] = enumerated ? "enumeration+recurrence" : "recurrence";
  if (enumerated) {
    BigInt direct = count_irreducible(n);
    j["cross_method_agreement"] = direct == total;
    if (direct != total) {
      std::cout << j.dump(2) << "\n";
      return 1;
    }
  }
  if (n % 2 == 0)
    j["closed_form_match"] = total == binomial(n + 1, n / 2);
  else
    j["closed_form_match"] = total == 2 * binomial(n, (n - 1) / 2);
  if (by_cell) {
    ordered_json cells = ordered_json::array();
    for (int cell = 0; cell <= n; ++cell)
      cells.push_back(
          {{"n", n}, {"j", cell}, {"count", path_count_oracle(n, cell, true).str()}});
    j["by_cell"] = cells;
  }
  bool ok = j["closed_form_match"].get<bool>();
  std::cout << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

int verify_bruhat(int nmax, ordered_json& out) {
  auto oracle = [](const WeylElement& w) {
    std::unordered_set<WeylElement, WeylElementHash> s;
    s.insert(WeylElement::identity(w.root_system()));
    for (int letter : w.reduced_word()) {
      auto next = s;
      for (const auto& u : s) next.insert(u.times_simple(letter));
      s = std::move(next);
    }
    return s;
  };
  int mismatches = 0, checks = 0;
  auto run_group = [&](const HermitianDatum& hd) {
    for (const auto& w : hd.script_w) {
      auto interval = oracle(w);
      for (const auto& y : hd.script_w) {
        ++checks;
        if (bruhat_leq(y, w) != (interval.count(y) > 0)) ++mismatches;
      }
    }
  };
  run_group(build_hermitian(GroupKind::E6, 6));
  for (int n = 2; n <= nmax; ++n) run_group(build_hermitian(GroupKind::SO_ODD, n));
  out["checks"] = checks;
  out["mismatches"] = mismatches;
  return mismatches == 0 ? 0 : 1;
}

int run_verify(const std::string& suite, int n, int samples, uint64_t seed,
               const std::string& fmt_name) {
  Timer timer;
  OutputFormat fmt = parse_format(fmt_name);
  if (fmt != OutputFormat::JSON && fmt != OutputFormat::TEXT)
    throw std::invalid_argument("verify reports support json or text");
  ordered_json j = report_header("verify " + suite);
  j["seed"] = seed;
  int rc = 0;
  auto add_report = [&](const std::string& name, const CheckReport& rep) {
    ordered_json r;
    r["checks"] = rep.checks;
    r["mismatches"] = rep.mismatches;
    j[name] = r;
    if (!rep.ok()) rc = 1;
  };

  if (suite == "b-lemmas" || suite == "all") {
    for (int m = 2; m <= n; ++m) add_report("b-lemmas-n" + std::to_string(m), verify_lemma_b1(m));
    for (int m = 3; m <= n; ++m) add_report("b-t-lemma-n" + std::to_string(m), verify_t_lemma(m));
  }
  if (suite == "b-slice" || suite == "all") {
    for (int m = 3; m <= std::min(n, 5); ++m) {
      auto rep = verify_slice(m, samples, seed);
      ordered_json r;
      r["samples"] = rep.samples;
      r["on_quadric"] = rep.on_quadric;
      r["members"] = rep.members;
      r["mismatches_closed"] = rep.mismatches_closed;
      r["mismatches_single"] = rep.mismatches_single;
      j["b-slice-n" + std::to_string(m)] = r;
      if (!rep.ok()) rc = 1;
    }
  }
  if (suite == "clans" || suite == "all") {
    int bad = 0;
    long long clans_checked = 0;
    for (int m = 1; m <= n; ++m) {
      for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
        Clan c;
        c.plus.resize(m);
        for (int i = 0; i < m; ++i) c.plus[i] = (mask >> i) & 1;
        ++clans_checked;
        if (d_set_recursive(c) != d_set_closed(c)) ++bad;
        if (d_set_closed(c).size() != (size_t{1} << j_set(c).size())) ++bad;
      }
    }
    j["clans"] = {{"clans_checked", clans_checked}, {"mismatches", bad}};
    if (bad) rc = 1;
  }
  if (suite == "bruhat" || suite == "all") {
    ordered_json r;
    if (verify_bruhat(std::min(n, 6), r) != 0) rc = 1;
    j["bruhat"] = r;
  }
  j["pass"] = rc == 0;
  if (fmt == OutputFormat::JSON) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto& [key, val] : j.items()) {
      if (key == "command" || key == "convention" || key == "seed") continue;
      std::cout << key << ": " << val.dump() << "\n";
    }
    std::cout << (rc == 0 ? "pass" : "FAIL") << "\n";
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"characteristic cycles of highest weight Harish-Chandra modules"};
  app.require_subcommand(1);

  auto* tables = app.add_subcommand("tables", "regenerate the exceptional data tables and diff");
  std::string tables_group;
  std::string tables_fmt = "text";
  tables->add_option("group", tables_group, "e6 or e7")
      ->required()
      ->check(CLI::IsMember({"e6", "e7"}));
  tables->add_option("--fmt", tables_fmt, "json|csv|latex|text");

  auto* cc = app.add_subcommand("cc", "characteristic and leading term cycles");
  cc->require_subcommand(1);
  std::string sp_clan;
  auto* cc_sp = cc->add_subcommand("sp", "Sp(2n,R), parameters are clans");
  cc_sp->add_option("clan", sp_clan, "clan string, e.g. 1+23+4++5")->required();
  int so_n = 0, so_k = 0;
  std::string so_sign;
  auto* cc_so_cmd = cc->add_subcommand("so", "SO_e(2,2n-1)");
  cc_so_cmd->add_option("--n", so_n)->required();
  cc_so_cmd->add_option("--k", so_k)->required();
  cc_so_cmd->add_option("--sign", so_sign)->required();
  int e_index = 0;
  auto* cc_e6 = cc->add_subcommand("e6", "E6(-14)");
  cc_e6->add_option("--index", e_index)->required();
  auto* cc_e7 = cc->add_subcommand("e7", "E7(-25)");
  cc_e7->add_option("--index", e_index)->required();
  int su_p = 0, su_q = 0;
  auto* cc_su = cc->add_subcommand("su", "SU(p,q)");
  cc_su->add_option("--p", su_p)->required();
  cc_su->add_option("--q", su_q)->required();
  cc_su->add_option("--index", e_index)->required();
  int d_n = 0;
  auto* cc_soe = cc->add_subcommand("so-even", "SO_e(2,2n-2)");
  cc_soe->add_option("--n", d_n)->required();
  cc_soe->add_option("--index", e_index)->required();
  auto* cc_sos = cc->add_subcommand("so-star", "SO*(2n)");
  cc_sos->add_option("--n", d_n)->required();
  cc_sos->add_option("--index", e_index)->required();

  auto* count = app.add_subcommand("count", "number of parameters with irreducible cycle");
  int count_n = 0, max_enum = 22;
  bool by_cell = false;
  count->add_option("n", count_n)->required();
  count->add_flag("--by-cell", by_cell, "include the per-cell table");
  count->add_option("--max-enum", max_enum, "largest n verified by full enumeration");

  auto* verify = app.add_subcommand("verify", "property suites");
  std::string suite;
  int verify_n = 6, samples = 500;
  uint64_t seed = 7;
  verify->add_option("suite", suite, "b-lemmas|b-slice|clans|bruhat|all")
      ->required()
      ->check(CLI::IsMember({"b-lemmas", "b-slice", "clans", "bruhat", "all"}));
  verify->add_option("--n", verify_n);
  verify->add_option("--samples", samples);
  verify->add_option("--seed", seed);
  std::string verify_fmt = "json";
  verify->add_option("--fmt", verify_fmt, "json|text");

  try {
    app.parse(argc, argv);
    if (*tables) return run_tables(tables_group, tables_fmt);
    if (*cc_sp) return run_cc_sp(sp_clan);
    if (*cc_so_cmd) return run_cc_so(so_n, so_k, so_sign);
    if (*cc_e6) return run_cc_weyl("cc e6", build_hermitian(GroupKind::E6, 6), e_index);
    if (*cc_e7) return run_cc_weyl("cc e7", build_hermitian(GroupKind::E7, 7), e_index);
    if (*cc_su)
      return run_cc_weyl("cc su", build_hermitian(GroupKind::SU, su_p + su_q - 1, su_p), e_index);
    if (*cc_soe)
      return run_cc_weyl("cc so-even", build_hermitian(GroupKind::SO_EVEN, d_n), e_index);
    if (*cc_sos)
      return run_cc_weyl("cc so-star", build_hermitian(GroupKind::SO_STAR, d_n), e_index);
    if (*count) return run_count(count_n, by_cell, max_enum);
    if (*verify) return run_verify(suite, verify_n, samples, seed, verify_fmt);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
