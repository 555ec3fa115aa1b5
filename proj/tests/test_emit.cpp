#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cchw/emit.hpp"

using namespace cchw;

TEST_CASE("format parsing") {
  CHECK(parse_format("json") == OutputFormat::JSON);
  CHECK(parse_format("latex") == OutputFormat::LATEX);
  CHECK_THROWS(parse_format("yaml"));
}

TEST_CASE("emitters are byte stable and structurally sane") {
  auto hd = build_hermitian(GroupKind::E6, 6);
  auto rows = compute_data_table(hd);
  REQUIRE(rows.size() == 27);

  for (auto fmt : {OutputFormat::JSON, OutputFormat::CSV, OutputFormat::LATEX,
                   OutputFormat::TEXT}) {
    auto a = emit_data_table(rows, "e6", fmt);
    auto b = emit_data_table(compute_data_table(hd), "e6", fmt);
    CHECK(a == b);
    CHECK(!a.empty());
  }

  auto csv = emit_data_table(rows, "e6", OutputFormat::CSV);
  CHECK(csv.substr(0, csv.find('\n')) == "i,tau,dim,av,possible");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 28);  // header + 27 rows

  auto latex = emit_data_table(rows, "e6", OutputFormat::LATEX);
  CHECK(latex.find("\\begin{array}{rlccc}") != std::string::npos);
  CHECK(latex.find("\\mathcal{O}_2") != std::string::npos);

  auto tab = tab_table(hd);
  auto tl = emit_tab_table(tab, "e6", OutputFormat::LATEX);
  CHECK(tl.find("T_{13}") != std::string::npos);
  auto tj = emit_tab_table(tab, "e6", OutputFormat::JSON);
  CHECK(tj.find("\"alpha\"") != std::string::npos);
}

TEST_CASE("diffs flag only the known errata") {
  auto e6 = build_hermitian(GroupKind::E6, 6);
  auto diffs = diff_data_table(e6);
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].cell == "21:possible");
  CHECK(diffs[0].known_erratum);
  CHECK(diffs[0].computed == "{21}");
  CHECK(diffs[0].reference == "{1, 21}");
  CHECK(diff_tab_table(e6).empty());

  auto e7 = build_hermitian(GroupKind::E7, 7);
  auto d7 = diff_data_table(e7);
  REQUIRE(d7.size() == 4);
  for (const auto& d : d7) CHECK(d.known_erratum);
  CHECK(diff_tab_table(e7).empty());
}
