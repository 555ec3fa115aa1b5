#pragma once

#include <string>
#include <vector>

#include "cchw/ccengine.hpp"

namespace cchw {

enum class OutputFormat { JSON, CSV, LATEX, TEXT };

OutputFormat parse_format(const std::string& s);

// Computed data table for an exceptional kind, in the reference row order.
struct DataTableRow {
  int index;
  std::vector<int> tau;
  int dim;
  int av;                     // reference input
  std::vector<int> possible;  // computed
};

struct TableDiff {
  std::string table;   // "e6" | "e7" | "e6-tab" | "e7-tab"
  std::string cell;    // "row:column" locator
  std::string computed;
  std::string reference;
  bool known_erratum = false;
};

std::vector<DataTableRow> compute_data_table(const HermitianDatum& hd);

// regenerate and diff against the reference dataset
std::vector<TableDiff> diff_data_table(const HermitianDatum& hd);
std::vector<TableDiff> diff_tab_table(const HermitianDatum& hd);

std::string emit_data_table(const std::vector<DataTableRow>& rows, const std::string& name,
                            OutputFormat fmt);
std::string emit_tab_table(const std::vector<TabTableColumn>& cols, const std::string& name,
                           OutputFormat fmt);

std::string format_set(const std::vector<int>& v);

}  // namespace cchw
