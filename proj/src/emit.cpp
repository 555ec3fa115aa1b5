#include "cchw/emit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cchw/fixtures.hpp"
#include "json.hpp"

namespace cchw {

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::JSON;
  if (s == "csv") return OutputFormat::CSV;
  if (s == "latex") return OutputFormat::LATEX;
  if (s == "text") return OutputFormat::TEXT;
  throw std::invalid_argument("unknown format '" + s + "' (json|csv|latex|text)");
}

std::string format_set(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "}";
  return os.str();
}

namespace {

const std::vector<fixtures::ExceptionalRow>& rows_for(const HermitianDatum& hd) {
  if (hd.kind == GroupKind::E6) return fixtures::e6_rows();
  if (hd.kind == GroupKind::E7) return fixtures::e7_rows();
  throw std::invalid_argument("data tables exist for the exceptional kinds only");
}

std::string table_name(const HermitianDatum& hd) { return to_string(hd.kind); }

bool is_known_erratum(const std::string& table, const std::string& cell) {
  for (const auto& [key, note] : fixtures::known_errata())
    if (key == table + ":" + cell) return true;
  return false;
}

}  // namespace

std::vector<DataTableRow> compute_data_table(const HermitianDatum& hd) {
  const auto& ref = rows_for(hd);
  std::vector<DataTableRow> out;
  for (size_t i = 0; i < hd.script_w.size(); ++i) {
    const WeylElement& w = hd.script_w[i];
    DataTableRow row;
    row.index = static_cast<int>(i) + 1;
    row.tau = w.tau();
    row.dim = w.length();
    row.av = ref[i].av;
    for (int y : possible_cc(hd, w)) row.possible.push_back(y + 1);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<TableDiff> diff_data_table(const HermitianDatum& hd) {
  const auto& ref = rows_for(hd);
  auto rows = compute_data_table(hd);
  std::string name = table_name(hd);
  std::vector<TableDiff> diffs;
  auto push = [&](int idx, const std::string& col, const std::string& got,
                  const std::string& want) {
    std::string cell = std::to_string(idx) + ":" + col;
    diffs.push_back({name, cell, got, want, is_known_erratum(name, cell)});
  };
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].tau != ref[i].tau)
      push(rows[i].index, "tau", format_set(rows[i].tau), format_set(ref[i].tau));
    if (rows[i].dim != ref[i].dim)
      push(rows[i].index, "dim", std::to_string(rows[i].dim), std::to_string(ref[i].dim));
    if (rows[i].possible != ref[i].possible)
      push(rows[i].index, "possible", format_set(rows[i].possible), format_set(ref[i].possible));
  }
  return diffs;
}

std::vector<TableDiff> diff_tab_table(const HermitianDatum& hd) {
  const auto& ref =
      hd.kind == GroupKind::E6 ? fixtures::e6_tab_columns() : fixtures::e7_tab_columns();
  auto cols = tab_table(hd);
  std::string name = table_name(hd) + "-tab";
  std::vector<TableDiff> diffs;
  if (cols.size() != ref.size()) {
    diffs.push_back({name, "columns", std::to_string(cols.size()), std::to_string(ref.size())});
    return diffs;
  }
  for (size_t c = 0; c < cols.size(); ++c) {
    std::ostringstream key;
    key << "T" << ref[c].alpha << ref[c].beta;
    if (cols[c].op.alpha != ref[c].alpha || cols[c].op.beta != ref[c].beta) {
      diffs.push_back({name, key.str() + ":pair", std::to_string(cols[c].op.alpha) + "," +
                       std::to_string(cols[c].op.beta),
                       std::to_string(ref[c].alpha) + "," + std::to_string(ref[c].beta)});
      continue;
    }
    if (cols[c].entries != ref[c].entries) {
      auto fmt = [](const std::vector<std::pair<int, int>>& es) {
        std::ostringstream os;
        for (const auto& [w, t] : es) os << w << "->" << t << " ";
        return os.str();
      };
      diffs.push_back({name, key.str(), fmt(cols[c].entries), fmt(ref[c].entries)});
    }
  }
  return diffs;
}

std::string emit_data_table(const std::vector<DataTableRow>& rows, const std::string& name,
                            OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::JSON: {
      nlohmann::ordered_json j;
      j["table"] = name;
      j["convention"] = fixtures::kReferenceVersion;
      j["columns"] = {"i", "tau", "dim", "av", "possible"};
      auto& data = j["rows"];
      data = nlohmann::ordered_json::array();
      for (const auto& r : rows)
        data.push_back({{"i", r.index},
                        {"tau", r.tau},
                        {"dim", r.dim},
                        {"av", r.av},
                        {"possible", r.possible}});
      os << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::CSV: {
      os << "i,tau,dim,av,possible\n";
      auto join = [](const std::vector<int>& v) {
        std::ostringstream s;
        for (size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
        return s.str();
      };
      for (const auto& r : rows)
        os << r.index << "," << join(r.tau) << "," << r.dim << "," << r.av << ","
           << join(r.possible) << "\n";
      break;
    }
    case OutputFormat::LATEX: {
      auto latex_set = [](const std::vector<int>& v) {
        std::ostringstream s;
        s << "\\{";
        for (size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
        s << "\\}";
        return s.str();
      };
      os << "\\begin{array}{rlccc}\n";
      os << "i & \\tau(w_i) & \\dim & AV & \\text{possible} \\\\\n\\hline\n";
      for (const auto& r : rows) {
        os << r.index << " & " << latex_set(r.tau) << " & " << r.dim << " & \\mathcal{O}_"
           << r.av << " & " << latex_set(r.possible) << " \\\\\n";
      }
      os << "\\end{array}\n";
      break;
    }
    case OutputFormat::TEXT: {
      os << name << " data (i | tau | dim | av | possible)\n";
      for (const auto& r : rows)
        os << r.index << " | " << format_set(r.tau) << " | " << r.dim << " | O_" << r.av << " | "
           << format_set(r.possible) << "\n";
      break;
    }
  }
  return os.str();
}

std::string emit_tab_table(const std::vector<TabTableColumn>& cols, const std::string& name,
                           OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::JSON: {
      nlohmann::ordered_json j;
      j["table"] = name;
      j["convention"] = fixtures::kReferenceVersion;
      auto& data = j["operators"];
      data = nlohmann::ordered_json::array();
      for (const auto& c : cols) {
        nlohmann::ordered_json col;
        col["alpha"] = c.op.alpha;
        col["beta"] = c.op.beta;
        auto& entries = col["entries"];
        entries = nlohmann::ordered_json::array();
        for (const auto& [w, t] : c.entries) entries.push_back({w, t});
        data.push_back(col);
      }
      os << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::CSV: {
      os << "alpha,beta,w,image\n";
      for (const auto& c : cols)
        for (const auto& [w, t] : c.entries)
          os << c.op.alpha << "," << c.op.beta << "," << w << "," << t << "\n";
      break;
    }
    case OutputFormat::LATEX: {
      os << "\\begin{array}{" ;
      for (size_t i = 0; i < cols.size(); ++i) os << (i ? "|cc" : "cc");
      os << "}\n";
      for (size_t i = 0; i < cols.size(); ++i)
        os << (i ? " & " : "") << "w & T_{" << cols[i].op.alpha << cols[i].op.beta << "}(w)";
      os << " \\\\\n\\hline\n";
      size_t depth = 0;
      for (const auto& c : cols) depth = std::max(depth, c.entries.size());
      for (size_t r = 0; r < depth; ++r) {
        for (size_t i = 0; i < cols.size(); ++i) {
          if (i) os << " & ";
          if (r < cols[i].entries.size())
            os << cols[i].entries[r].first << " & " << cols[i].entries[r].second;
          else
            os << " & ";
        }
        os << " \\\\\n";
      }
      os << "\\end{array}\n";
      break;
    }
    case OutputFormat::TEXT: {
      os << name << " wall-crossing table\n";
      for (const auto& c : cols) {
        os << "T_" << c.op.alpha << c.op.beta << ":";
        for (const auto& [w, t] : c.entries) os << " " << w << "->" << t;
        os << "\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace cchw
