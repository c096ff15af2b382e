#include "pathbetti/document.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace pathbetti {

using nlohmann::ordered_json;

std::string table_to_json(const BettiTable& table, const std::optional<PdReg>& pdreg) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = to_string(table.family.kind);
  doc["n"] = table.family.n;
  doc["t"] = table.family.t;
  doc["provenance"] = to_string(table.provenance);
  ordered_json entries = ordered_json::array();
  for (const auto& [cell, value] : table.entries)
    entries.push_back({{"i", cell.first}, {"j", cell.second}, {"value", value.get_str()}});
  doc["entries"] = std::move(entries);
  if (pdreg) {
    doc["pd"] = pdreg->pd;
    doc["reg"] = pdreg->reg;
  }
  return doc.dump(2) + "\n";
}

BettiTable table_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  try {
    const std::string version = doc.at("schema_version").get<std::string>();
    const std::string major = version.substr(0, version.find('.'));
    if (major != kSchemaVersion)
      throw DocumentError("unsupported schema_version " + version);

    BettiTable table;
    const auto kind = parse_graph_kind(doc.at("kind").get<std::string>());
    if (!kind) throw DocumentError("unknown kind");
    table.family = {*kind, doc.at("n").get<int>(), doc.at("t").get<int>()};
    table.family.validate();
    if (doc.contains("provenance")) {
      const auto p = parse_provenance(doc["provenance"].get<std::string>());
      if (!p) throw DocumentError("unknown provenance");
      table.provenance = *p;
    }
    for (const auto& e : doc.at("entries")) {
      Count value;
      if (value.set_str(e.at("value").get<std::string>(), 10) != 0 || value < 0)
        throw DocumentError("entry value is not a nonnegative decimal string");
      const int i = e.at("i").get<int>();
      const int j = e.at("j").get<int>();
      if (table.entries.count({i, j}) != 0) throw DocumentError("duplicate entry");
      table.set(i, j, value);
    }
    return table;
  } catch (const DocumentError&) {
    throw;
  } catch (const std::exception& e) {
    throw DocumentError(std::string("invalid table document: ") + e.what());
  }
}

std::string table_to_csv(const BettiTable& table) {
  std::ostringstream out;
  out << "i,j,value\n";
  for (const auto& [cell, value] : table.entries)
    out << cell.first << ',' << cell.second << ',' << value.get_str() << '\n';
  return out.str();
}

std::string table_to_text(const BettiTable& table) {
  const PdReg shape = pd_reg_from_table(table);
  const int cols = shape.pd + 1;
  const int rows = shape.reg + 1;

  std::vector<Count> totals(cols);
  for (const auto& [cell, value] : table.entries) totals[cell.first] += value;

  std::vector<std::vector<std::string>> grid(rows + 2, std::vector<std::string>(cols + 1));
  grid[0][0] = "";
  grid[1][0] = "total:";
  for (int i = 0; i < cols; ++i) {
    grid[0][i + 1] = std::to_string(i);
    grid[1][i + 1] = totals[i].get_str();
  }
  for (int r = 0; r < rows; ++r) {
    grid[r + 2][0] = std::to_string(r) + ":";
    for (int i = 0; i < cols; ++i) {
      const Count v = table.at(i, i + r);
      grid[r + 2][i + 1] = v == 0 ? "." : v.get_str();
    }
  }
  std::vector<std::size_t> width(cols + 1, 0);
  for (const auto& line : grid)
    for (int c = 0; c <= cols; ++c) width[c] = std::max(width[c], line[c].size());

  std::ostringstream out;
  for (const auto& line : grid) {
    for (int c = 0; c <= cols; ++c) {
      if (c > 0) out << ' ';
      out << std::setw(static_cast<int>(width[c])) << line[c];
    }
    out << '\n';
  }
  return out.str();
}

namespace {

ordered_json mismatch_json(const Mismatch& m) {
  ordered_json j;
  j["check"] = m.check;
  j["i"] = m.i;
  j["j"] = m.j;
  j["formula"] = m.formula.get_str();
  j["eligible"] = m.eligible ? ordered_json(m.eligible->get_str()) : ordered_json(nullptr);
  j["hochster"] = m.hochster ? ordered_json(m.hochster->get_str()) : ordered_json(nullptr);
  if (!m.detail.empty()) j["detail"] = m.detail;
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["checked"] = report.checked();
  doc["passed"] = report.passed();
  doc["failed"] = report.failed();
  doc["skipped"] = report.skipped();
  ordered_json instances = ordered_json::array();
  ordered_json timing = ordered_json::array();
  for (const auto& r : report.instances) {
    ordered_json item;
    item["kind"] = to_string(r.family.kind);
    item["n"] = r.family.n;
    item["t"] = r.family.t;
    item["status"] = to_string(r.status);
    item["nonzero_cells"] = r.nonzero_cells;
    item["homology_evaluations"] = r.homology_evaluations;
    if (r.mismatch) item["mismatch"] = mismatch_json(*r.mismatch);
    if (!r.skip_reason.empty()) item["skip_reason"] = r.skip_reason;
    instances.push_back(std::move(item));
    timing.push_back(r.seconds);
  }
  doc["instances"] = std::move(instances);
  doc["timing"] = {{"seconds_per_instance", std::move(timing)}};
  return doc.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& r : report.instances) {
    out << std::left << std::setw(18) << r.family.name() << ' ' << std::setw(7)
        << to_string(r.status);
    if (r.status == InstanceStatus::skipped) {
      out << ' ' << r.skip_reason;
    } else {
      out << " nonzero=" << r.nonzero_cells;
      if (r.homology_evaluations > 0) out << " homology=" << r.homology_evaluations;
      out << std::fixed << std::setprecision(3) << " time=" << r.seconds << "s";
    }
    out << '\n';
    if (r.mismatch) {
      const Mismatch& m = *r.mismatch;
      out << "  first mismatch [" << m.check << "]";
      if (m.i >= 0) out << " at (i,j)=(" << m.i << ',' << m.j << ")";
      if (m.i >= 0) {
        out << " formula=" << m.formula.get_str();
        if (m.eligible) out << " eligible=" << m.eligible->get_str();
        if (m.hochster) out << " hochster=" << m.hochster->get_str();
      }
      if (!m.detail.empty()) out << " " << m.detail;
      out << '\n';
    }
  }
  out << "checked=" << report.checked() << " passed=" << report.passed()
      << " failed=" << report.failed() << " skipped=" << report.skipped() << '\n';
  return out.str();
}

}  // namespace pathbetti
