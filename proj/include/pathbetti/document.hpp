#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "pathbetti/formulas.hpp"
#include "pathbetti/verify.hpp"

namespace pathbetti {

inline constexpr const char* kSchemaVersion = "1";

class DocumentError : public std::runtime_error {
 public:
  explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

/// JSON table document: schema_version, kind, n, t, provenance, entries
/// sorted by (i, j) with decimal-string values, optional pd and reg.
std::string table_to_json(const BettiTable& table, const std::optional<PdReg>& pdreg = {});

/// Parses a table document. Rejects unknown major schema versions.
BettiTable table_from_json(const std::string& text);

/// "i,j,value" header and one row per nonzero entry.
std::string table_to_csv(const BettiTable& table);

/// Betti diagram: columns are i, rows are j - i, "." marks zero.
std::string table_to_text(const BettiTable& table);

/// Data fields are stable for a fixed sweep; wall-clock times live only
/// under the top-level "timing" key.
std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace pathbetti
