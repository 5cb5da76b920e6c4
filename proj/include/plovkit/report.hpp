#pragma once

// Structured results shared by the CLI and the acceptance driver. Every exact
// integer is stored as a decimal string so nothing is truncated to 64 bits.

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "plovkit/abelian.hpp"
#include "plovkit/matrix.hpp"

namespace plovkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "plovkit";
inline constexpr const char* kToolVersion = "0.1.0";

struct Record {
  std::string name;
  std::string anchor;  // the statement being checked, in words
  Status status = Status::pass;
  Json values = Json::object();
};

struct Report {
  Json config = Json::object();
  std::vector<Record> records;
  std::optional<double> seconds;  // only filled when timing was requested

  bool ok() const;
  void add(Record r) { records.push_back(std::move(r)); }

  Json to_json() const;
  /// One line per record: "status  name  key=value ...".
  std::string to_text() const;
  /// Header "name,anchor,status,values" then one row per record; values is compact JSON.
  std::string to_csv() const;
};

Json to_json(const BigInt& v);
Json to_json(const Rational& v);
Json to_json(const RationalMatrix& m);
Json to_json(const IntMatrix& m);
Json to_json(const RationalPoly& p);

/// Inverse of to_json for integers; accepts a decimal string or a JSON integer.
BigInt bigint_from_json(const Json& j);
Rational rational_from_json(const Json& j);

/// Loads {"d": n, "A": [[...]], "H": optional [[...]]}. Throws std::invalid_argument on malformed input.
AbelianModel model_from_json(const Json& j);

/// Flattens a DynReport into records, prefixed by `prefix` when nonempty.
void append(Report& out, const DynReport& dyn, const std::string& prefix = {});

}  // namespace plovkit
