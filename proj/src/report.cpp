#include "plovkit/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace plovkit {

bool Report::ok() const {
  return std::none_of(records.begin(), records.end(), [](const Record& r) { return r.status == Status::fail; });
}

Json Report::to_json() const {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["config"] = config;
  j["ok"] = ok();
  Json recs = Json::array();
  for (const auto& r : records) {
    Json o;
    o["name"] = r.name;
    o["anchor"] = r.anchor;
    o["status"] = std::string(to_string(r.status));
    o["values"] = r.values;
    recs.push_back(std::move(o));
  }
  j["records"] = std::move(recs);
  if (seconds) j["seconds"] = *seconds;
  return j;
}

namespace {

// Flat arrays print as "a,b,c"; nested arrays as "[a,b];[c,d]"; objects stay JSON.
std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += v[i].is_array() ? ";" : ",";
      out += v[i].is_array() ? "[" + scalar_text(v[i]) + "]" : scalar_text(v[i]);
    }
    return out;
  }
  return v.dump();
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& r : records) {
    os << to_string(r.status) << "  " << r.name;
    for (const auto& [key, v] : r.values.items()) os << "  " << key << "=" << scalar_text(v);
    os << '\n';
  }
  os << (ok() ? "ok" : "FAILED") << " (" << records.size() << " records)\n";
  if (seconds) os << "seconds=" << *seconds << '\n';
  return os.str();
}

std::string Report::to_csv() const {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "name,anchor,status,values\n";
  for (const auto& r : records)
    os << quote(r.name) << ',' << quote(r.anchor) << ',' << to_string(r.status) << ',' << quote(r.values.dump())
       << '\n';
  return os.str();
}

Json to_json(const BigInt& v) { return v.get_str(); }

Json to_json(const Rational& v) { return v.get_str(); }

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& v : m.row(r)) row.push_back(v.get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const IntMatrix& m) { return to_json(to_rational(m)); }

Json to_json(const RationalPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return coeffs;
}

BigInt bigint_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
    if (j.is_string()) return BigInt(j.get<std::string>());
  } catch (const std::invalid_argument&) {
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rational(bigint_from_json(j));
    if (j.is_string()) {
      Rational q(j.get<std::string>());
      q.canonicalize();
      return q;
    }
  } catch (const std::invalid_argument&) {
  }
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

namespace {

template <typename T, typename F>
Matrix<T> matrix_from_json(const Json& j, F&& entry, const char* what) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument(std::string(what) + " must be a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j.front().is_array()) throw std::invalid_argument(std::string(what) + " rows must be arrays");
  const std::size_t cols = j.front().size();
  Matrix<T> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw std::invalid_argument(std::string(what) + " is ragged");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(j[r][c]);
  }
  return m;
}

}  // namespace

AbelianModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("A")) throw std::invalid_argument("model file needs an object with key \"A\"");
  IntMatrix a = matrix_from_json<BigInt>(j["A"], bigint_from_json, "A");
  if (!a.is_square()) throw std::invalid_argument("A must be square");
  if (j.contains("d")) {
    if (!j["d"].is_number_integer() || j["d"].get<long long>() != static_cast<long long>(a.rows()))
      throw std::invalid_argument("\"d\" does not match the size of A");
  }
  std::optional<NsClass> h;
  if (j.contains("H") && !j["H"].is_null()) h = matrix_from_json<Rational>(j["H"], rational_from_json, "H");
  return AbelianModel::make(std::move(a), std::move(h));
}

void append(Report& out, const DynReport& dyn, const std::string& prefix) {
  const std::string p = prefix.empty() ? "" : prefix + ".";
  Record summary;
  summary.name = p + "summary";
  summary.anchor = "plov, Gelfand-Kirillov dimension and nilpotency data";
  summary.status = Status::observed;
  summary.values["d"] = to_json(BigInt(dyn.d));
  summary.values["iterate"] = to_json(BigInt(dyn.iterate));
  summary.values["plov"] = to_json(BigInt(dyn.plov));
  summary.values["plov_leading"] = to_json(dyn.plov_leading);
  summary.values["gkdim"] = to_json(BigInt(dyn.gkdim));
  summary.values["k"] = to_json(BigInt(dyn.k));
  summary.values["r"] = to_json(BigInt(dyn.r));
  Json sizes = Json::array();
  for (int s : dyn.jordan_sizes) sizes.push_back(std::to_string(s));
  summary.values["jordan_sizes"] = std::move(sizes);
  Json exps = Json::array();
  for (int e : dyn.degree_exponents) exps.push_back(std::to_string(e));
  summary.values["degree_exponents"] = std::move(exps);
  summary.values["monomial_bound"] = to_json(BigInt(dyn.monomial_gap.bound));
  summary.values["monomial_gap"] = to_json(BigInt(dyn.monomial_gap.gap));
  if (dyn.positivity) {
    Json t = Json::array();
    for (int v : dyn.positivity->t) t.push_back(std::to_string(v));
    summary.values["t"] = std::move(t);
  }
  out.add(std::move(summary));
  for (const auto& c : dyn.checks) {
    Record r;
    r.name = p + c.name;
    r.anchor = c.anchor;
    r.status = c.status;
    r.values["detail"] = c.detail;
    out.add(std::move(r));
  }
}

}  // namespace plovkit
