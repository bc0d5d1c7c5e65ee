#pragma once

// Deterministic JSON / CSV serialization of run reports. Numbers are printed
// with 17 significant digits, non-finite values as null, fields in fixed order.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "piltz/identities.hpp"
#include "piltz/meijer.hpp"
#include "piltz/zeta.hpp"

namespace piltz {

inline constexpr int report_schema = 1;

inline std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

/// Flat ordered record; serialized either as one JSON object or a two-line CSV.
class Record {
public:
  Record& num(const std::string& k, double v) { return raw(k, format_number(v)); }
  Record& integer(const std::string& k, std::int64_t v) { return raw(k, std::to_string(v)); }
  Record& str(const std::string& k, const std::string& v) { return put(k, json_quote(v), v); }
  Record& boolean(const std::string& k, bool v) { return raw(k, v ? "true" : "false"); }
  Record& nums(const std::string& k, const std::vector<double>& v) {
    std::string j = "[", c;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) {
        j += ",";
        c += ";";
      }
      j += format_number(v[i]);
      c += format_number(v[i]);
    }
    return put(k, j + "]", c);
  }

  std::string json() const {
    std::string out = "{\n";
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      out += "  " + json_quote(keys_[i]) + ": " + json_[i];
      out += (i + 1 < keys_.size()) ? ",\n" : "\n";
    }
    return out + "}\n";
  }

  std::string csv() const {
    std::string head, row;
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (i) {
        head += ",";
        row += ",";
      }
      head += keys_[i];
      row += csv_field(csv_[i]);
    }
    return head + "\n" + row + "\n";
  }

private:
  Record& raw(const std::string& k, const std::string& v) { return put(k, v, v == "null" ? "" : v); }
  Record& put(const std::string& k, std::string j, std::string c) {
    keys_.push_back(k);
    json_.push_back(std::move(j));
    csv_.push_back(std::move(c));
    return *this;
  }
  static std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string out = "\"";
    for (char c : v) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  }

  std::vector<std::string> keys_, json_, csv_;
};

inline const char* case_name(IdentityVariant v) {
  switch (v) {
    case IdentityVariant::RationalsM2: return "q-m2";
    case IdentityVariant::RationalsM: return "q-m";
    case IdentityVariant::RealQuadratic: return "real-quad";
    case IdentityVariant::ImagQuadratic: return "imag-quad";
    case IdentityVariant::PurelyImaginaryMeijer: return "meijer";
    case IdentityVariant::TotallyRealSteen: return "steen";
  }
  return "?";
}

inline Record identity_record(const IdentityReport& r, double wallTimeMs) {
  Record rec;
  rec.integer("schema", report_schema)
      .str("case", case_name(r.kase.variant))
      .str("field", r.kase.field.name())
      .integer("m", r.kase.m)
      .str("x", r.x.str())
      .integer("N", r.N)
      .num("oracle", r.oracle)
      .num("mainTerm", r.mainTerm)
      .num("constantTerm", r.constantTerm)
      .num("series", r.series)
      .num("accelerated", r.accelerated)
      .num("discrepancy", r.discrepancy)
      .num("discrepancyAccelerated", r.discrepancyAccelerated)
      .num("wallTimeMs", wallTimeMs)
      .str("seriesStatus", r.seriesStatus)
      .num("seriesErrorBar", r.seriesErrorBar)
      .num("leadingResidueTerm", r.leadingResidueTerm)
      .nums("mainTermPoly", r.mainTermPoly);
  return rec;
}

inline void write_convergence_csv(const IdentityReport& r, std::ostream& os) {
  os << "N,series_partial,discrepancy\n";
  for (const auto& row : r.convergence)
    os << row.n << ',' << format_number(row.partial) << ',' << format_number(row.discrepancy) << '\n';
}

inline Record riesz_record(const RieszCheckReport& r, double wallTimeMs) {
  Record rec;
  rec.integer("schema", report_schema)
      .str("field", r.field.name())
      .integer("m", r.m)
      .integer("rho", r.rho)
      .num("mu", r.mu)
      .str("x", r.x.str())
      .num("direct", r.direct)
      .num("residueSide", r.residueSide)
      .num("residueAtZero", r.residueAtZero)
      .num("residueAtOne", r.residueAtOne)
      .num("verticalIntegral", r.verticalIntegral)
      .num("discrepancy", r.discrepancy)
      .num("quadratureErrorBar", r.quadratureErrorBar)
      .num("tolerance", r.tolerance)
      .boolean("passed", r.passed)
      .num("wallTimeMs", wallTimeMs);
  return rec;
}

inline Record gfun_record(const GSpec& g, const GResult& r, double wallTimeMs) {
  Record rec;
  rec.integer("schema", report_schema)
      .integer("q", g.q)
      .integer("k", g.k)
      .nums("b", g.b)
      .num("z", g.z)
      .num("value", r.value)
      .num("error", r.error)
      .num("mu", r.mu)
      .num("step", r.step)
      .integer("refinements", r.refinements)
      .boolean("converged", r.converged)
      .num("wallTimeMs", wallTimeMs);
  return rec;
}

inline Record mainterm_record(const FieldDescriptor& f, int m, const std::string& x, const MainTermValue& v,
                              const LaurentData& ld, double wallTimeMs) {
  std::vector<double> c;
  for (const auto& z : ld.coeffs) c.push_back(z.real());
  Record rec;
  rec.integer("schema", report_schema)
      .str("field", f.name())
      .integer("m", m)
      .str("x", x)
      .num("value", v.value)
      .nums("poly", v.poly)
      .nums("laurent", c)
      .num("laurentResidual", ld.residual)
      .num("wallTimeMs", wallTimeMs);
  return rec;
}

}  // namespace piltz
