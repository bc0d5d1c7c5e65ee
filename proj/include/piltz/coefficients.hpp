#pragma once

// Multiplicative coefficient tables v_K^m(n) and their direct partial / Riesz sums.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <memory>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "piltz/common.hpp"
#include "piltz/field.hpp"
#include "piltz/rational.hpp"

namespace piltz {

enum class Provenance { Sieved, Convolved, Ingested };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Sieved: return "sieved";
    case Provenance::Convolved: return "convolved";
    case Provenance::Ingested: return "ingested";
  }
  return "?";
}

/// Immutable table n -> v_K^m(n) for 1 <= n <= limit.
class CoefficientTable {
public:
  CoefficientTable(FieldDescriptor field, int power, Provenance provenance, std::vector<std::uint64_t> values)
      : field_(field), power_(power), provenance_(provenance),
        values_(std::make_shared<const std::vector<std::uint64_t>>(std::move(values))) {
    if (values_->size() < 2) throw domain_error("coefficient table must cover at least n = 1");
  }

  std::int64_t limit() const noexcept { return static_cast<std::int64_t>(values_->size()) - 1; }
  int power() const noexcept { return power_; }
  const FieldDescriptor& field() const noexcept { return field_; }
  Provenance provenance() const noexcept { return provenance_; }

  std::uint64_t operator[](std::int64_t n) const {
    if (n < 1 || n > limit()) throw domain_error("coefficient index " + std::to_string(n) + " out of range");
    return (*values_)[static_cast<std::size_t>(n)];
  }
  /// Index 0 is unused and holds zero.
  const std::vector<std::uint64_t>& raw() const noexcept { return *values_; }

private:
  FieldDescriptor field_;
  int power_;
  Provenance provenance_;
  std::shared_ptr<const std::vector<std::uint64_t>> values_;
};

/// v_K(n) by sieving the divisor sum of the Kronecker character.
inline CoefficientTable sieve_vK(const FieldDescriptor& field, std::int64_t N) {
  if (N < 1) throw domain_error("sieve_vK: limit must be positive");
  const auto n = static_cast<std::size_t>(N);
  if (field.kind == FieldKind::Rationals) {
    std::vector<std::uint64_t> v(n + 1, 1);
    v[0] = 0;
    return {field, 1, Provenance::Sieved, std::move(v)};
  }
  if (field.kind != FieldKind::Quadratic)
    throw domain_error("sieve_vK: no factorization backend for " + field.name() + "; ingest coefficients instead");

  const auto q = static_cast<std::size_t>(field.abs_disc);
  std::vector<int> chi(q);
  for (std::size_t a = 1; a <= q; ++a) chi[a % q] = kronecker_symbol(field.disc, static_cast<std::int64_t>(a));

  std::vector<std::int64_t> acc(n + 1, 0);
  for (std::size_t d = 1; d <= n; ++d) {
    const int c = chi[d % q];
    if (c == 0) continue;
    for (std::size_t k = d; k <= n; k += d) acc[k] += c;
  }
  std::vector<std::uint64_t> v(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    if (acc[k] < 0) throw domain_error("sieve_vK: negative ideal count at n = " + std::to_string(k));
    v[k] = static_cast<std::uint64_t>(acc[k]);
  }
  return {field, 1, Provenance::Sieved, std::move(v)};
}

/// Identity element of Dirichlet convolution (coefficients of zeta_K^0).
inline CoefficientTable unit_table(const FieldDescriptor& field, std::int64_t N) {
  std::vector<std::uint64_t> v(static_cast<std::size_t>(N) + 1, 0);
  v[1] = 1;
  return {field, 0, Provenance::Convolved, std::move(v)};
}

/// Dirichlet convolution; overflow of 64-bit values is an error.
inline CoefficientTable dirichlet_convolve(const CoefficientTable& a, const CoefficientTable& b) {
  if (a.limit() != b.limit()) throw domain_error("dirichlet_convolve: tables have different limits");
  if (!(a.field() == b.field())) throw domain_error("dirichlet_convolve: tables belong to different fields");
  const auto n = static_cast<std::size_t>(a.limit());
  const auto& x = a.raw();
  const auto& y = b.raw();
  std::vector<std::uint64_t> out(n + 1, 0);
  for (std::size_t d = 1; d <= n; ++d) {
    if (x[d] == 0) continue;
    for (std::size_t e = 1; d * e <= n; ++e) {
      std::uint64_t prod = 0;
      if (__builtin_mul_overflow(x[d], y[e], &prod) || __builtin_add_overflow(out[d * e], prod, &out[d * e]))
        throw domain_error("dirichlet_convolve: coefficient overflow at n = " + std::to_string(d * e));
    }
  }
  return {a.field(), a.power() + b.power(), Provenance::Convolved, std::move(out)};
}

/// v_K^m by binary powering over Dirichlet convolution.
inline CoefficientTable coeff_power(const FieldDescriptor& field, int m, std::int64_t N) {
  if (m < 1) throw domain_error("coeff_power: m must be at least 1");
  CoefficientTable base = sieve_vK(field, N);
  if (m == 1) return base;
  CoefficientTable result = unit_table(field, N);
  bool first = true;
  for (int e = m;;) {
    if (e & 1) {
      result = first ? base : dirichlet_convolve(result, base);
      first = false;
    }
    e >>= 1;
    if (e == 0) break;
    base = dirichlet_convolve(base, base);
  }
  return result;
}

namespace detail {

// Smallest prime factor for 0..n.
inline std::vector<std::uint32_t> smallest_prime_factors(std::size_t n) {
  std::vector<std::uint32_t> spf(n + 1, 0);
  for (std::size_t i = 2; i <= n; ++i) {
    if (spf[i] != 0) continue;
    for (std::size_t k = i; k <= n; k += i)
      if (spf[k] == 0) spf[k] = static_cast<std::uint32_t>(i);
  }
  return spf;
}

}  // namespace detail

/// Checks values[1] = 1 and multiplicativity; returns an empty string when valid.
inline std::string multiplicativity_violation(const std::vector<std::uint64_t>& v) {
  if (v.size() < 2) return "table is empty";
  if (v[1] != 1) return "values[1] = " + std::to_string(v[1]) + ", expected 1";
  const std::size_t n = v.size() - 1;
  const auto spf = detail::smallest_prime_factors(n);
  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t p = spf[k];
    std::size_t pe = 1;
    std::size_t rest = k;
    while (rest % p == 0) {
      rest /= p;
      pe *= p;
    }
    if (rest == 1) continue;
    unsigned __int128 expect = static_cast<unsigned __int128>(v[pe]) * v[rest];
    if (expect != v[k]) {
      return "multiplicativity violated: values[" + std::to_string(k) + "] = " + std::to_string(v[k]) +
             " but values[" + std::to_string(pe) + "] * values[" + std::to_string(rest) +
             "] differs; witness (" + std::to_string(pe) + "," + std::to_string(rest) + ")";
    }
  }
  return {};
}

/// Writes the coefficient CSV (header "n,coeff").
inline void write_coefficients_csv(const CoefficientTable& t, std::ostream& os) {
  os << "n,coeff\n";
  const auto& v = t.raw();
  for (std::size_t n = 1; n < v.size(); ++n) os << n << ',' << v[n] << '\n';
}

/// Parses and validates a coefficient CSV stream.
inline CoefficientTable read_coefficients_csv(std::istream& is, const FieldDescriptor& field, int m) {
  if (m < 1) throw domain_error("ingest: m must be at least 1");
  std::string line;
  if (!std::getline(is, line)) throw domain_error("ingest: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF) line.erase(0, 3);  // UTF-8 BOM
  if (line != "n,coeff") throw domain_error("ingest: expected header 'n,coeff', got '" + line + "'");

  auto parse_u64 = [](const std::string& s, std::size_t row) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw domain_error("ingest: malformed row " + std::to_string(row) + ": '" + s + "' is not a non-negative integer");
    std::uint64_t v = 0;
    for (char c : s)
      if (__builtin_mul_overflow(v, 10u, &v) || __builtin_add_overflow(v, static_cast<unsigned>(c - '0'), &v))
        throw domain_error("ingest: value overflows 64 bits in row " + std::to_string(row));
    return v;
  };

  std::vector<std::uint64_t> values{0};
  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw domain_error("ingest: malformed row " + std::to_string(row) + ": '" + line + "'");
    const std::uint64_t n = parse_u64(line.substr(0, comma), row);
    const std::uint64_t c = parse_u64(line.substr(comma + 1), row);
    if (n != values.size())
      throw domain_error("ingest: gap or disorder in index range at row " + std::to_string(row) + " (expected n = " +
                         std::to_string(values.size()) + ", got " + std::to_string(n) + ")");
    values.push_back(c);
  }
  if (values.size() < 2) throw domain_error("ingest: no data rows");
  if (auto why = multiplicativity_violation(values); !why.empty()) throw domain_error("ingest: " + why);
  return {field, m, Provenance::Ingested, std::move(values)};
}

inline CoefficientTable ingest_coefficients(const std::string& path, const FieldDescriptor& field, int m) {
  std::ifstream in(path);
  if (!in) throw domain_error("ingest: cannot open '" + path + "'");
  return read_coefficients_csv(in, field, m);
}

/// Sum' over n <= x with the n = x term halved.
inline double halved_partial_sum(const CoefficientTable& t, const Rational& x) {
  if (x.num() <= 0) throw domain_error("halved_partial_sum: x must be positive");
  const std::int64_t top = x.floor();
  if (top > t.limit()) throw domain_error("halved_partial_sum: x exceeds table limit");
  const auto& v = t.raw();
  std::uint64_t whole = 0;
  const std::int64_t last = x.is_integer() ? top - 1 : top;
  for (std::int64_t n = 1; n <= last; ++n) whole += v[static_cast<std::size_t>(n)];
  double s = static_cast<double>(whole);
  if (x.is_integer()) s += 0.5 * static_cast<double>(v[static_cast<std::size_t>(top)]);
  return s;
}

struct RieszSumValue {
  int order = 0;
  Rational x;
  double value = 0.0;
};

/// (1/rho!) Sum'_{n <= x} (x - n)^rho values[n].
inline RieszSumValue riesz_direct(const CoefficientTable& t, int rho, const Rational& x) {
  if (rho < 0) throw domain_error("riesz_direct: order must be non-negative");
  if (rho == 0) return {0, x, halved_partial_sum(t, x)};
  if (x.num() <= 0) throw domain_error("riesz_direct: x must be positive");
  const std::int64_t top = x.floor();
  if (top > t.limit()) throw domain_error("riesz_direct: x exceeds table limit");
  const auto& v = t.raw();
  long double s = 0.0L;
  for (std::int64_t n = 1; n <= top; ++n) {
    const long double gap = static_cast<long double>(x.num() - n * x.den()) / static_cast<long double>(x.den());
    long double w = 1.0L;
    for (int k = 0; k < rho; ++k) w *= gap;
    s += w * static_cast<long double>(v[static_cast<std::size_t>(n)]);
  }
  long double fact = 1.0L;
  for (int k = 2; k <= rho; ++k) fact *= k;
  return {rho, x, static_cast<double>(s / fact)};
}

}  // namespace piltz
