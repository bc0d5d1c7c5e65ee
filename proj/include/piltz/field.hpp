#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "piltz/common.hpp"

namespace piltz {

enum class FieldKind { Rationals, Quadratic, Generic };

/// Analytic data of a number field: degree, signature and discriminant.
struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  int degree = 1;
  int r1 = 1;
  int r2 = 0;
  std::int64_t disc = 1;
  std::int64_t abs_disc = 1;

  bool totally_real() const noexcept { return r2 == 0; }
  bool purely_imaginary() const noexcept { return r1 == 0; }
  bool has_zeta() const noexcept { return kind != FieldKind::Generic; }

  std::string name() const {
    switch (kind) {
      case FieldKind::Rationals: return "q";
      case FieldKind::Quadratic: return "quad:" + std::to_string(disc);
      case FieldKind::Generic: break;
    }
    return "generic:" + std::to_string(degree) + "," + std::to_string(r1) + "," + std::to_string(r2) + "," +
           std::to_string(disc);
  }

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

inline bool is_squarefree(std::int64_t n) {
  n = std::llabs(n);
  if (n == 0) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
    if (n % p == 0) n /= p;
  }
  return true;
}

/// True when D is the discriminant of Q or of a quadratic field.
inline bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 1) return true;
  if (D == 0) return false;
  const std::int64_t r = ((D % 4) + 4) % 4;
  if (r == 1) return is_squarefree(D);
  if (r != 0) return false;
  const std::int64_t m = D / 4;
  const std::int64_t rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

namespace detail {

// Jacobi symbol (a/n) for odd n > 0.
inline int jacobi(std::int64_t a, std::int64_t n) {
  a %= n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

}  // namespace detail

/// Kronecker symbol (D/n) for a fundamental discriminant D and n >= 1.
inline int kronecker_symbol(std::int64_t D, std::int64_t n) {
  if (!is_fundamental_discriminant(D))
    throw domain_error("kronecker_symbol: " + std::to_string(D) + " is not a fundamental discriminant");
  if (n < 1) throw domain_error("kronecker_symbol: n must be positive");
  int result = 1;
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (D % 2 == 0) return 0;
    const std::int64_t r = ((D % 8) + 8) % 8;
    if ((r == 3 || r == 5) && (twos % 2 == 1)) result = -result;
  }
  return result * detail::jacobi(D, n);
}

inline FieldDescriptor rationals() { return {}; }

inline FieldDescriptor quadratic_field(std::int64_t D) {
  if (D == 1 || !is_fundamental_discriminant(D))
    throw domain_error("quadratic_field: " + std::to_string(D) + " is not a fundamental discriminant");
  FieldDescriptor f;
  f.kind = FieldKind::Quadratic;
  f.degree = 2;
  f.r1 = D > 0 ? 2 : 0;
  f.r2 = D > 0 ? 0 : 1;
  f.disc = D;
  f.abs_disc = std::llabs(D);
  return f;
}

/// Descriptor for a field whose coefficients can only be ingested.
inline FieldDescriptor generic_field(int degree, int r1, int r2, std::int64_t disc) {
  if (degree < 1 || r1 < 0 || r2 < 0 || degree != r1 + 2 * r2)
    throw domain_error("generic field: degree must equal r1 + 2*r2 with non-negative signature");
  if (disc == 0) throw domain_error("generic field: discriminant must be nonzero");
  FieldDescriptor f;
  f.kind = FieldKind::Generic;
  f.degree = degree;
  f.r1 = r1;
  f.r2 = r2;
  f.disc = disc;
  f.abs_disc = std::llabs(disc);
  return f;
}

}  // namespace piltz
