#ifndef LNAT_RATIONAL_HPP
#define LNAT_RATIONAL_HPP

// Exact rational scalars and vectors. Chain decompositions branch on exact
// equalities, so everything upstream of cost evaluation stays in mpq.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lnat {

using Int = std::int64_t;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RealVec = std::vector<double>;
using LatticePoint = std::vector<Int>;

inline Rat rat(Int numerator, Int denominator = 1) {
  if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(static_cast<long>(numerator), static_cast<long>(denominator));
  q.canonicalize();
  return q;
}

/// Exact conversion; every finite double is a dyadic rational.
inline Rat rat_from_double(double v) {
  if (!(v == v) || v > 1e300 || v < -1e300)
    throw std::invalid_argument("cannot convert non-finite double to rational");
  return Rat(v);
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline bool is_integral(const Rat& q) { return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0; }

inline Int floor_to_int(const Rat& q) {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!z.fits_slong_p()) throw std::overflow_error("rational floor out of int64 range");
  return static_cast<Int>(z.get_si());
}

inline Int ceil_to_int(const Rat& q) {
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!z.fits_slong_p()) throw std::overflow_error("rational ceil out of int64 range");
  return static_cast<Int>(z.get_si());
}

/// Parses "3", "-2", "3/4" and decimal forms like "1.25".
Rat parse_rational(const std::string& text);

/// Canonical text form: integer or "num/den".
std::string format_rational(const Rat& q);

inline RatVec rat_vec_from_doubles(const RealVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (double x : v) out.push_back(rat_from_double(x));
  return out;
}

inline RealVec rat_vec_to_doubles(const RatVec& v) {
  RealVec out;
  out.reserve(v.size());
  for (const Rat& q : v) out.push_back(q.get_d());
  return out;
}

inline RatVec rat_vec_from_lattice(const LatticePoint& z) {
  RatVec out;
  out.reserve(z.size());
  for (Int c : z) out.push_back(rat(c));
  return out;
}

}  // namespace lnat

#endif
