#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cgt/error.hpp"

namespace cgt::gf {

/// Exact arithmetic in GF(p^k), q = p^k <= 2^16.
///
/// Elements are encoded as integers in [0, q): the code of the element with
/// coefficient vector (c_0, ..., c_{k-1}) over GF(p) is sum c_i * p^i.  The
/// prime subfield therefore occupies codes 0..p-1 and code 1 is the identity.
/// This encoding is the one used by the CLI for matrix entries.
///
/// The modulus is the lexicographically least monic irreducible polynomial of
/// degree k over GF(p), coefficients compared low-degree-first, so a given
/// (p, k) always yields the same field model.
///
/// Immutable after construction; all query methods are const and thread-safe.
/// Multiplication/inverse tables are built eagerly for q <= 1024.
class Field {
 public:
  static std::shared_ptr<const Field> make(unsigned p, unsigned k);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned q() const { return q_; }

  /// Modulus coefficients c_0..c_k (monic, c_k = 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }

  unsigned add(unsigned a, unsigned b) const;
  unsigned sub(unsigned a, unsigned b) const;
  unsigned neg(unsigned a) const;
  unsigned mul(unsigned a, unsigned b) const;
  unsigned inv(unsigned a) const;  // DivisionByZero on 0
  unsigned pow(unsigned a, long long e) const;

  /// Frobenius power a^(p^e).  frobenius(a, k) == a for all a.
  unsigned frobenius(unsigned a, unsigned e) const;

  /// Embed an integer via the prime subfield (n mod p).
  unsigned from_int(long long n) const;

  /// Coefficient vector (length k) of an element code.
  std::vector<unsigned> coeffs(unsigned a) const;
  unsigned from_coeffs(const std::vector<unsigned>& c) const;

  /// Multiplicative order of a nonzero element.
  unsigned mult_order(unsigned a) const;

  /// A generator of the multiplicative group (least element code that works).
  unsigned generator() const;

 private:
  Field(unsigned p, unsigned k, std::vector<unsigned> modulus);

  unsigned mul_poly(unsigned a, unsigned b) const;  // table-free path

  unsigned p_, k_, q_;
  std::vector<unsigned> modulus_;
  std::vector<uint16_t> mul_table_;  // q*q entries when q <= 1024, else empty
  std::vector<uint16_t> inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Typed field element: a value code tied to its field.  Mixed-field
/// arithmetic raises MixedFields.
struct FieldElem {
  FieldPtr field;
  unsigned val = 0;

  FieldElem() = default;
  FieldElem(FieldPtr f, unsigned v) : field(std::move(f)), val(v) {}

  FieldElem operator+(const FieldElem& o) const { return {same(o), field->add(val, o.val)}; }
  FieldElem operator-(const FieldElem& o) const { return {same(o), field->sub(val, o.val)}; }
  FieldElem operator*(const FieldElem& o) const { return {same(o), field->mul(val, o.val)}; }
  FieldElem operator-() const { return {field, field->neg(val)}; }
  FieldElem inverse() const { return {field, field->inv(val)}; }
  FieldElem pow(long long e) const { return {field, field->pow(val, e)}; }
  FieldElem frobenius(unsigned e) const { return {field, field->frobenius(val, e)}; }

  bool operator==(const FieldElem& o) const { return val == o.val && field == o.field; }
  bool is_zero() const { return val == 0; }

 private:
  FieldPtr same(const FieldElem& o) const {
    require(field == o.field, "MixedFields", "elements of different fields");
    return field;
  }
};

bool is_prime(unsigned n);

}  // namespace cgt::gf
