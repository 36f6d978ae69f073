#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qrds {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponent = std::int64_t;

// Order value of a series whose every coefficient is known (a Laurent
// polynomial). Arithmetic on orders saturates at this value.
inline constexpr Exponent kExactOrder = std::numeric_limits<Exponent>::max();

Exponent saturating_add(Exponent a, Exponent b);
Exponent saturating_mul(Exponent a, Exponent b);

/// Truncated formal Laurent series in q with exact rational coefficients.
///
/// Coefficients are stored densely as integer numerators over one shared
/// positive denominator; the coefficient of q^(offset() + i) is
/// num[i] / den. Every coefficient with exponent <= order() is known, those
/// beyond are unknown. Exponents below offset() and stored-window gaps up to
/// order() are zero. Equality is mathematical: two series compare equal when
/// they agree on every exponent both of them know.
class LaurentSeries {
 public:
  /// The exact zero polynomial.
  LaurentSeries() = default;

  static LaurentSeries zero(Exponent order = kExactOrder);
  static LaurentSeries one(Exponent order = kExactOrder);
  static LaurentSeries monomial(const Rational& c, Exponent e, Exponent order = kExactOrder);
  /// Exact Laurent polynomial sum_i coeffs[i] q^(offset + i).
  static LaurentSeries polynomial(Exponent offset, std::span<const long> coeffs);
  static LaurentSeries from_rationals(Exponent offset, std::span<const Rational> coeffs,
                                      Exponent order);
  static LaurentSeries from_integers(Exponent offset, std::vector<Integer> numerators,
                                     Integer denominator, Exponent order);

  Exponent order() const { return order_; }
  bool is_exact() const { return order_ == kExactOrder; }
  Exponent offset() const { return offset_; }
  /// Highest stored exponent; offset() - 1 when nothing is stored.
  Exponent top() const { return offset_ + static_cast<Exponent>(num_.size()) - 1; }

  bool is_zero() const;
  std::optional<Exponent> valuation() const;
  /// Valuation, or order() + 1 (saturating) for a series that is zero as far as known.
  Exponent valuation_bound() const;

  Rational coeff(Exponent e) const;
  /// Numerator of the coefficient at e over denominator().
  const Integer& numerator_at(Exponent e) const;
  const Integer& denominator() const { return den_; }
  bool is_integral() const { return den_ == 1; }

  /// Nonzero coefficients in increasing exponent order.
  std::vector<std::pair<Exponent, Rational>> terms() const;

  LaurentSeries truncated(Exponent order) const;

  // In-place kernels. These are the primitives the term generators use to
  // move from one summand to the next without rebuilding products.
  LaurentSeries& truncate(Exponent order);
  LaurentSeries& shift(Exponent s);
  LaurentSeries& negate();
  LaurentSeries& scale(const Rational& c);
  /// *this *= (1 - c q^e)
  LaurentSeries& mul_binomial(long c, Exponent e);
  /// *this /= (1 - c q^e)
  LaurentSeries& div_binomial(long c, Exponent e);
  /// Adds c to the coefficient of q^e (e must be known).
  LaurentSeries& add_monomial(const Rational& c, Exponent e);

  LaurentSeries& operator+=(const LaurentSeries& other);
  LaurentSeries& operator-=(const LaurentSeries& other);
  LaurentSeries& operator*=(const LaurentSeries& other);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(LaurentSeries a) { return a.negate(); }
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

 private:
  void normalize();
  void trim();
  void clamp_to_order();
  void ensure_stored_through(Exponent e);
  void rescale_denominator(const Integer& new_den);

  Exponent offset_ = 0;
  Exponent order_ = kExactOrder;
  Integer den_ = 1;
  std::vector<Integer> num_;
};

enum class ArithKind { add, sub, mul };

LaurentSeries ts_arith(const LaurentSeries& a, const LaurentSeries& b, ArithKind kind);

/// Multiplicative inverse. The series must have finite order (an exact
/// polynomial needs an explicit target order, see the two-argument form).
LaurentSeries inverse(const LaurentSeries& a);
LaurentSeries inverse(const LaurentSeries& a, Exponent order);

/// g(q) = q^s f(q^t), t >= 1. Order of g is t * order(f) + s.
LaurentSeries dilate_shift(const LaurentSeries& f, Exponent t, Exponent s);

/// f(-q).
LaurentSeries negate_variable(const LaurentSeries& f);

/// Lowest exponent <= upto (and within both orders) where a and b differ.
std::optional<Exponent> first_difference(const LaurentSeries& a, const LaurentSeries& b,
                                         Exponent upto = kExactOrder);

}  // namespace qrds
