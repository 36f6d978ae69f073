#include "qrds/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "qrds/errors.hpp"

namespace qrds {

namespace {

const Integer kZeroInteger = 0;

void add_scaled(Integer& dst, const Integer& src, long c) {
  if (c == 1) {
    dst += src;
  } else if (c == -1) {
    dst -= src;
  } else if (c > 0) {
    mpz_addmul_ui(dst.get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(c));
  } else {
    mpz_submul_ui(dst.get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(-c));
  }
}

}  // namespace

Exponent saturating_add(Exponent a, Exponent b) {
  if (a == kExactOrder || b == kExactOrder) return kExactOrder;
  Exponent r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    return a > 0 ? kExactOrder : std::numeric_limits<Exponent>::min();
  }
  return r;
}

Exponent saturating_mul(Exponent a, Exponent b) {
  if (a == kExactOrder || b == kExactOrder) return kExactOrder;
  Exponent r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    return (a > 0) == (b > 0) ? kExactOrder : std::numeric_limits<Exponent>::min();
  }
  return r;
}

LaurentSeries LaurentSeries::zero(Exponent order) {
  LaurentSeries s;
  s.order_ = order;
  s.offset_ = order == kExactOrder ? 0 : std::min<Exponent>(0, saturating_add(order, 1));
  return s;
}

LaurentSeries LaurentSeries::one(Exponent order) { return monomial(1, 0, order); }

LaurentSeries LaurentSeries::monomial(const Rational& c, Exponent e, Exponent order) {
  LaurentSeries s = zero(order);
  if (e <= order && c != 0) {
    s.offset_ = e;
    s.num_.push_back(c.get_num());
    s.den_ = c.get_den();
  }
  return s;
}

LaurentSeries LaurentSeries::polynomial(Exponent offset, std::span<const long> coeffs) {
  LaurentSeries s;
  s.offset_ = offset;
  s.num_.reserve(coeffs.size());
  for (long c : coeffs) s.num_.emplace_back(c);
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::from_rationals(Exponent offset, std::span<const Rational> coeffs,
                                            Exponent order) {
  Integer den = 1;
  for (const Rational& c : coeffs) {
    if (c != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> nums;
  nums.reserve(coeffs.size());
  for (const Rational& c : coeffs) nums.emplace_back(c.get_num() * (den / c.get_den()));
  return from_integers(offset, std::move(nums), std::move(den), order);
}

LaurentSeries LaurentSeries::from_integers(Exponent offset, std::vector<Integer> numerators,
                                           Integer denominator, Exponent order) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  if (denominator < 0) {
    denominator = -denominator;
    for (auto& n : numerators) n = -n;
  }
  LaurentSeries s;
  s.offset_ = offset;
  s.order_ = order;
  s.den_ = std::move(denominator);
  s.num_ = std::move(numerators);
  s.normalize();
  return s;
}

bool LaurentSeries::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& x) { return x == 0; });
}

std::optional<Exponent> LaurentSeries::valuation() const {
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] != 0) return offset_ + static_cast<Exponent>(i);
  }
  return std::nullopt;
}

Exponent LaurentSeries::valuation_bound() const {
  if (auto v = valuation()) return *v;
  return saturating_add(order_, 1);
}

Rational LaurentSeries::coeff(Exponent e) const {
  if (e > order_) throw std::out_of_range("coefficient beyond series order");
  Rational r(numerator_at(e), den_);
  r.canonicalize();
  return r;
}

const Integer& LaurentSeries::numerator_at(Exponent e) const {
  if (e < offset_ || e > top()) return kZeroInteger;
  return num_[static_cast<std::size_t>(e - offset_)];
}

std::vector<std::pair<Exponent, Rational>> LaurentSeries::terms() const {
  std::vector<std::pair<Exponent, Rational>> out;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Rational r(num_[i], den_);
    r.canonicalize();
    out.emplace_back(offset_ + static_cast<Exponent>(i), std::move(r));
  }
  return out;
}

LaurentSeries LaurentSeries::truncated(Exponent order) const {
  LaurentSeries s = *this;
  s.truncate(order);
  return s;
}

LaurentSeries& LaurentSeries::truncate(Exponent order) {
  order_ = std::min(order_, order);
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::shift(Exponent s) {
  offset_ += s;
  order_ = saturating_add(order_, s);
  return *this;
}

LaurentSeries& LaurentSeries::negate() {
  for (auto& x : num_) x = -x;
  return *this;
}

LaurentSeries& LaurentSeries::scale(const Rational& c) {
  if (c == 0) {
    num_.clear();
    normalize();
    return *this;
  }
  for (auto& x : num_) x *= c.get_num();
  den_ *= c.get_den();
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::mul_binomial(long c, Exponent e) {
  if (c == 0) return *this;
  if (e < 0) {
    LaurentSeries moved = *this;
    moved.shift(e);
    if (c != 1) {
      for (auto& x : moved.num_) x *= c;
    }
    return *this -= moved;
  }
  if (e == 0) return scale(Rational(1 - c));
  if (num_.empty()) return *this;
  const Exponent new_top = std::min(order_, saturating_add(top(), e));
  ensure_stored_through(new_top);
  const auto step = static_cast<std::size_t>(e);
  for (std::size_t i = num_.size(); i-- > step;) add_scaled(num_[i], num_[i - step], -c);
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::div_binomial(long c, Exponent e) {
  if (e == 0) {
    if (c == 1) throw InvertZero("division by the zero factor (1 - q^0)");
    return scale(Rational(1, 1 - c));
  }
  if (c == 0) return *this;
  if (e < 0) {
    if (c != 1 && c != -1) throw std::invalid_argument("negative-power binomial needs c = +-1");
    shift(-e);
    div_binomial(c, -e);
    return scale(Rational(-c));
  }
  if (is_exact()) {
    throw std::domain_error("dividing an exact polynomial by a binomial needs a finite order");
  }
  if (num_.empty()) return *this;
  ensure_stored_through(order_);
  const auto step = static_cast<std::size_t>(e);
  for (std::size_t i = step; i < num_.size(); ++i) add_scaled(num_[i], num_[i - step], c);
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::add_monomial(const Rational& c, Exponent e) {
  if (e > order_) throw std::out_of_range("monomial beyond series order");
  if (c == 0) return *this;
  return *this += monomial(c, e);
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) {
  const Exponent new_order = std::min(order_, other.order_);
  if (other.num_.empty()) {
    order_ = new_order;
    normalize();
    return *this;
  }
  Integer other_factor = 1;
  if (den_ != other.den_) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), other.den_.get_mpz_t());
    other_factor = l / other.den_;
    rescale_denominator(l);
  }
  const Exponent hi = std::min(new_order, std::max(top(), other.top()));
  if (hi >= other.offset_) {
    const Exponent last = std::min(hi, other.top());
    if (num_.empty()) {
      offset_ = other.offset_;
      num_.assign(static_cast<std::size_t>(last - offset_ + 1), Integer(0));
    } else if (other.offset_ < offset_) {
      num_.insert(num_.begin(), static_cast<std::size_t>(offset_ - other.offset_), Integer(0));
      offset_ = other.offset_;
    }
    ensure_stored_through(last);
    const auto base = static_cast<std::size_t>(other.offset_ - offset_);
    const auto count = static_cast<std::size_t>(last - other.offset_ + 1);
    const bool unit = other_factor == 1;
    for (std::size_t i = 0; i < count; ++i) {
      const Integer& src = other.num_[i];
      if (src == 0) continue;
      if (unit) {
        num_[base + i] += src;
      } else {
        mpz_addmul(num_[base + i].get_mpz_t(), src.get_mpz_t(), other_factor.get_mpz_t());
      }
    }
  }
  order_ = new_order;
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& other) {
  LaurentSeries neg = other;
  neg.negate();
  return *this += neg;
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& other) {
  *this = *this * other;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const Exponent order = std::min(saturating_add(a.order_, b.valuation_bound()),
                                  saturating_add(b.order_, a.valuation_bound()));
  LaurentSeries r = LaurentSeries::zero(order);
  if (a.num_.empty() || b.num_.empty()) return r;
  const Exponent lo = a.offset_ + b.offset_;
  const Exponent hi = std::min(order, a.top() + b.top());
  if (hi < lo) return r;
  r.offset_ = lo;
  r.num_.assign(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  const auto span = static_cast<std::size_t>(hi - lo);
  for (std::size_t i = 0; i < a.num_.size() && i <= span; ++i) {
    if (a.num_[i] == 0) continue;
    const std::size_t jmax = std::min(b.num_.size() - 1, span - i);
    mpz_srcptr ai = a.num_[i].get_mpz_t();
    for (std::size_t j = 0; j <= jmax; ++j) {
      mpz_addmul(r.num_[i + j].get_mpz_t(), ai, b.num_[j].get_mpz_t());
    }
  }
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return !first_difference(a, b).has_value();
}

void LaurentSeries::normalize() {
  clamp_to_order();
  trim();
  if (den_ != 1 && !num_.empty()) {
    Integer g = den_;
    for (const auto& x : num_) {
      if (x == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) break;
    }
    if (g != 1) {
      for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }
  if (num_.empty()) den_ = 1;
}

void LaurentSeries::clamp_to_order() {
  if (order_ == kExactOrder || num_.empty()) return;
  if (top() > order_) {
    const Exponent keep = order_ - offset_ + 1;
    num_.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
  }
}

void LaurentSeries::trim() {
  while (!num_.empty() && num_.back() == 0) num_.pop_back();
  std::size_t lead = 0;
  while (lead < num_.size() && num_[lead] == 0) ++lead;
  if (lead > 0) {
    num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(lead));
    offset_ += static_cast<Exponent>(lead);
  }
  if (num_.empty()) {
    offset_ = order_ == kExactOrder ? 0 : std::min<Exponent>(0, saturating_add(order_, 1));
  }
}

void LaurentSeries::ensure_stored_through(Exponent e) {
  if (num_.empty()) return;
  if (e > top()) num_.resize(static_cast<std::size_t>(e - offset_ + 1), Integer(0));
}

void LaurentSeries::rescale_denominator(const Integer& new_den) {
  if (new_den == den_) return;
  const Integer f = new_den / den_;
  for (auto& x : num_) x *= f;
  den_ = new_den;
}

LaurentSeries ts_arith(const LaurentSeries& a, const LaurentSeries& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return a + b;
    case ArithKind::sub:
      return a - b;
    case ArithKind::mul:
      return a * b;
  }
  throw std::invalid_argument("unknown arithmetic kind");
}

LaurentSeries inverse(const LaurentSeries& a) {
  if (a.is_exact()) {
    throw std::domain_error("inverse of an exact polynomial needs an explicit order");
  }
  const auto v = a.valuation();
  if (!v) throw InvertZero("series is zero within its tracked window");
  const Exponent unit_order = a.order() - *v;  // order of the unit part q^-v a
  const Exponent n = unit_order + 1;           // coefficients of the inverse unit
  std::vector<Integer> u(static_cast<std::size_t>(n));
  for (Exponent i = 0; i < n; ++i) u[static_cast<std::size_t>(i)] = a.numerator_at(*v + i);
  const Integer& u0 = u[0];

  std::vector<Integer> out(static_cast<std::size_t>(n));
  Integer den = 1;
  if (u0 == 1 || u0 == -1) {
    // integral fast path: w_k = -u0 * sum_{i>=1} u_i w_{k-i}
    out[0] = u0;
    for (std::size_t k = 1; k < out.size(); ++k) {
      Integer acc = 0;
      for (std::size_t i = 1; i <= k; ++i) {
        if (u[i] != 0) mpz_addmul(acc.get_mpz_t(), u[i].get_mpz_t(), out[k - i].get_mpz_t());
      }
      out[k] = u0 == 1 ? Integer(-acc) : acc;
    }
  } else {
    std::vector<Rational> w(out.size());
    w[0] = Rational(1) / Rational(u0);
    for (std::size_t k = 1; k < w.size(); ++k) {
      Rational acc = 0;
      for (std::size_t i = 1; i <= k; ++i) {
        if (u[i] != 0) acc += Rational(u[i]) * w[k - i];
      }
      w[k] = -acc / Rational(u0);
    }
    LaurentSeries inv = LaurentSeries::from_rationals(-*v, w, a.order() - 2 * *v);
    inv.scale(Rational(a.denominator()));
    return inv;
  }
  // 1/(U/d) = d/U
  for (auto& x : out) x *= a.denominator();
  return LaurentSeries::from_integers(-*v, std::move(out), den, a.order() - 2 * *v);
}

LaurentSeries inverse(const LaurentSeries& a, Exponent order) { return inverse(a.truncated(order)); }

LaurentSeries dilate_shift(const LaurentSeries& f, Exponent t, Exponent s) {
  if (t < 1) throw std::invalid_argument("dilation factor must be positive");
  const Exponent order = saturating_add(saturating_mul(f.order(), t), s);
  if (f.top() < f.offset()) return LaurentSeries::zero(order);
  const Exponent lo = f.offset();
  std::vector<Integer> nums(static_cast<std::size_t>((f.top() - lo) * t + 1));
  for (Exponent e = lo; e <= f.top(); ++e) {
    nums[static_cast<std::size_t>((e - lo) * t)] = f.numerator_at(e);
  }
  return LaurentSeries::from_integers(lo * t + s, std::move(nums), f.denominator(), order);
}

LaurentSeries negate_variable(const LaurentSeries& f) {
  std::vector<Integer> nums;
  if (f.top() >= f.offset()) {
    nums.reserve(static_cast<std::size_t>(f.top() - f.offset() + 1));
    for (Exponent e = f.offset(); e <= f.top(); ++e) {
      const Integer& x = f.numerator_at(e);
      nums.push_back((e % 2 != 0) ? Integer(-x) : x);
    }
  }
  return LaurentSeries::from_integers(f.offset(), std::move(nums), f.denominator(), f.order());
}

std::optional<Exponent> first_difference(const LaurentSeries& a, const LaurentSeries& b,
                                         Exponent upto) {
  Exponent limit = std::min({upto, a.order(), b.order()});
  const Exponent stored_top = std::max(a.top(), b.top());
  limit = std::min(limit, stored_top);
  Exponent lo = std::numeric_limits<Exponent>::max();
  if (a.top() >= a.offset()) lo = std::min(lo, a.offset());
  if (b.top() >= b.offset()) lo = std::min(lo, b.offset());
  if (lo == std::numeric_limits<Exponent>::max()) return std::nullopt;
  const bool same_den = a.denominator() == b.denominator();
  for (Exponent e = lo; e <= limit; ++e) {
    const Integer& x = a.numerator_at(e);
    const Integer& y = b.numerator_at(e);
    if (same_den) {
      if (x != y) return e;
    } else if (x * b.denominator() != y * a.denominator()) {
      return e;
    }
  }
  return std::nullopt;
}

}  // namespace qrds
