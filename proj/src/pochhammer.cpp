#include "qrds/pochhammer.hpp"

#include <stdexcept>
#include <string>

#include "qrds/errors.hpp"

namespace qrds {

std::int64_t PochhammerSpec::length(std::int64_t x) const {
  const std::int64_t len = length_scale * x + length_shift;
  if (len < 0) {
    throw BadLength("Pochhammer length " + std::to_string(len) + " at argument " +
                    std::to_string(x));
  }
  return len;
}

LaurentSeries qpoch(const PochhammerSpec& spec, std::int64_t n, Exponent order) {
  LaurentSeries s = LaurentSeries::one(order);
  multiply_qpoch(s, spec, n);
  return s;
}

void multiply_qpoch(LaurentSeries& s, const PochhammerSpec& spec, std::int64_t n) {
  const std::int64_t len = spec.length(n);
  for (std::int64_t i = 0; i < len; ++i) s.mul_binomial(spec.sign, spec.factor_power(n, i));
}

void divide_qpoch(LaurentSeries& s, const PochhammerSpec& spec, std::int64_t n) {
  const std::int64_t len = spec.length(n);
  for (std::int64_t i = 0; i < len; ++i) s.div_binomial(spec.sign, spec.factor_power(n, i));
}

bool advances_incrementally(const PochhammerSpec& spec) {
  return spec.power_scale == 0 && spec.length_scale >= 0;
}

void advance_qpoch(LaurentSeries& s, const PochhammerSpec& spec, std::int64_t n, bool divide) {
  if (!advances_incrementally(spec)) {
    throw std::logic_error("Pochhammer start power depends on the argument");
  }
  const std::int64_t from = spec.length(n);
  const std::int64_t to = spec.length(n + 1);
  for (std::int64_t i = from; i < to; ++i) {
    const Exponent e = spec.factor_power(n, i);
    if (divide) {
      s.div_binomial(spec.sign, e);
    } else {
      s.mul_binomial(spec.sign, e);
    }
  }
}

}  // namespace qrds
