#include "knotgrid/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace knotgrid {

namespace mp = boost::multiprecision;

Dyadic::Dyadic(Int mantissa, std::int32_t scale) : num_(std::move(mantissa)), scale_(scale) {
  if (scale < 0) throw std::invalid_argument("Dyadic: negative scale");
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    scale_ = 0;
    return;
  }
  while (scale_ > 0 && (num_ & 1) == 0) {
    num_ >>= 1;
    --scale_;
  }
}

Dyadic Dyadic::pow2(std::int64_t exponent) {
  Dyadic d;
  if (exponent >= 0) {
    d.num_ = Int(1) << static_cast<unsigned>(exponent);
    d.scale_ = 0;
  } else {
    d.num_ = 1;
    d.scale_ = static_cast<std::int32_t>(-exponent);
  }
  return d;
}

Dyadic Dyadic::operator-() const {
  Dyadic d = *this;
  d.num_ = -d.num_;
  return d;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  Dyadic d;
  d.scale_ = std::max(scale_, o.scale_);
  d.num_ = (num_ << static_cast<unsigned>(d.scale_ - scale_)) +
           (o.num_ << static_cast<unsigned>(d.scale_ - o.scale_));
  d.normalize();
  return d;
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
  Dyadic d;
  d.num_ = num_ * o.num_;
  d.scale_ = scale_ + o.scale_;
  d.normalize();
  return d;
}

int Dyadic::compare(const Dyadic& o) const {
  std::int32_t s = std::max(scale_, o.scale_);
  Int a = num_ << static_cast<unsigned>(s - scale_);
  Int b = o.num_ << static_cast<unsigned>(s - o.scale_);
  return a == b ? 0 : (a < b ? -1 : 1);
}

double Dyadic::to_double() const {
  if (num_ == 0) return 0.0;
  // Reduce the mantissa to at most 62 bits and track the binary exponent so
  // deep scales (2^-300 and below) convert without intermediate overflow.
  Int m = num_ < 0 ? Int(-num_) : num_;
  std::int64_t shift = 0;
  std::int64_t bits = static_cast<std::int64_t>(mp::msb(m)) + 1;
  if (bits > 62) {
    shift = bits - 62;
    m >>= static_cast<unsigned>(shift);
  }
  double v = static_cast<double>(m.convert_to<std::int64_t>());
  v = std::ldexp(v, static_cast<int>(shift - scale_));
  return num_ < 0 ? -v : v;
}

std::string Dyadic::to_decimal() const {
  Int m = num_ < 0 ? Int(-num_) : num_;
  std::string digits;
  if (scale_ == 0) {
    digits = m.str();
    return (num_ < 0 ? "-" : "") + digits;
  }
  Int five = 1;
  for (std::int32_t i = 0; i < scale_; ++i) five *= 5;
  const Int scaled = m * five;
  digits = scaled.str();
  if (static_cast<std::int64_t>(digits.size()) <= scale_) {
    digits.insert(0, static_cast<std::size_t>(scale_) - digits.size() + 1, '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(scale_), ".");
  // strip trailing zeros of the fraction (at least one digit stays)
  std::size_t last = digits.find_last_not_of('0');
  if (digits[last] == '.') ++last;
  digits.erase(last + 1);
  return (num_ < 0 ? "-" : "") + digits;
}

Dyadic Dyadic::parse_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Dyadic: empty decimal");
  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  std::int64_t frac = -1;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (frac >= 0) throw std::invalid_argument("Dyadic: two decimal points");
      frac = 0;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (frac >= 0) ++frac;
    } else {
      throw std::invalid_argument("Dyadic: bad character in decimal");
    }
  }
  if (digits.empty()) throw std::invalid_argument("Dyadic: no digits");
  if (frac < 0) frac = 0;
  // cpp_int would read a leading zero as an octal prefix
  const std::size_t first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  Int n(digits);
  // value = n / 10^frac = n / (2^frac * 5^frac); dyadic iff 5^frac divides n
  Int five = 1;
  for (std::int64_t i = 0; i < frac; ++i) five *= 5;
  if (n % five != 0) throw std::invalid_argument("Dyadic: value is not dyadic");
  Dyadic d(n / five, static_cast<std::int32_t>(frac));
  return neg ? -d : d;
}

Dyadic distance_squared(const DyadicVec3& a, const DyadicVec3& b) {
  return sqr(a.x - b.x) + sqr(a.y - b.y) + sqr(a.z - b.z);
}

Dyadic distance_squared_to_vertical_segment(const DyadicVec3& p,
                                            const Dyadic& sx, const Dyadic& sy,
                                            const Dyadic& z0, const Dyadic& z1) {
  Dyadic planar = sqr(p.x - sx) + sqr(p.y - sy);
  if (p.z < z0) return planar + sqr(z0 - p.z);
  if (p.z > z1) return planar + sqr(p.z - z1);
  return planar;
}

}  // namespace knotgrid
