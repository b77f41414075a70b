#include "regcyc/rational.hpp"

#include "regcyc/error.hpp"

namespace regcyc {

namespace mp = boost::multiprecision;

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

Rational parse_rational(const std::string& text) {
  auto bad = [&]() { return Error(ErrorCode::kInvalidArgument, "bad rational '" + text + "'"); };
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw bad();
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string frac = text.substr(dot + 1);
    if (frac.empty()) throw bad();
    for (char c : frac) {
      if (c < '0' || c > '9') throw bad();
    }
    std::string whole = text.substr(0, dot);
    bool negative = !whole.empty() && whole[0] == '-';
    BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt int_part = (whole.empty() || whole == "-" || whole == "+") ? BigInt(0) : parse_int(whole);
    BigInt magnitude = mp::abs(int_part) * scale + BigInt(frac);
    return Rational(negative ? BigInt(-magnitude) : magnitude, scale);
  }
  return Rational(parse_int(text));
}

std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::int64_t floor_int(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return static_cast<std::int64_t>(quot);
}

std::int64_t ceil_int(const Rational& q) { return -floor_int(-q); }

namespace {

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

int sign_with_root(const Rational& a, const Rational& b, const Rational& x) {
  int sa = sign_of(a);
  int sb = x > 0 ? sign_of(b) : 0;
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger magnitude wins.
  Rational diff = a * a - b * b * x;
  if (diff > 0) return sa;
  if (diff < 0) return sb;
  return 0;
}

int sign_with_two_roots(const Rational& p, const Rational& q, const Rational& x, const Rational& s,
                        const Rational& y) {
  // t = q sqrt(x) + s sqrt(y)
  int sq = x > 0 ? sign_of(q) : 0;
  int ss = y > 0 ? sign_of(s) : 0;
  int st;
  if (sq == 0) {
    st = ss;
  } else if (ss == 0 || sq == ss) {
    st = sq;
  } else {
    Rational diff = q * q * x - s * s * y;
    st = diff > 0 ? sq : (diff < 0 ? ss : 0);
  }
  int sp = sign_of(p);
  if (st == 0) return sp;
  if (sp == 0 || sp == st) return st;
  // p^2 - t^2 = p^2 - q^2 x - s^2 y - 2 q s sqrt(xy)
  int d = sign_with_root(p * p - q * q * x - s * s * y, -2 * q * s, x * y);
  if (d > 0) return sp;
  if (d < 0) return st;
  return 0;
}

bool rational_sqrt(const Rational& x, Rational& root) {
  if (x < 0) return false;
  BigInt num = numerator(x);
  BigInt den = denominator(x);
  BigInt rn = mp::sqrt(num);
  BigInt rd = mp::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(rn, rd);
  return true;
}

void sqrt_enclosure(const Rational& x, const Rational& width, Rational& lo, Rational& hi) {
  if (x < 0) throw Error(ErrorCode::kInvalidArgument, "square root of a negative number");
  if (rational_sqrt(x, lo)) {
    hi = lo;
    return;
  }
  lo = 0;
  hi = x > 1 ? x : Rational(1);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (mid * mid <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

}  // namespace regcyc
