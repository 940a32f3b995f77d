#include "graphsq/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace graphsq {

namespace {

// Ascending-coefficient polynomial over the rationals.
using RPoly = std::vector<Rational>;
// Ascending-coefficient polynomial over the integers.
using IPoly = std::vector<BigInt>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

RPoly derivative(const RPoly& p) {
  RPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Polynomial long division; returns {quotient, remainder}.
std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
  if (b.empty()) throw std::logic_error("polynomial division by zero");
  RPoly q(std::max<int>(degree(a) - degree(b) + 1, 0));
  while (!a.empty() && degree(a) >= degree(b)) {
    const int shift = degree(a) - degree(b);
    const Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

RPoly monic(RPoly p) {
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RPoly gcd(RPoly a, RPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(a);
}

// Positive rescaling to a primitive integer polynomial (signs preserved).
IPoly primitive(const RPoly& p) {
  BigInt den = 1;
  for (const auto& c : p) {
    const BigInt& d = boost::multiprecision::denominator(c);
    den = den / boost::multiprecision::gcd(den, d) * d;
  }
  IPoly out;
  BigInt content = 0;
  for (const auto& c : p) {
    BigInt v = boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c));
    content = boost::multiprecision::gcd(content, v);
    out.push_back(v);
  }
  if (content > 1)
    for (auto& v : out) v /= content;
  return out;
}

RPoly to_rational(const IPoly& p) {
  RPoly r(p.begin(), p.end());
  trim(r);
  return r;
}

// Sign of p(a/b) for b > 0, evaluated as the homogeneous form
// sum c_i a^i b^(d-i).
int sign_at(const IPoly& p, const Rational& x) {
  const BigInt& a = boost::multiprecision::numerator(x);
  const BigInt& b = boost::multiprecision::denominator(x);
  BigInt acc = 0;
  BigInt bpow = 1;
  // Horner in the homogeneous form: acc = acc * a + c_i * b^(d-i).
  const int d = static_cast<int>(p.size()) - 1;
  std::vector<BigInt> bpows(p.size());
  for (int i = 0; i <= d; ++i) {
    bpows[i] = bpow;
    bpow *= b;
  }
  for (int i = d; i >= 0; --i) acc = acc * a + p[i] * bpows[d - i];
  return acc.sign();
}

}  // namespace

namespace detail {

/// Sturm sequence of the square-free part of a polynomial.
class SturmChain {
 public:
  explicit SturmChain(const RPoly& p) {
    RPoly q = p;
    trim(q);
    if (degree(q) >= 1) {
      RPoly g = gcd(q, derivative(q));
      if (degree(g) >= 1) q = divmod(q, g).first;
    }
    squarefree_ = primitive(q);
    RPoly a = q;
    RPoly b = derivative(q);
    chain_.push_back(primitive(a));
    while (!b.empty()) {
      chain_.push_back(primitive(b));
      RPoly r = divmod(a, b).second;
      for (auto& c : r) c = -c;
      a = std::move(b);
      b = std::move(r);
    }
    for (const auto& s : chain_) at_infinity_.push_back(s.back().sign());
  }

  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& s : chain_) {
      int sg = sign_at(s, x);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  }

  int variations_at_infinity() const {
    int count = 0, last = 0;
    for (int sg : at_infinity_) {
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  }

  /// Distinct roots in (lo, hi].
  int roots_in(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }
  int roots_above(const Rational& t) const { return variations(t) - variations_at_infinity(); }
  bool is_root(const Rational& x) const { return sign_at(squarefree_, x) == 0; }
  const IPoly& squarefree() const { return squarefree_; }

 private:
  IPoly squarefree_;
  std::vector<IPoly> chain_;
  std::vector<int> at_infinity_;
};

}  // namespace detail

std::vector<BigInt> characteristic_polynomial(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kExactOrderCap)
    throw std::invalid_argument("exact oracle supports order <= " + std::to_string(kExactOrderCap));
  // Faddeev-LeVerrier: M_1 = I, c_{n-1} = -tr(A); M_k = A M_{k-1} + c_{n-k+1} I,
  // c_{n-k} = -tr(A M_k) / k. Entries stay far below 2^62 for n <= 12.
  using Mat = std::vector<std::int64_t>;
  auto checked_add = [](std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("characteristic polynomial overflow");
    return r;
  };
  std::vector<std::int64_t> c(n + 1, 0);  // c[k] = coefficient of x^k
  c[n] = 1;
  Mat m(n * n, 0), am(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    // am = A * m
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (Vertex t : g.neighbors(static_cast<Vertex>(i))) s = checked_add(s, m[t * n + j]);
        am[i * n + j] = s;
      }
    }
    std::int64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr = checked_add(tr, am[i * n + i]);
    if (tr % static_cast<std::int64_t>(k) != 0)
      throw std::logic_error("Faddeev-LeVerrier produced a non-integral coefficient");
    c[n - k] = -tr / static_cast<std::int64_t>(k);
    m = am;
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = checked_add(m[i * n + i], c[n - k]);
  }
  std::vector<BigInt> out;
  for (std::size_t k = n + 1; k-- > 0;) out.emplace_back(c[k]);
  return out;
}

namespace {

ExactRadius isolate(ExactRadius r, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("exact_radius: width must be > 0");
  const auto& chain = *r.chain;
  int v_lo = chain.variations(r.lo);
  int v_hi = chain.variations(r.hi);
  while (r.hi - r.lo > width || v_lo - v_hi > 1) {
    Rational mid = (r.lo + r.hi) / 2;
    int v_mid = chain.variations(mid);
    if (v_mid - v_hi >= 1) {
      r.lo = mid;
      v_lo = v_mid;
    } else {
      r.hi = mid;
      v_hi = v_mid;
    }
  }
  if (!r.integer_value) {
    // floor(hi) is the only integer candidate once the interval is narrower than 1.
    if (r.hi - r.lo < 1) {
      BigInt k = boost::multiprecision::numerator(r.hi) / boost::multiprecision::denominator(r.hi);
      if (Rational(k) > r.hi) k -= 1;
      if (Rational(k) > r.lo && chain.is_root(Rational(k))) r.integer_value = k;
    }
  }
  return r;
}

}  // namespace

ExactRadius exact_radius(const Graph& g, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("exact_radius: width must be > 0");
  ExactRadius r;
  r.charpoly = characteristic_polynomial(g);
  IPoly ascending(r.charpoly.rbegin(), r.charpoly.rend());
  r.chain = std::make_shared<detail::SturmChain>(to_rational(ascending));
  // Every eigenvalue lies in [-(n-1), n-1] and rho >= 0.
  r.lo = -1;
  r.hi = static_cast<long>(g.order());
  return isolate(std::move(r), width);
}

ExactRadius refine(const ExactRadius& r, const Rational& width) { return isolate(r, width); }

namespace {

template <class T>
std::strong_ordering three_way(const T& a, const T& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_radius(const ExactRadius& r, const Rational& t) {
  if (r.integer_value) {
    const Rational v(*r.integer_value);
    return three_way(v, t);
  }
  if (t <= r.lo) return std::strong_ordering::greater;
  if (t > r.hi) return std::strong_ordering::less;
  if (t < r.hi && r.chain->roots_in(t, r.hi) >= 1) return std::strong_ordering::greater;
  if (r.chain->is_root(t)) return std::strong_ordering::equal;
  return std::strong_ordering::less;
}

std::strong_ordering compare_radii(const ExactRadius& a0, const ExactRadius& b0) {
  if (a0.charpoly == b0.charpoly) return std::strong_ordering::equal;
  if (a0.integer_value && b0.integer_value) return three_way(*a0.integer_value, *b0.integer_value);
  ExactRadius a = a0, b = b0;
  std::optional<detail::SturmChain> common;
  for (int round = 0; round < 4096; ++round) {
    if (a.hi <= b.lo) return std::strong_ordering::less;
    if (b.hi <= a.lo) return std::strong_ordering::greater;
    if (!common) {
      RPoly g = gcd(to_rational(a.chain->squarefree()), to_rational(b.chain->squarefree()));
      common.emplace(g);
    }
    if (!common->squarefree().empty() && common->squarefree().size() > 1) {
      Rational lo = std::max(a.lo, b.lo);
      Rational hi = std::min(a.hi, b.hi);
      if (common->roots_in(lo, hi) >= 1) return std::strong_ordering::equal;
    }
    a = refine(a, a.width() / 2);
    b = refine(b, b.width() / 2);
  }
  throw std::logic_error("compare_radii: failed to separate radii");
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

double ExactRadius::midpoint_double() const { return to_double(midpoint()); }
double ExactRadius::lo_double() const { return to_double(lo); }
double ExactRadius::hi_double() const { return to_double(hi); }

std::string format_polynomial(const std::vector<BigInt>& p) {
  std::ostringstream os;
  const std::size_t deg = p.empty() ? 0 : p.size() - 1;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const BigInt& c = p[i];
    if (c == 0) continue;
    const std::size_t e = deg - i;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || e == 0) os << mag;
    if (e >= 1) os << "x";
    if (e >= 2) os << "^" << e;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rational(num, den);
    }
    std::string mantissa = text;
    long exponent = 0;
    auto e = text.find_first_of("eE");
    if (e != std::string::npos) {
      mantissa = text.substr(0, e);
      exponent = std::stol(text.substr(e + 1));
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
      negative = mantissa[0] == '-';
      mantissa.erase(0, 1);
    }
    auto dot = mantissa.find('.');
    if (dot != std::string::npos) {
      exponent -= static_cast<long>(mantissa.size() - dot - 1);
      mantissa.erase(dot, 1);
    }
    if (mantissa.empty() || !std::all_of(mantissa.begin(), mantissa.end(), ::isdigit))
      throw std::invalid_argument("malformed number");
    Rational value{BigInt(mantissa)};
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    value = exponent < 0 ? value / Rational(scale) : value * Rational(scale);
    return negative ? Rational(-value) : value;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
}

}  // namespace graphsq
