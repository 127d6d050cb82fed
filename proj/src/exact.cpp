#include "geodex/exact.hpp"

#include <cmath>
#include <cstdlib>
#include <regex>
#include <set>
#include <sstream>
#include <vector>

namespace geodex {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }
Int rat_ceil(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rational(std::string_view s) {
  static const std::regex re(R"(^(-?[0-9]+)(?:/([0-9]+))?$)");
  std::string str(s);
  std::smatch m;
  if (!std::regex_match(str, m, re)) throw ParseError("malformed rational literal: '" + str + "'");
  Int num(m[1].str());
  Int den = m[2].matched ? Int(m[2].str()) : Int(1);
  if (den == 0) throw ParseError("zero denominator in '" + str + "'");
  return make_rat(num, den);
}

std::pair<Int, Int> square_free_split(const Int& d) {
  if (d <= 0) throw std::domain_error("square_free_split needs d > 0");
  if (mpz_sizeinbase(d.get_mpz_t(), 2) > 80) throw std::domain_error("radicand too large to factor");
  Int f = 1, core = 1, r = d;
  // Trial division up to the cube root; the leftover has at most two prime factors.
  for (Int p = 2; p * p * p <= r; ++p) {
    int e = 0;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) f *= p;
    if (e % 2 == 1) core *= p;
  }
  if (mpz_perfect_square_p(r.get_mpz_t())) {
    Int s;
    mpz_sqrt(s.get_mpz_t(), r.get_mpz_t());
    f *= s;
  } else {
    core *= r;
  }
  return {f, core};
}

unsigned long max_precision_bits() {
  if (const char* env = std::getenv("GEODEX_MAX_PRECISION")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v >= 64) return v;
  }
  return 1UL << 16;
}

// ---------------------------------------------------------------- ExactReal

ExactReal::ExactReal(const Rat& q) {
  if (q != 0) terms_.emplace(Int(1), q);
}

void ExactReal::add_term(const Int& d, const Rat& q) {
  if (q == 0) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, q);
    return;
  }
  it->second += q;
  if (it->second == 0) terms_.erase(it);
}

ExactReal ExactReal::sqrt_term(const Rat& q, const Int& d) {
  auto [f, core] = square_free_split(d);
  ExactReal r;
  r.add_term(core, q * f);
  return r;
}

bool ExactReal::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rat ExactReal::rational_part() const {
  auto it = terms_.find(Int(1));
  return it == terms_.end() ? Rat(0) : it->second;
}

ExactReal ExactReal::irrational_part() const {
  ExactReal r = *this;
  r.terms_.erase(Int(1));
  return r;
}

ExactReal ExactReal::operator-() const {
  ExactReal r = *this;
  for (auto& [d, q] : r.terms_) q = -q;
  return r;
}

ExactReal& ExactReal::operator+=(const ExactReal& o) {
  for (const auto& [d, q] : o.terms_) add_term(d, q);
  return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& o) {
  for (const auto& [d, q] : o.terms_) add_term(d, -q);
  return *this;
}

ExactReal& ExactReal::operator*=(const ExactReal& o) {
  ExactReal r;
  for (const auto& [d1, q1] : terms_) {
    for (const auto& [d2, q2] : o.terms_) {
      // sqrt(d1*d2) = g*sqrt((d1/g)*(d2/g)) for square-free d1, d2 and g = gcd.
      Int g;
      mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
      r.add_term((d1 / g) * (d2 / g), q1 * q2 * g);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

std::pair<Rat, Rat> ExactReal::enclose(unsigned long bits) const {
  Rat lo = 0, hi = 0;
  Int scale = 1;
  scale <<= bits;
  Rat unit = make_rat(1, scale);
  for (const auto& [d, q] : terms_) {
    if (d == 1) {
      lo += q;
      hi += q;
      continue;
    }
    Int s, arg = d;
    arg <<= 2 * bits;
    mpz_sqrt(s.get_mpz_t(), arg.get_mpz_t());
    Rat l = Rat(s) * unit, h = Rat(s + 1) * unit;
    if (q > 0) {
      lo += q * l;
      hi += q * h;
    } else {
      lo += q * h;
      hi += q * l;
    }
  }
  return {lo, hi};
}

int ExactReal::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_.begin()->second);
  const unsigned long cap = max_precision_bits();
  for (unsigned long bits = 64;; bits *= 2) {
    auto [lo, hi] = enclose(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (bits >= cap) throw PrecisionError("sign undecided at " + std::to_string(bits) + " bits: " + str());
  }
}

Int ExactReal::floor() const {
  if (is_rational()) return rat_floor(rational_part());
  auto [lo, hi] = enclose(64);
  Int k = rat_floor(lo);
  while ((*this - ExactReal(Rat(k + 1))).sign() >= 0) ++k;
  while ((*this - ExactReal(Rat(k))).sign() < 0) --k;
  return k;
}

Int ExactReal::ceil() const { return -((-*this).floor()); }

ExactReal ExactReal::inverse() const {
  if (terms_.empty()) throw std::domain_error("inverse of zero");
  if (is_rational()) return ExactReal(Rat(1) / rational_part());
  // Coprime base of the radicands: every radicand is a product of distinct
  // base elements, and flipping the sign of one base root is a field automorphism.
  // Multiplying by each conjugate in turn leaves a rational norm.
  std::vector<Int> base;
  for (const auto& [d, q] : terms_)
    if (d != 1) base.push_back(d);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        Int g;
        mpz_gcd(g.get_mpz_t(), base[i].get_mpz_t(), base[j].get_mpz_t());
        if (g == 1) continue;
        Int x = base[i] / g, y = base[j] / g;
        base.erase(base.begin() + static_cast<long>(j));
        base.erase(base.begin() + static_cast<long>(i));
        for (const Int& v : {g, x, y})
          if (v != 1) base.push_back(v);
        changed = true;
      }
    }
  }
  ExactReal x = *this, y(Rat(1));
  for (const Int& b : base) {
    ExactReal conj = x;
    for (auto& [d, q] : conj.terms_)
      if (d % b == 0) q = -q;
    y *= conj;
    x *= conj;
  }
  if (!x.is_rational() || x.is_zero()) throw std::logic_error("norm computation failed");
  Rat inv = Rat(1) / x.rational_part();
  for (auto& [d, q] : y.terms_) q *= inv;
  return y;
}

double ExactReal::approx() const {
  double v = 0;
  for (const auto& [d, q] : terms_) v += q.get_d() * std::sqrt(d.get_d());
  return v;
}

std::string ExactReal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, q] : terms_) {
    std::string piece = rat_str(q);
    if (d != 1) piece += "*sqrt(" + d.get_str() + ")";
    if (!first && q > 0) out += "+";
    out += piece;
    first = false;
  }
  return out;
}

ExactReal ExactReal::parse(std::string_view s) {
  static const std::regex term(R"(([+-]?[0-9]+(?:/[0-9]+)?)(?:\*sqrt\(([0-9]+)\))?)");
  std::string str(s);
  if (str.empty()) throw ParseError("empty exact value");
  ExactReal r;
  auto it = str.cbegin();
  bool first = true;
  while (it != str.cend()) {
    std::smatch m;
    if (!std::regex_search(it, str.cend(), m, term, std::regex_constants::match_continuous))
      throw ParseError("malformed exact value: '" + str + "'");
    std::string coeff = m[1].str();
    if (!first && coeff[0] != '+' && coeff[0] != '-') throw ParseError("malformed exact value: '" + str + "'");
    if (coeff[0] == '+') coeff.erase(0, 1);
    Rat q = parse_rational(coeff);
    if (m[2].matched) {
      Int d(m[2].str());
      if (d == 0) throw ParseError("sqrt(0) in exact value");
      r += sqrt_term(q, d);
    } else {
      r += ExactReal(q);
    }
    it = m[0].second;
    first = false;
  }
  return r;
}

// ---------------------------------------------------------------- Turn

Turn Turn::rational(const Rat& q) {
  Turn t;
  t.rational_ = true;
  t.q_ = q;
  t.q_.canonicalize();
  return t;
}

Turn Turn::surd(const Int& a, const Int& b, const Int& c, const Int& d) {
  if (c == 0) throw std::domain_error("surd with zero denominator");
  if (b == 0) throw std::domain_error("surd with b = 0 is rational");
  if (d <= 1) throw std::domain_error("surd radicand must exceed 1");
  auto [f, core] = square_free_split(d);
  if (core == 1) throw std::domain_error("surd radicand " + d.get_str() + " is a perfect square");
  Int aa = a, bb = b * f, cc = c;
  if (cc < 0) {
    aa = -aa;
    bb = -bb;
    cc = -cc;
  }
  Int g;
  mpz_gcd(g.get_mpz_t(), aa.get_mpz_t(), bb.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
  Turn t;
  t.rational_ = false;
  t.a_ = aa / g;
  t.b_ = bb / g;
  t.c_ = cc / g;
  t.d_ = core;
  return t;
}

Turn Turn::parse(std::string_view s) {
  static const std::regex surd_re(R"(^\((-?[0-9]+)([+-])([0-9]+)\*sqrt\(([0-9]+)\)\)/([0-9]+)$)");
  std::string str(s);
  std::smatch m;
  if (std::regex_match(str, m, surd_re)) {
    Int a(m[1].str()), b(m[3].str()), d(m[4].str()), c(m[5].str());
    if (m[2].str() == "-") b = -b;
    if (c == 0) throw ParseError("zero denominator in '" + str + "'");
    if (b == 0) throw ParseError("surd literal with zero coefficient: '" + str + "'");
    if (d <= 1) throw ParseError("surd radicand must exceed 1: '" + str + "'");
    if (mpz_perfect_square_p(d.get_mpz_t())) throw ParseError("radicand is a perfect square: '" + str + "'");
    return surd(a, b, c, d);
  }
  if (!str.empty() && str[0] == '(') throw ParseError("malformed surd literal: '" + str + "'");
  return rational(parse_rational(str));
}

const Rat& Turn::rat() const {
  if (!rational_) throw std::logic_error("rat() on a surd turn");
  return q_;
}

Int Turn::floor() const {
  if (rational_) return rat_floor(q_);
  // b*sqrt(d) lies strictly between consecutive integers L and L+1
  // (b^2 d is never a perfect square), so floor((a + b sqrt d)/c) = floor((a + L)/c).
  Int sq = b_ * b_ * d_, r;
  mpz_sqrt(r.get_mpz_t(), sq.get_mpz_t());
  Int L = b_ > 0 ? r : Int(-r - 1);
  return floor_div(a_ + L, c_);
}

Int Turn::ceil() const {
  if (rational_) return rat_ceil(q_);
  return floor() + 1;  // never integral
}

Turn Turn::scaled(const Int& m) const {
  if (rational_) return rational(q_ * m);
  if (m == 0) return rational(Rat(0));
  return surd(a_ * m, b_ * m, c_, d_);
}

Turn Turn::operator-() const {
  if (rational_) return rational(-q_);
  return surd(-a_, -b_, c_, d_);
}

Turn Turn::plus(const Int& k) const {
  if (rational_) return rational(q_ + k);
  return surd(a_ + k * c_, b_, c_, d_);
}

ExactReal Turn::value() const {
  if (rational_) return ExactReal(q_);
  return ExactReal(make_rat(a_, c_)) + ExactReal::sqrt_term(make_rat(b_, c_), d_);
}

std::string Turn::str() const {
  if (rational_) return rat_str(q_);
  std::string sign = b_ < 0 ? "-" : "+";
  Int ab = abs(b_);
  return "(" + a_.get_str() + sign + ab.get_str() + "*sqrt(" + d_.get_str() + "))/" + c_.get_str();
}

bool operator==(const Turn& x, const Turn& y) {
  if (x.rational_ != y.rational_) return false;
  if (x.rational_) return x.q_ == y.q_;
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

}  // namespace geodex
