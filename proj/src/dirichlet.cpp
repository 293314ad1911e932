#include "wrzeta/dirichlet.hpp"

#include <algorithm>
#include <cmath>

namespace wrzeta {

namespace {

std::int64_t checked_to_i64(i128 v, const char *what) {
  constexpr i128 lo = 0;
  constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi)
    throw MultiplicityOverflow(what);
  return std::int64_t(v);
}

// Sort by degree and fold duplicates with 128-bit accumulation.
std::vector<DirichletPoly::Term>
normalize_terms(std::vector<std::pair<u128, i128>> raw, const char *what) {
  std::sort(raw.begin(), raw.end(),
            [](const auto &x, const auto &y) { return x.first < y.first; });
  std::vector<DirichletPoly::Term> out;
  out.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    u128 deg = raw[i].first;
    i128 acc = 0;
    while (i < raw.size() && raw[i].first == deg) {
      acc += raw[i].second;
      ++i;
    }
    if (acc == 0)
      continue;
    if (acc < 0)
      throw MultiplicityOverflow(what);
    out.emplace_back(deg, checked_to_i64(acc, what));
  }
  return out;
}

} // namespace

DirichletPoly DirichletPoly::constant(std::int64_t c) {
  DirichletPoly p;
  if (c < 0)
    throw MultiplicityOverflow("negative multiplicity");
  if (c > 0)
    p.terms_.emplace_back(1, c);
  return p;
}

DirichletPoly DirichletPoly::from_terms(std::vector<Term> terms,
                                        std::optional<u128> truncation) {
  std::vector<std::pair<u128, i128>> raw;
  raw.reserve(terms.size());
  for (const auto &[n, r] : terms) {
    if (n < 1)
      throw BadInput("Dirichlet degree must be >= 1");
    if (truncation && n > *truncation)
      continue;
    raw.emplace_back(n, i128(r));
  }
  DirichletPoly p;
  p.terms_ = normalize_terms(std::move(raw), "negative multiplicity");
  p.truncation_ = truncation;
  return p;
}

std::int64_t DirichletPoly::coefficient(u128 degree) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), degree,
      [](const Term &t, u128 d) { return t.first < d; });
  if (it != terms_.end() && it->first == degree)
    return it->second;
  return 0;
}

DirichletPoly DirichletPoly::truncate(u128 bound) const {
  DirichletPoly p;
  for (const auto &t : terms_) {
    if (t.first > bound)
      break;
    p.terms_.push_back(t);
  }
  p.truncation_ = bound;
  return p;
}

std::complex<double> DirichletPoly::evaluate(std::complex<double> s) const {
  std::complex<double> acc = 0.0;
  for (const auto &[n, r] : terms_)
    acc += double(r) * std::exp(-s * std::log(u128_to_double(n)));
  return acc;
}

double DirichletPoly::evaluate(double s) const {
  double acc = 0.0;
  for (const auto &[n, r] : terms_)
    acc += double(r) * std::exp(-s * std::log(u128_to_double(n)));
  return acc;
}

i128 DirichletPoly::power_moment(unsigned k) const {
  i128 acc = 0;
  for (const auto &[n, r] : terms_) {
    u128 nk = checked_pow(n, k);
    if (nk > u128(std::numeric_limits<std::int64_t>::max()))
      throw MultiplicityOverflow("degree power exceeds 128-bit budget");
    acc += i128(r) * i128(std::int64_t(nk));
  }
  return acc;
}

DirichletPoly add(const DirichletPoly &a, const DirichletPoly &b) {
  std::vector<DirichletPoly::Term> raw;
  raw.reserve(a.size() + b.size());
  raw.insert(raw.end(), a.terms().begin(), a.terms().end());
  raw.insert(raw.end(), b.terms().begin(), b.terms().end());
  std::optional<u128> trunc;
  if (a.truncation() && b.truncation())
    trunc = std::min(*a.truncation(), *b.truncation());
  else if (a.truncation())
    trunc = a.truncation();
  else
    trunc = b.truncation();
  return DirichletPoly::from_terms(std::move(raw), trunc);
}

DirichletPoly mul(const DirichletPoly &a, const DirichletPoly &b, u128 bound) {
  // Iterate the smaller operand against the larger; the sorted order gives
  // the early exit once degree products pass the bound.
  const DirichletPoly &small = a.size() <= b.size() ? a : b;
  const DirichletPoly &large = a.size() <= b.size() ? b : a;
  std::vector<std::pair<u128, i128>> raw;
  for (const auto &[m, rm] : small.terms()) {
    if (m > bound)
      break;
    u128 limit = bound / m;
    for (const auto &[n, rn] : large.terms()) {
      if (n > limit)
        break;
      raw.emplace_back(m * n, i128(rm) * i128(rn));
    }
  }
  auto folded =
      normalize_terms(std::move(raw), "multiplicity overflow in mul");
  return DirichletPoly::from_terms(std::move(folded), bound);
}

DirichletPoly rescale(const DirichletPoly &a, unsigned e, u128 bound) {
  if (e == 0)
    throw BadInput("rescale exponent must be >= 1");
  std::vector<DirichletPoly::Term> out;
  for (const auto &[n, r] : a.terms()) {
    u128 p = 1;
    bool ok = true;
    for (unsigned i = 0; i < e; ++i) {
      if (!checked_mul(p, n, p) || p > bound) {
        ok = false;
        break;
      }
    }
    if (!ok)
      break; // degrees ascend, so every later n^e also exceeds the bound
    out.emplace_back(p, r);
  }
  return DirichletPoly::from_terms(std::move(out), bound);
}

DirichletPoly pow(const DirichletPoly &a, unsigned k, u128 bound) {
  DirichletPoly acc = DirichletPoly::one().truncate(bound);
  for (unsigned i = 0; i < k; ++i)
    acc = mul(acc, a, bound);
  return acc;
}

RationalDirichletPoly
RationalDirichletPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto &x, const auto &y) { return x.first < y.first; });
  RationalDirichletPoly p;
  std::size_t i = 0;
  while (i < terms.size()) {
    u128 deg = terms[i].first;
    Rational acc = 0;
    while (i < terms.size() && terms[i].first == deg) {
      acc += terms[i].second;
      ++i;
    }
    if (!acc.is_zero())
      p.terms_.emplace_back(deg, acc);
  }
  return p;
}

Rational RationalDirichletPoly::coefficient(u128 degree) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), degree,
      [](const Term &t, u128 d) { return t.first < d; });
  if (it != terms_.end() && it->first == degree)
    return it->second;
  return Rational(0);
}

void RationalDirichletPoly::add_term(u128 degree, const Rational &q) {
  if (q.is_zero())
    return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), degree,
      [](const Term &t, u128 d) { return t.first < d; });
  if (it != terms_.end() && it->first == degree) {
    it->second += q;
    if (it->second.is_zero())
      terms_.erase(it);
  } else {
    terms_.insert(it, {degree, q});
  }
}

RationalDirichletPoly &
RationalDirichletPoly::operator+=(const RationalDirichletPoly &o) {
  for (const auto &[f, q] : o.terms_)
    add_term(f, q);
  return *this;
}

std::complex<double>
RationalDirichletPoly::evaluate(std::complex<double> s) const {
  std::complex<double> acc = 0.0;
  for (const auto &[f, q] : terms_)
    acc += q.to_double() * std::exp(-s * std::log(u128_to_double(f)));
  return acc;
}

DirichletPoly
RationalDirichletPoly::to_integer_poly(std::optional<u128> truncation) const {
  std::vector<DirichletPoly::Term> out;
  for (const auto &[f, q] : terms_) {
    if (!q.is_integer())
      throw NonIntegralCoefficient("coefficient " + q.str() + " at degree " +
                                   u128_to_string(f) + " is not an integer");
    out.emplace_back(f, q.num());
  }
  return DirichletPoly::from_terms(std::move(out), truncation);
}

RationalDirichletPoly scale(const DirichletPoly &a, const Rational &c) {
  std::vector<RationalDirichletPoly::Term> out;
  out.reserve(a.size());
  for (const auto &[n, r] : a.terms())
    out.emplace_back(n, c * Rational(r));
  return RationalDirichletPoly::from_terms(std::move(out));
}

RationalDirichletPoly scale(const RationalDirichletPoly &a,
                            const Rational &c) {
  std::vector<RationalDirichletPoly::Term> out;
  out.reserve(a.terms().size());
  for (const auto &[n, q] : a.terms())
    out.emplace_back(n, c * q);
  return RationalDirichletPoly::from_terms(std::move(out));
}

RationalDirichletPoly mul(const RationalDirichletPoly &c,
                          const DirichletPoly &a, u128 bound) {
  std::vector<RationalDirichletPoly::Term> out;
  for (const auto &[f, q] : c.terms()) {
    if (f > bound)
      break;
    u128 limit = bound / f;
    for (const auto &[n, r] : a.terms()) {
      if (n > limit)
        break;
      out.emplace_back(f * n, q * Rational(r));
    }
  }
  return RationalDirichletPoly::from_terms(std::move(out));
}

DirichletPoly weyl_zeta(WeylType type, u128 bound) {
  // Dimension polynomials of the rank-2 simple compact groups; each is
  // increasing in both indices, so both loops stop at first overshoot.
  auto dim = [type](u128 a, u128 b) -> u128 {
    u128 m1 = a + 1, m2 = b + 1, m12 = a + b + 2;
    switch (type) {
    case WeylType::SU3:
      return m1 * m2 * m12 / 2;
    case WeylType::Spin5:
      return m1 * m2 * m12 * (2 * a + b + 3) / 6;
    case WeylType::G2:
      return m1 * m2 * m12 * (a + 2 * b + 3) * (a + 3 * b + 4) *
             (2 * a + 3 * b + 5) / 120;
    }
    return 0;
  };
  std::vector<DirichletPoly::Term> out;
  for (u128 a = 0;; ++a) {
    if (dim(a, 0) > bound)
      break;
    for (u128 b = 0;; ++b) {
      u128 d = dim(a, b);
      if (d > bound)
        break;
      out.emplace_back(d, 1);
    }
  }
  return DirichletPoly::from_terms(std::move(out), bound);
}

} // namespace wrzeta
