#include "torimax/sturm.hpp"

#include <stdexcept>

namespace torimax {

RatPoly poly_normalize(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly poly_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long long>(i)));
  return poly_normalize(std::move(d));
}

RatPoly poly_rem(RatPoly num, const RatPoly& den) {
  if (den.empty()) throw std::logic_error("poly_rem: division by zero polynomial");
  const int dd = poly_degree(den);
  while (poly_degree(num) >= dd) {
    Rat factor = num.back() / den.back();
    int shift = poly_degree(num) - dd;
    for (int i = 0; i <= dd; ++i) num[i + shift] -= factor * den[i];
    num.pop_back(); // leading term cancels exactly
    num = poly_normalize(std::move(num));
    if (num.empty()) break;
  }
  return num;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  a = poly_normalize(std::move(a));
  b = poly_normalize(std::move(b));
  while (!b.empty()) {
    RatPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (Rat& c : a) c /= lead;
  }
  return a;
}

bool poly_squarefree(const RatPoly& p) {
  RatPoly q = poly_normalize(p);
  if (q.empty()) return false;
  if (poly_degree(q) == 0) return true;
  return poly_degree(poly_gcd(q, poly_derivative(q))) == 0;
}

Rat poly_eval(const RatPoly& p, const Rat& x) {
  Rat acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain;
  chain.push_back(poly_normalize(p));
  chain.push_back(poly_derivative(chain[0]));
  while (!chain.back().empty() && poly_degree(chain.back()) >= 0) {
    RatPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (Rat& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_rat(const Rat& x) {
  if (x > 0) return 1;
  if (x < 0) return -1;
  return 0;
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

} // namespace

int sturm_real_root_count(const RatPoly& p) {
  RatPoly q = poly_normalize(p);
  if (q.empty()) throw std::logic_error("sturm_real_root_count: zero polynomial");
  if (poly_degree(q) == 0) return 0;
  auto chain = sturm_chain(q);
  std::vector<int> at_neg, at_pos;
  for (const RatPoly& f : chain) {
    if (f.empty()) continue;
    int lead = sign_rat(f.back());
    int deg = poly_degree(f);
    at_pos.push_back(lead);
    at_neg.push_back(deg % 2 == 0 ? lead : -lead);
  }
  return variations(at_neg) - variations(at_pos);
}

int sturm_real_root_count_interval(const RatPoly& p, const Rat& a, const Rat& b) {
  RatPoly q = poly_normalize(p);
  if (q.empty()) throw std::logic_error("sturm_real_root_count_interval: zero polynomial");
  if (poly_degree(q) == 0) return 0;
  auto chain = sturm_chain(q);
  std::vector<int> at_a, at_b;
  for (const RatPoly& f : chain) {
    if (f.empty()) continue;
    at_a.push_back(sign_rat(poly_eval(f, a)));
    at_b.push_back(sign_rat(poly_eval(f, b)));
  }
  return variations(at_a) - variations(at_b);
}

} // namespace torimax
