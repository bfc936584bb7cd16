#include "seidelpoly/real_roots.hpp"

#include <algorithm>
#include <cassert>

namespace seidelpoly {

namespace {

int sign_at_infinity(const RatPoly& q, bool negative) {
  int s = sgn(q.leading());
  if (negative && q.degree() % 2 == 1) s = -s;
  return s;
}

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// Smallest power of two strictly exceeding the Cauchy bound 1 + max|a_i/a_0|.
Rational root_radius(const RatPoly& p) {
  Rational m = 0;
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
    Rational r = abs(p[i] / p.leading());
    if (r > m) m = r;
  }
  Rational bound = m + 1;
  Rational radius = 1;
  while (radius <= bound) radius *= 2;
  return radius;
}

}  // namespace

int sign_at(const IntPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  const Integer& u = x.get_num();
  const Integer& v = x.get_den();
  if (v == 1) return sgn(evaluate(p, u));
  Integer acc = p.leading();
  Integer vp = 1;
  for (std::size_t j = 1; j < p.coeffs().size(); ++j) {
    vp *= v;
    acc = acc * u + p[j] * vp;
  }
  return sgn(acc);
}

SturmChain::SturmChain(const RatPoly& p) {
  require(!p.is_zero(), "Sturm chain of the zero polynomial");
  RatPoly q0 = squarefree_part(p);
  chain_.push_back(q0);
  if (q0.degree() >= 1) {
    chain_.push_back(derivative(q0));
    while (true) {
      RatPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
  }
  for (auto& q : chain_) {
    IntPoly prim = primitive_part(q);
    // primitive_part forces a positive leading coefficient; restore the sign.
    if (sgn(q.leading()) < 0) prim = -prim;
    integer_chain_.push_back(prim);
    q = to_rat(prim);
  }
}

std::vector<int> SturmChain::signs_at_minus_infinity() const {
  std::vector<int> v;
  for (const auto& q : chain_) v.push_back(sign_at_infinity(q, true));
  return v;
}

std::vector<int> SturmChain::signs_at_plus_infinity() const {
  std::vector<int> v;
  for (const auto& q : chain_) v.push_back(sign_at_infinity(q, false));
  return v;
}

int SturmChain::variations_at_minus_infinity() const { return count_variations(signs_at_minus_infinity()); }
int SturmChain::variations_at_plus_infinity() const { return count_variations(signs_at_plus_infinity()); }

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> s;
  s.reserve(integer_chain_.size());
  for (const auto& q : integer_chain_) s.push_back(sign_at(q, x));
  return count_variations(s);
}

namespace {

// Divides out the positive content.
void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// A positive multiple of rem(a, b), over Z.
std::vector<Integer> positive_pseudo_remainder(std::vector<Integer> r, const std::vector<Integer>& b) {
  const Integer lc = abs(b.front());
  const int sign_lc = sgn(b.front());
  while (r.size() >= b.size()) {
    const Integer lead = sign_lc * r.front();
    for (auto& c : r) c *= lc;
    for (std::size_t k = 0; k < b.size(); ++k) r[k] -= lead * b[k];
    std::size_t z = 0;
    while (z < r.size() && r[z] == 0) ++z;
    r.erase(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(z));
    make_primitive(r);
  }
  return r;
}

}  // namespace

bool is_real_rooted(const IntPoly& p) {
  require(!p.is_zero(), "is_real_rooted: zero polynomial");
  const int n = p.degree();
  if (n <= 1) return true;
  // Signed remainder chain of p and p' ending at gcd(p, p'); its variation
  // drop at infinity counts the distinct real roots.
  std::vector<std::vector<Integer>> chain{p.coeffs(), derivative(p).coeffs()};
  for (auto& c : chain) make_primitive(c);
  while (true) {
    std::vector<Integer> r = positive_pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  int v_minus = 0, v_plus = 0, last_minus = 0, last_plus = 0;
  for (const auto& c : chain) {
    int s = sgn(c.front());
    int sm = (c.size() % 2 == 0) ? -s : s;
    if (last_plus && s != last_plus) ++v_plus;
    if (last_minus && sm != last_minus) ++v_minus;
    last_plus = s;
    last_minus = sm;
  }
  const int distinct = n - (static_cast<int>(chain.back().size()) - 1);
  return v_minus - v_plus == distinct;
}

bool is_real_rooted(const RatPoly& p) {
  require(!p.is_zero(), "is_real_rooted: zero polynomial");
  return is_real_rooted(primitive_part(p));
}

int count_roots_in(const RatPoly& p, const Rational& lo, const Rational& hi) {
  require(!p.is_zero(), "count_roots_in: zero polynomial");
  require(lo < hi, "count_roots_in: empty interval");
  require(sgn(evaluate(p, lo)) != 0 && sgn(evaluate(p, hi)) != 0, "count_roots_in: an endpoint is a root");
  SturmChain sc(p);
  return sc.count_half_open(lo, hi);
}

namespace {

// One bisection step on a box with a sign change of sqf across it.
void bisect_once(const IntPoly& sqf, RootBox& box) {
  Rational mid = box.midpoint();
  int sm = sign_at(sqf, mid);
  if (sm == 0) {
    box.lo = box.hi = mid;
    return;
  }
  if (sm == sign_at(sqf, box.lo))
    box.lo = mid;
  else
    box.hi = mid;
}

void snap_rational_root(const IntPoly& sqf, RootBox& box) {
  if (box.is_exact()) return;
  // Rational roots of a primitive integer polynomial lie on (1/lc) Z.
  Rational grid(Integer(1), abs(sqf.leading()));
  while (!box.is_exact() && box.hi - box.lo >= grid) bisect_once(sqf, box);
  if (box.is_exact()) return;
  Rational scaled = box.lo / grid;
  Integer k;
  mpz_cdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational candidate = Rational(k) * grid;
  if (candidate > box.lo && candidate < box.hi && sign_at(sqf, candidate) == 0) box.lo = box.hi = candidate;
}

}  // namespace

RootBox refine_box(const RatPoly& sqf, RootBox box, const Rational& width) {
  IntPoly prim = primitive_part(sqf);
  while (!box.is_exact() && box.hi - box.lo > width) bisect_once(prim, box);
  return box;
}

std::vector<RootBox> isolate_roots(const RatPoly& p, const IsolationOptions& options) {
  require(!p.is_zero(), "isolate_roots: zero polynomial");
  std::vector<RootBox> boxes;
  if (p.degree() == 0) return boxes;
  SturmChain sc(p);
  const RatPoly& sqf_rat = sc.squarefree();
  require(sc.distinct_real_roots() == sqf_rat.degree(), "isolate_roots: polynomial is not real-rooted");
  const IntPoly sqf = primitive_part(sqf_rat);

  // Bisection on half-open intervals (lo, hi] using Sturm counts.
  Rational radius = root_radius(sqf_rat);
  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{-radius, radius, sc.count_half_open(-radius, radius)}};
  while (!stack.empty()) {
    Pending iv = stack.back();
    stack.pop_back();
    if (iv.count == 0) continue;
    if (iv.count == 1) {
      RootBox box{iv.lo, iv.hi, 1};
      if (sign_at(sqf, iv.hi) == 0) {
        box.lo = iv.hi;
      } else {
        // The root is strictly inside; move lo off a neighbouring root.
        while (sign_at(sqf, box.lo) == 0) {
          Rational mid = box.midpoint();
          if (sign_at(sqf, mid) == 0) {
            box.lo = box.hi = mid;
            break;
          }
          if (sc.count_half_open(mid, box.hi) == 1)
            box.lo = mid;
          else
            box.hi = mid;
        }
      }
      boxes.push_back(box);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    int left = sc.count_half_open(iv.lo, mid);
    stack.push_back({mid, iv.hi, iv.count - left});
    stack.push_back({iv.lo, mid, left});
  }
  std::sort(boxes.begin(), boxes.end(), [](const RootBox& a, const RootBox& b) { return a.lo < b.lo; });

  // Separate boxes that touch at a (non-root) shared endpoint.
  for (std::size_t i = 0; i + 1 < boxes.size(); ++i) {
    bool left_turn = true;
    while (boxes[i].hi >= boxes[i + 1].lo) {
      bisect_once(sqf, left_turn ? boxes[i] : boxes[i + 1]);
      left_turn = !left_turn;
    }
  }

  for (auto& box : boxes) {
    if (options.detect_rational_roots) snap_rational_root(sqf, box);
    if (options.max_width)
      while (!box.is_exact() && box.hi - box.lo > *options.max_width) bisect_once(sqf, box);
  }

  // Multiplicities: each distinct root is a root of exactly one Yun factor.
  std::vector<RatPoly> factors = squarefree_decomposition(p);
  std::vector<IntPoly> int_factors;
  for (const auto& f : factors) int_factors.push_back(primitive_part(f));
  for (auto& box : boxes) {
    int found = 0;
    for (std::size_t j = 0; j < int_factors.size(); ++j) {
      const IntPoly& f = int_factors[j];
      if (f.degree() <= 0) continue;
      bool here = box.is_exact() ? sign_at(f, box.lo) == 0 : sign_at(f, box.lo) != sign_at(f, box.hi);
      if (here) {
        found = static_cast<int>(j) + 1;
        break;
      }
    }
    ensure(found > 0, "isolate_roots: root without a squarefree factor");
    box.multiplicity = found;
  }
  return boxes;
}

std::vector<Rational> approx_sorted_roots(const RatPoly& p, const Rational& bound) {
  require(bound > 0, "approx_sorted_roots: bound must be positive");
  IsolationOptions opts;
  opts.max_width = 2 * bound;
  opts.detect_rational_roots = false;
  std::vector<Rational> out;
  for (const auto& box : isolate_roots(p, opts))
    for (int m = 0; m < box.multiplicity; ++m) out.push_back(box.midpoint());
  return out;
}

Integer round_half_away(const Rational& x) {
  Rational a = abs(x) + Rational(1, 2);
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return sgn(x) < 0 ? Integer(-f) : f;
}

std::vector<Integer> end_points(const RatPoly& P, const Rational& w1, const Rational& w2) {
  require(P.degree() >= 3, "end_points: deg P must be at least 3");
  auto real_rooted_at = [&P](const Integer& c) { return is_real_rooted(P + RatPoly::constant(Rational(c))); };
  std::vector<Integer> out;
  Integer r1 = round_half_away(w1);
  if (real_rooted_at(r1))
    out.push_back(r1);
  else if (real_rooted_at(r1 + 1))
    out.push_back(r1 + 1);
  Integer r2 = round_half_away(w2);
  if (real_rooted_at(r2))
    out.push_back(r2);
  else if (real_rooted_at(r2 - 1))
    out.push_back(r2 - 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool interlaces(const RatPoly& q, const RatPoly& p) {
  require(p.degree() >= 2 && q.degree() == p.degree() - 1, "interlaces: need deg q = deg p - 1 >= 1");
  require(p.is_monic() && q.is_monic(), "interlaces: polynomials must be monic");
  require(is_real_rooted(p) && is_real_rooted(q), "interlaces: polynomials must be real-rooted");

  // Shared roots are those of g = gcd(p, q); isolating Min(p q) gives one
  // box per distinct root of either polynomial, in increasing order.
  std::vector<RootBox> boxes = isolate_roots(squarefree_part(p * q));
  auto multiplicities = [&boxes](const RatPoly& f) {
    std::vector<IntPoly> factors;
    for (const auto& a : squarefree_decomposition(f)) factors.push_back(primitive_part(a));
    std::vector<int> mult(boxes.size(), 0);
    for (std::size_t b = 0; b < boxes.size(); ++b)
      for (std::size_t j = 0; j < factors.size(); ++j) {
        if (factors[j].degree() <= 0) continue;
        const RootBox& box = boxes[b];
        bool here = box.is_exact() ? sign_at(factors[j], box.lo) == 0
                                   : sign_at(factors[j], box.lo) != sign_at(factors[j], box.hi);
        if (here) mult[b] = static_cast<int>(j) + 1;
      }
    return mult;
  };
  std::vector<int> mp = multiplicities(p), mq = multiplicities(q);
  // Expand to sorted multisets of root ranks and compare ranks.
  std::vector<std::size_t> lambda, mu;
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    lambda.insert(lambda.end(), static_cast<std::size_t>(mp[b]), b);
    mu.insert(mu.end(), static_cast<std::size_t>(mq[b]), b);
  }
  ensure(lambda.size() == static_cast<std::size_t>(p.degree()) && mu.size() == static_cast<std::size_t>(q.degree()),
         "interlaces: root multiplicities do not match degrees");
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (lambda[i] > mu[i] || mu[i] > lambda[i + 1]) return false;
  return true;
}

}  // namespace seidelpoly
