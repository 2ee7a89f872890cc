#include "morava/space.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "morava/binomial.hpp"

namespace morava {

Integer GemFactor::group_order() const {
  Integer n = 1;
  for (unsigned f : invariant_factors) n *= f;
  return n;
}

std::string GemFactor::group_name() const {
  if (invariant_factors.empty()) return "C1";
  std::string out;
  for (unsigned f : invariant_factors) {
    if (!out.empty()) out += "x";
    out += "C" + std::to_string(f);
  }
  return out;
}

namespace {

bool factor_is_p_group(const GemFactor& f, long long p) {
  for (unsigned m : f.invariant_factors) {
    unsigned x = m;
    while (x % static_cast<unsigned>(p) == 0) x /= static_cast<unsigned>(p);
    if (x != 1) return false;
  }
  return true;
}

bool order_is_p_power(Integer x, long long p) {
  while (x % p == 0) x /= p;
  return x == 1;
}

}  // namespace

SpacePtr SpaceExpr::point() {
  auto node = std::shared_ptr<SpaceExpr>(new SpaceExpr());
  node->kind_ = Kind::Point;
  return node;
}

SpacePtr SpaceExpr::empty() {
  auto node = std::shared_ptr<SpaceExpr>(new SpaceExpr());
  node->kind_ = Kind::Empty;
  return node;
}

SpacePtr SpaceExpr::em(std::vector<unsigned> invariant_factors,
                       unsigned degree) {
  return gem({GemFactor{std::move(invariant_factors), degree}});
}

SpacePtr SpaceExpr::gem(std::vector<GemFactor> factors) {
  for (auto& f : factors) {
    for (unsigned m : f.invariant_factors)
      if (m == 0)
        throw std::invalid_argument("gem: cyclic factor of order 0");
    std::erase(f.invariant_factors, 1u);
  }
  // Trivial factors contribute nothing.
  std::erase_if(factors, [](const GemFactor& f) {
    return f.invariant_factors.empty();
  });
  if (factors.empty()) return point();
  auto node = std::shared_ptr<SpaceExpr>(new SpaceExpr());
  node->kind_ = Kind::Gem;
  node->factors_ = std::move(factors);
  return node;
}

SpacePtr SpaceExpr::classifying(FiniteGroup G) {
  auto node = std::shared_ptr<SpaceExpr>(new SpaceExpr());
  node->kind_ = Kind::Classifying;
  node->group_ = std::make_shared<const FiniteGroup>(std::move(G));
  return node;
}

SpacePtr SpaceExpr::cup_fiber2(unsigned m, long long p) {
  if (m == 0) throw std::invalid_argument("cup_fiber2: m must be >= 1");
  if (!is_prime(p) || p == 2)
    throw std::domain_error("cup_fiber2: p must be an odd prime");
  auto node = std::shared_ptr<SpaceExpr>(new SpaceExpr());
  node->kind_ = Kind::CupFiber2;
  node->cup_m_ = m;
  node->cup_p_ = p;
  return node;
}

SpacePtr SpaceExpr::product(SpacePtr a, SpacePtr b) {
  if (!a || !b) throw std::invalid_argument("product: null operand");
  auto node = std::shared_ptr<SpaceExpr>(new SpaceExpr());
  node->kind_ = Kind::Product;
  node->children_ = {std::move(a), std::move(b)};
  return node;
}

SpacePtr SpaceExpr::coproduct(SpacePtr a, SpacePtr b) {
  if (!a || !b) throw std::invalid_argument("coproduct: null operand");
  auto node = std::shared_ptr<SpaceExpr>(new SpaceExpr());
  node->kind_ = Kind::Coproduct;
  node->children_ = {std::move(a), std::move(b)};
  return node;
}

SpacePtr SpaceExpr::pushout(SpacePtr a, SpacePtr b, SpacePtr c) {
  if (!a || !b || !c) throw std::invalid_argument("pushout: null operand");
  auto node = std::shared_ptr<SpaceExpr>(new SpaceExpr());
  node->kind_ = Kind::Pushout;
  node->children_ = {std::move(a), std::move(b), std::move(c)};
  return node;
}

Rational chi(const SpacePtr& X, long long n, long long p) {
  if (!X) throw std::invalid_argument("chi: null space");
  if (n < 0) throw std::domain_error("chi: n must be >= 0");
  if (!is_prime(p)) throw std::domain_error("chi: p must be prime");

  auto key = std::make_pair(p, n);
  {
    std::lock_guard<std::mutex> lock(X->cache_mutex_);
    if (auto it = X->chi_cache_.find(key); it != X->chi_cache_.end())
      return it->second;
  }

  Rational out;
  switch (X->kind()) {
    case SpaceExpr::Kind::Point:
      out = 1;
      break;
    case SpaceExpr::Kind::Empty:
      out = 0;
      break;
    case SpaceExpr::Kind::Gem: {
      out = 1;
      for (const auto& f : X->gem_factors()) {
        if (f.degree == 0) {
          out *= Rational(f.group_order());
          continue;
        }
        if (!factor_is_p_group(f, p))
          throw std::domain_error("chi: GEM factor " + f.group_name() +
                                  " is not a group at the working prime");
        out *= Rational(pow_integer(f.group_order(), binomial(n, f.degree)));
      }
      break;
    }
    case SpaceExpr::Kind::Classifying: {
      std::shared_ptr<ChiBgEvaluator> ev;
      {
        std::lock_guard<std::mutex> lock(X->cache_mutex_);
        auto& slot = X->bg_cache_[p];
        if (!slot)
          slot = std::make_shared<ChiBgEvaluator>(X->group(), p);
        ev = slot;
      }
      out = Rational(ev->chi(n));
      break;
    }
    case SpaceExpr::Kind::CupFiber2:
      if (X->cup_p() != p)
        throw std::domain_error("chi: cup fiber lives at p = " +
                                std::to_string(X->cup_p()));
      out = cup_fiber_chi(X->cup_m(), p, n);
      break;
    case SpaceExpr::Kind::Product:
      out = chi(X->child(0), n, p) * chi(X->child(1), n, p);
      break;
    case SpaceExpr::Kind::Coproduct:
      out = chi(X->child(0), n, p) + chi(X->child(1), n, p);
      break;
    case SpaceExpr::Kind::Pushout:
      out = chi(X->child(0), n, p) + chi(X->child(1), n, p) -
            chi(X->child(2), n, p);
      break;
  }

  std::lock_guard<std::mutex> lock(X->cache_mutex_);
  X->chi_cache_.emplace(key, out);
  return out;
}

long long truncation_degree(const SpacePtr& X) {
  if (!X) throw std::invalid_argument("truncation_degree: null space");
  switch (X->kind()) {
    case SpaceExpr::Kind::Point:
    case SpaceExpr::Kind::Empty:
      return 0;
    case SpaceExpr::Kind::Gem: {
      long long d = 0;
      for (const auto& f : X->gem_factors())
        d = std::max(d, static_cast<long long>(f.degree));
      return d;
    }
    case SpaceExpr::Kind::Classifying:
      return X->group().order() > 1 ? 1 : 0;
    case SpaceExpr::Kind::CupFiber2:
      return 2ll * X->cup_m() - 1;
    case SpaceExpr::Kind::Product:
    case SpaceExpr::Kind::Coproduct:
      return std::max(truncation_degree(X->child(0)),
                      truncation_degree(X->child(1)));
    case SpaceExpr::Kind::Pushout:
      return std::max({truncation_degree(X->child(0)),
                       truncation_degree(X->child(1)),
                       truncation_degree(X->child(2))});
  }
  return 0;
}

Rational homotopy_cardinality(const SpacePtr& X, long long p) {
  if (!X) throw std::invalid_argument("homotopy_cardinality: null space");
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  switch (X->kind()) {
    case SpaceExpr::Kind::Point:
      return 1;
    case SpaceExpr::Kind::Empty:
      return 0;
    case SpaceExpr::Kind::Gem: {
      Rational out = 1;
      for (const auto& f : X->gem_factors()) {
        if (f.degree >= 1 && !factor_is_p_group(f, p))
          throw std::domain_error("homotopy_cardinality: GEM factor " +
                                  f.group_name() +
                                  " is not a group at the working prime");
        out *= pow_rational(Rational(f.group_order()),
                            (f.degree % 2 == 0) ? 1 : -1);
      }
      return out;
    }
    case SpaceExpr::Kind::Classifying:
      return p_typical_cardinality(X->group(), p);
    case SpaceExpr::Kind::CupFiber2:
      if (X->cup_p() != p)
        throw std::domain_error("cup fiber lives at p = " +
                                std::to_string(X->cup_p()));
      return 1;
    case SpaceExpr::Kind::Product:
      return homotopy_cardinality(X->child(0), p) *
             homotopy_cardinality(X->child(1), p);
    case SpaceExpr::Kind::Coproduct:
      return homotopy_cardinality(X->child(0), p) +
             homotopy_cardinality(X->child(1), p);
    case SpaceExpr::Kind::Pushout:
      return homotopy_cardinality(X->child(0), p) +
             homotopy_cardinality(X->child(1), p) -
             homotopy_cardinality(X->child(2), p);
  }
  return 0;
}

std::string describe(const SpacePtr& X) {
  if (!X) return "?";
  switch (X->kind()) {
    case SpaceExpr::Kind::Point:
      return "pt";
    case SpaceExpr::Kind::Empty:
      return "0";
    case SpaceExpr::Kind::Gem: {
      std::string out;
      for (const auto& f : X->gem_factors()) {
        if (!out.empty()) out += " x ";
        out += "K(" + f.group_name() + "," + std::to_string(f.degree) + ")";
      }
      return out;
    }
    case SpaceExpr::Kind::Classifying: {
      const auto& G = X->group();
      std::string nm =
          G.name().empty() ? "G" + std::to_string(G.order()) : G.name();
      return "B(" + nm + ")";
    }
    case SpaceExpr::Kind::CupFiber2:
      return "CupFiber2(m=" + std::to_string(X->cup_m()) +
             ",p=" + std::to_string(X->cup_p()) + ")";
    case SpaceExpr::Kind::Product:
      return "(" + describe(X->child(0)) + " x " + describe(X->child(1)) + ")";
    case SpaceExpr::Kind::Coproduct:
      return "(" + describe(X->child(0)) + " + " + describe(X->child(1)) + ")";
    case SpaceExpr::Kind::Pushout:
      return "pushout(" + describe(X->child(0)) + ", " +
             describe(X->child(1)) + "; " + describe(X->child(2)) + ")";
  }
  return "?";
}

std::string PSmallReport::summary() const {
  std::string out = accepted ? "accepted" : "rejected";
  for (const auto& n : notes) out += "\n  - " + n;
  return out;
}

namespace {

void validate_walk(const SpacePtr& X, long long p, PSmallReport& rep) {
  switch (X->kind()) {
    case SpaceExpr::Kind::Point:
    case SpaceExpr::Kind::Empty:
      return;
    case SpaceExpr::Kind::Gem:
      for (const auto& f : X->gem_factors())
        if (f.degree >= 1 && !factor_is_p_group(f, p)) {
          rep.accepted = false;
          rep.notes.push_back("GEM factor " + f.group_name() + " in degree " +
                              std::to_string(f.degree) + " is not a " +
                              std::to_string(p) + "-group");
        }
      return;
    case SpaceExpr::Kind::Classifying:
      if (!order_is_p_power(Integer(X->group().order()), p))
        rep.notes.push_back("B(" + X->group().name() + ") is not a " +
                            std::to_string(p) +
                            "-space; handled via its p-typical part");
      return;
    case SpaceExpr::Kind::CupFiber2:
      if (X->cup_p() != p) {
        rep.accepted = false;
        rep.notes.push_back("cup fiber constructed at p = " +
                            std::to_string(X->cup_p()) +
                            ", working prime is " + std::to_string(p));
      }
      return;
    case SpaceExpr::Kind::Pushout:
      rep.notes.push_back(
          "pushout node: chi extends formally and may leave the genuine "
          "space world");
      [[fallthrough]];
    case SpaceExpr::Kind::Product:
    case SpaceExpr::Kind::Coproduct:
      for (size_t i = 0; i < X->child_count(); ++i)
        validate_walk(X->child(i), p, rep);
      return;
  }
}

}  // namespace

PSmallReport validate_p_small(const SpacePtr& X, long long p) {
  if (!X) throw std::invalid_argument("validate_p_small: null space");
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  PSmallReport rep;
  validate_walk(X, p, rep);
  return rep;
}

Rational cup_fiber_chi(unsigned m, long long p, long long n) {
  if (m == 0) throw std::invalid_argument("cup_fiber_chi: m must be >= 1");
  if (!is_prime(p) || p == 2)
    throw std::domain_error("cup_fiber_chi: p must be an odd prime");
  if (n < -1) throw std::domain_error("cup_fiber_chi: n must be >= -1");

  Rational q(p);
  Rational sum = 0;
  for (unsigned k = 0; k < m; ++k) {
    Rational piece = pow_rational(q, Integer(k) * (Integer(k) - 1));
    for (unsigned i = 1; i <= k; ++i)
      piece *= pow_rational(q, 2 * Integer(i) - 1) - 1;
    piece *= qbinomial(n + 1, 2 * k, q);
    sum += piece;
  }
  Rational out =
      pow_rational(q, binomial(Integer(n), 2 * m - 1) - Integer(n)) * sum;
  if (n >= 0 && denominator(out) != 1)
    throw std::logic_error("cup_fiber_chi: non-integral value at n >= 0");
  return out;
}

Integer skew_rank_count(unsigned n, unsigned k, long long p) {
  if (!is_prime(p)) throw std::domain_error("skew_rank_count: p must be prime");
  Rational q(p);
  Rational out = pow_rational(q, Integer(k) * (Integer(k) - 1));
  for (unsigned i = 1; i <= k; ++i)
    out *= pow_rational(q, 2 * Integer(i) - 1) - 1;
  out *= qbinomial(n, 2 * k, q);
  if (denominator(out) != 1 || out < 0)
    throw std::logic_error("skew_rank_count: formula left the integers");
  return numerator(out);
}

Integer s_count_brute(unsigned d, unsigned m, unsigned n, long long p,
                      const GroupBudget& budget) {
  if (d == 0 || m == 0)
    throw std::invalid_argument("s_count_brute: d, m must be >= 1");
  if (!is_prime(p)) throw std::domain_error("s_count_brute: p must be prime");
  if (n > 20) throw budget_error("s_count_brute: n too large");

  // Basis of Lambda^k(F_p^n): k-subsets of {0..n-1} as bitmasks, sorted.
  auto subsets = [&](unsigned k) {
    std::vector<uint32_t> out;
    if (k > n) return out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
      if (static_cast<unsigned>(__builtin_popcount(mask)) == k)
        out.push_back(mask);
    return out;
  };
  auto index_of = [](const std::vector<uint32_t>& basis, uint32_t mask) {
    return static_cast<size_t>(
        std::lower_bound(basis.begin(), basis.end(), mask) - basis.begin());
  };
  // Sign of merging two disjoint index sets: parity of the number of pairs
  // (i in a, j in b) with i > j.
  auto merge_sign = [](uint32_t a, uint32_t b) {
    int inv = 0;
    for (uint32_t rest = a; rest; rest &= rest - 1) {
      unsigned i = static_cast<unsigned>(__builtin_ctz(rest));
      inv += __builtin_popcount(b & ((1u << i) - 1));
    }
    return (inv % 2 == 0) ? 1 : -1;
  };

  std::vector<uint32_t> base = subsets(d);
  size_t B = base.size();
  double total_estimate = 1;
  for (size_t i = 0; i < B; ++i) total_estimate *= static_cast<double>(p);
  if (total_estimate > static_cast<double>(budget.max_tuples))
    throw budget_error("s_count_brute: p^binom(n,d) exceeds the tuple budget");

  // Wedge of a degree-a element with the fixed degree-d element.
  auto wedge = [&](const std::vector<long long>& w, unsigned a,
                   const std::vector<long long>& omega) {
    std::vector<uint32_t> src = subsets(a), dst = subsets(a + d);
    std::vector<long long> out(dst.size(), 0);
    for (size_t i = 0; i < src.size(); ++i) {
      if (w[i] == 0) continue;
      for (size_t j = 0; j < B; ++j) {
        if (omega[j] == 0 || (src[i] & base[j])) continue;
        size_t t = index_of(dst, src[i] | base[j]);
        out[t] = (out[t] + merge_sign(src[i], base[j]) * w[i] * omega[j]) % p;
      }
    }
    return out;
  };

  Integer count = 0;
  std::vector<long long> omega(B, 0);
  while (true) {
    // omega^m vanishes identically beyond degree n.
    bool vanishes = (static_cast<unsigned long long>(m) * d > n);
    if (!vanishes) {
      std::vector<long long> power(omega);
      unsigned deg = d;
      for (unsigned step = 1; step < m; ++step) {
        power = wedge(power, deg, omega);
        deg += d;
      }
      vanishes = std::all_of(power.begin(), power.end(),
                             [&](long long c) { return c % p == 0; });
    }
    if (vanishes) ++count;

    size_t pos = 0;
    while (pos < B && omega[pos] == p - 1) omega[pos++] = 0;
    if (pos == B) break;
    ++omega[pos];
  }
  return count;
}

Rational ofun(const SpacePtr& gem, long long n) {
  if (!gem || gem->kind() != SpaceExpr::Kind::Gem)
    throw std::domain_error("ofun: defined for GEM expressions only");
  Rational out = 1;
  for (const auto& f : gem->gem_factors()) {
    if (f.degree == 0) {
      out *= Rational(f.group_order());
      continue;
    }
    out *= pow_rational(Rational(f.group_order()),
                        -binomial(Integer(n) - 1, f.degree - 1));
  }
  return out;
}

namespace {

Integer denominator_bound_walk(const SpacePtr& X, long long p) {
  switch (X->kind()) {
    case SpaceExpr::Kind::Classifying: {
      Integer ord(X->group().order());
      return order_is_p_power(ord, p) ? Integer(1) : ord;
    }
    case SpaceExpr::Kind::Product:
    case SpaceExpr::Kind::Coproduct:
    case SpaceExpr::Kind::Pushout: {
      Integer out = 1;
      for (size_t i = 0; i < X->child_count(); ++i)
        out *= denominator_bound_walk(X->child(i), p);
      return out;
    }
    default:
      return 1;
  }
}

}  // namespace

ChiSequence chi_sequence(const SpacePtr& X, long long p) {
  if (!X) throw std::invalid_argument("chi_sequence: null space");
  ChiSequence s;
  s.label = describe(X);
  s.p = p;
  s.degree = truncation_degree(X);
  s.denominator_bound = denominator_bound_walk(X, p);
  s.value = [X, p](long long n) { return chi(X, n, p); };
  return s;
}

ChiSequence chi_sequence(const ExpoPoly& e, long long degree,
                         std::string label) {
  ChiSequence s;
  s.label = std::move(label);
  s.p = e.prime();
  s.degree = degree;
  Integer bound = 1;
  for (const auto& t : e.terms())
    bound = boost::multiprecision::lcm(bound, denominator(t.c));
  s.denominator_bound = bound;
  s.value = [e](long long n) { return e.eval(n); };
  return s;
}

ChiSequence chi_sequence_for_group(const FiniteGroup& G, long long p,
                                   const GroupBudget& budget) {
  ChiSequence s;
  std::string nm = G.name().empty() ? "G" + std::to_string(G.order()) : G.name();
  s.label = "B(" + nm + ")";
  s.p = p;
  s.degree = G.order() > 1 ? 1 : 0;
  s.denominator_bound =
      order_is_p_power(Integer(G.order()), p) ? Integer(1) : Integer(G.order());
  auto ev = std::make_shared<ChiBgEvaluator>(G, p, budget);
  s.value = [ev](long long n) { return Rational(ev->chi(n)); };
  return s;
}

}  // namespace morava
