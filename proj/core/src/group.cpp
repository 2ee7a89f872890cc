#include "morava/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace morava {

namespace {

std::string describe_triple(unsigned a, unsigned b, unsigned c) {
  return "(a,b,c) = (" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

bool is_p_power(unsigned ord, long long p) {
  while (ord % p == 0) ord /= static_cast<unsigned>(p);
  return ord == 1;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(unsigned order,
                                    std::vector<uint16_t> table,
                                    std::string name,
                                    const GroupBudget& budget) {
  if (order == 0) throw std::invalid_argument("group: order must be positive");
  if (order > budget.max_order)
    throw budget_error("group: order " + std::to_string(order) +
                       " exceeds budget " + std::to_string(budget.max_order));
  if (table.size() != static_cast<size_t>(order) * order)
    throw std::invalid_argument("group: table must be order x order");
  for (uint16_t v : table)
    if (v >= order)
      throw std::invalid_argument("group: table entry out of range");

  FiniteGroup G;
  G.order_ = order;
  G.table_ = std::move(table);
  G.name_ = std::move(name);
  G.precompute(budget);
  return G;
}

void FiniteGroup::precompute(const GroupBudget& budget) {
  const unsigned n = order_;
  auto mul = [&](unsigned a, unsigned b) { return table_[a * n + b]; };

  // Cancellation: every row and column is a permutation.
  std::vector<bool> seen(n);
  for (unsigned a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (unsigned b = 0; b < n; ++b) {
      if (seen[mul(a, b)])
        throw std::invalid_argument("group: row " + std::to_string(a) +
                                    " is not a permutation");
      seen[mul(a, b)] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (unsigned b = 0; b < n; ++b) {
      if (seen[mul(b, a)])
        throw std::invalid_argument("group: column " + std::to_string(a) +
                                    " is not a permutation");
      seen[mul(b, a)] = true;
    }
  }

  // Two-sided identity.
  unsigned e = n;
  for (unsigned a = 0; a < n && e == n; ++a) {
    bool ok = true;
    for (unsigned b = 0; b < n && ok; ++b)
      ok = mul(a, b) == b && mul(b, a) == b;
    if (ok) e = a;
  }
  if (e == n) throw std::invalid_argument("group: no identity element");
  identity_ = e;

  inverse_.assign(n, 0);
  for (unsigned a = 0; a < n; ++a) {
    unsigned inv = n;
    for (unsigned b = 0; b < n; ++b)
      if (mul(a, b) == e && mul(b, a) == e) {
        inv = b;
        break;
      }
    if (inv == n)
      throw std::invalid_argument("group: element " + std::to_string(a) +
                                  " has no inverse");
    inverse_[a] = static_cast<uint16_t>(inv);
  }

  // Associativity: exhaustive when cheap, randomized otherwise.  The sampled
  // check still reports a concrete witness triple on failure.
  auto check_triple = [&](unsigned a, unsigned b, unsigned c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw std::invalid_argument("group: associativity fails at " +
                                  describe_triple(a, b, c));
  };
  if (n <= 128) {
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        for (unsigned c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<unsigned> pick(0, n - 1);
    for (int i = 0; i < 200000; ++i)
      check_triple(pick(rng), pick(rng), pick(rng));
  }

  element_order_.assign(n, 0);
  for (unsigned a = 0; a < n; ++a) {
    unsigned x = a, ord = 1;
    while (x != e) {
      x = mul(x, a);
      ++ord;
    }
    element_order_[a] = static_cast<uint16_t>(ord);
  }

  commute_.assign(static_cast<size_t>(n) * n, false);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      commute_[static_cast<size_t>(a) * n + b] = mul(a, b) == mul(b, a);
  abelian_ = true;
  for (unsigned a = 0; a < n && abelian_; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      if (!commute(a, b)) {
        abelian_ = false;
        break;
      }
}

FiniteGroup FiniteGroup::cyclic(unsigned m, const GroupBudget& budget) {
  if (m == 0) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<uint16_t> t(static_cast<size_t>(m) * m);
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b)
      t[a * m + b] = static_cast<uint16_t>((a + b) % m);
  return from_table(m, std::move(t), "C" + std::to_string(m), budget);
}

namespace {

// Closure of a permutation set under composition, elements sorted lex;
// returns the rank table.
FiniteGroup perm_group(const std::vector<std::vector<uint8_t>>& generators,
                       std::string name, const GroupBudget& budget) {
  std::set<std::vector<uint8_t>> elems;
  size_t deg = generators.front().size();
  std::vector<uint8_t> id(deg);
  std::iota(id.begin(), id.end(), 0);
  elems.insert(id);
  std::vector<std::vector<uint8_t>> frontier = {id};
  while (!frontier.empty()) {
    std::vector<std::vector<uint8_t>> next;
    for (const auto& f : frontier)
      for (const auto& g : generators) {
        std::vector<uint8_t> h(deg);
        for (size_t i = 0; i < deg; ++i) h[i] = f[g[i]];
        if (elems.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<uint8_t>> list(elems.begin(), elems.end());
  unsigned n = static_cast<unsigned>(list.size());
  auto rank = [&](const std::vector<uint8_t>& p) {
    return static_cast<uint16_t>(
        std::lower_bound(list.begin(), list.end(), p) - list.begin());
  };
  std::vector<uint16_t> t(static_cast<size_t>(n) * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      std::vector<uint8_t> h(deg);
      for (size_t i = 0; i < deg; ++i) h[i] = list[a][list[b][i]];
      t[a * n + b] = rank(h);
    }
  return FiniteGroup::from_table(n, std::move(t), std::move(name), budget);
}

}  // namespace

FiniteGroup FiniteGroup::dihedral4() {
  return perm_group({{1, 2, 3, 0}, {3, 2, 1, 0}}, "D4", GroupBudget{});
}

FiniteGroup FiniteGroup::quaternion8() {
  // index = 2 * axis + (sign < 0), axes 1, i, j, k
  auto quat_mul = [](unsigned a, unsigned b) -> unsigned {
    int sa = (a & 1) ? -1 : 1, sb = (b & 1) ? -1 : 1;
    unsigned xa = a >> 1, xb = b >> 1;
    // axis product table with sign; 0 is the scalar
    static const int axis[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    int s = sa * sb * sign[xa][xb];
    return static_cast<unsigned>(2 * axis[xa][xb] + (s < 0 ? 1 : 0));
  };
  std::vector<uint16_t> t(64);
  for (unsigned a = 0; a < 8; ++a)
    for (unsigned b = 0; b < 8; ++b)
      t[a * 8 + b] = static_cast<uint16_t>(quat_mul(a, b));
  return from_table(8, std::move(t), "Q8");
}

FiniteGroup FiniteGroup::symmetric(unsigned m, const GroupBudget& budget) {
  if (m == 0) throw std::invalid_argument("symmetric: m must be positive");
  unsigned long long fact = 1;
  for (unsigned i = 2; i <= m; ++i) fact *= i;
  if (fact > budget.max_order)
    throw budget_error("symmetric: " + std::to_string(m) +
                       "! exceeds the order budget");
  std::vector<uint8_t> id(m);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<uint8_t>> gens;
  for (unsigned i = 0; i + 1 < m; ++i) {
    auto g = id;
    std::swap(g[i], g[i + 1]);
    gens.push_back(g);
  }
  if (gens.empty()) gens.push_back(id);
  return perm_group(gens, "S" + std::to_string(m), budget);
}

FiniteGroup FiniteGroup::heisenberg3() {
  // triples (a,b,c) over F_3 with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b')
  auto idx = [](unsigned a, unsigned b, unsigned c) { return 9 * a + 3 * b + c; };
  std::vector<uint16_t> t(27 * 27);
  for (unsigned a1 = 0; a1 < 3; ++a1)
    for (unsigned b1 = 0; b1 < 3; ++b1)
      for (unsigned c1 = 0; c1 < 3; ++c1)
        for (unsigned a2 = 0; a2 < 3; ++a2)
          for (unsigned b2 = 0; b2 < 3; ++b2)
            for (unsigned c2 = 0; c2 < 3; ++c2)
              t[idx(a1, b1, c1) * 27 + idx(a2, b2, c2)] =
                  static_cast<uint16_t>(idx((a1 + a2) % 3, (b1 + b2) % 3,
                                            (c1 + c2 + a1 * b2) % 3));
  return from_table(27, std::move(t), "He3");
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b,
                                        const GroupBudget& budget) {
  unsigned long long n = static_cast<unsigned long long>(a.order()) * b.order();
  if (n > budget.max_order)
    throw budget_error("direct_product: order exceeds budget");
  unsigned na = a.order(), nb = b.order(), nn = static_cast<unsigned>(n);
  std::vector<uint16_t> t(static_cast<size_t>(nn) * nn);
  for (unsigned x = 0; x < nn; ++x)
    for (unsigned y = 0; y < nn; ++y) {
      unsigned xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      t[x * nn + y] =
          static_cast<uint16_t>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  return from_table(nn, std::move(t), a.name() + "x" + b.name(), budget);
}

std::vector<std::vector<uint16_t>> FiniteGroup::conjugacy_classes() const {
  std::vector<bool> done(order_, false);
  std::vector<std::vector<uint16_t>> classes;
  for (unsigned g = 0; g < order_; ++g) {
    if (done[g]) continue;
    std::set<uint16_t> orbit;
    for (unsigned h = 0; h < order_; ++h)
      orbit.insert(static_cast<uint16_t>(conjugate(g, h)));
    classes.emplace_back(orbit.begin(), orbit.end());
    for (uint16_t x : classes.back()) done[x] = true;
  }
  return classes;
}

std::vector<uint16_t> FiniteGroup::centralizer(unsigned g) const {
  std::vector<uint16_t> out;
  for (unsigned h = 0; h < order_; ++h)
    if (commute(h, g)) out.push_back(static_cast<uint16_t>(h));
  return out;
}

FiniteGroup group_preset(const std::string& name, const GroupBudget& budget) {
  auto parse_atom = [&](const std::string& tok) -> FiniteGroup {
    if (tok == "D4") return FiniteGroup::dihedral4();
    if (tok == "Q8") return FiniteGroup::quaternion8();
    if (tok == "He3") return FiniteGroup::heisenberg3();
    if (tok.size() > 1 && (tok[0] == 'C' || tok[0] == 'S')) {
      unsigned m = 0;
      for (size_t i = 1; i < tok.size(); ++i) {
        if (!isdigit(static_cast<unsigned char>(tok[i])))
          throw std::invalid_argument("unknown group preset: '" + tok + "'");
        m = 10 * m + static_cast<unsigned>(tok[i] - '0');
      }
      return tok[0] == 'C' ? FiniteGroup::cyclic(m, budget)
                           : FiniteGroup::symmetric(m, budget);
    }
    throw std::invalid_argument("unknown group preset: '" + tok + "'");
  };
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : name) {
    if (ch == ' ') continue;
    if (ch == 'x') {
      toks.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  toks.push_back(cur);
  FiniteGroup G = parse_atom(toks[0]);
  for (size_t i = 1; i < toks.size(); ++i)
    G = FiniteGroup::direct_product(G, parse_atom(toks[i]), budget);
  return G;
}

bool Subgroup::contains(unsigned g) const {
  return std::binary_search(elements.begin(), elements.end(),
                            static_cast<uint16_t>(g));
}

bool Subgroup::contains(const Subgroup& other) const {
  return std::includes(elements.begin(), elements.end(),
                       other.elements.begin(), other.elements.end());
}

bool Subgroup::is_abelian() const {
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = i + 1; j < elements.size(); ++j)
      if (!group->commute(elements[i], elements[j])) return false;
  return true;
}

std::vector<uint16_t> p_power_order_elements(const FiniteGroup& G,
                                             long long p) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  std::vector<uint16_t> out;
  for (unsigned g = 0; g < G.order(); ++g)
    if (is_p_power(G.element_order(g), p)) out.push_back(static_cast<uint16_t>(g));
  return out;
}

ChiBgEvaluator::ChiBgEvaluator(FiniteGroup G, long long p, GroupBudget budget)
    : G_(std::make_shared<const FiniteGroup>(std::move(G))),
      p_(p),
      budget_(budget) {
  if (!is_prime(p)) throw std::domain_error("chi_bg: p must be prime");
}

Integer ChiBgEvaluator::chi(long long n) {
  if (n < 0) throw std::domain_error("chi_bg: n must be >= 0");
  if (n > budget_.max_chi_level)
    throw budget_error("chi_bg: level exceeds budget");
  std::vector<uint16_t> all(G_->order());
  std::iota(all.begin(), all.end(), 0);
  std::lock_guard<std::mutex> lock(mutex_);
  return chi_subset(all, n);
}

Integer ChiBgEvaluator::chi_subset(const std::vector<uint16_t>& H,
                                   long long n) {
  if (n == 0) return 1;
  auto key = std::make_pair(H, n);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const FiniteGroup& G = *G_;
  std::vector<uint16_t> P;
  for (uint16_t h : H)
    if (is_p_power(G.element_order(h), p_)) P.push_back(h);

  // Orbit reps of P under H-conjugation; smallest index represents.
  std::vector<bool> visited(G.order(), false);
  Integer total = 0;
  for (uint16_t g : P) {
    if (visited[g]) continue;
    for (uint16_t h : H) visited[G.conjugate(g, h)] = true;
    std::vector<uint16_t> C;
    for (uint16_t h : H)
      if (G.commute(h, g)) C.push_back(h);
    total += chi_subset(C, n - 1);
  }
  memo_.emplace(std::move(key), total);
  return total;
}

Integer chi_bg(const FiniteGroup& G, long long p, long long n,
               const GroupBudget& budget) {
  ChiBgEvaluator ev(G, p, budget);
  return ev.chi(n);
}

Integer brute_force_commuting_tuples(const FiniteGroup& G, long long p,
                                     long long n,
                                     const GroupBudget& budget) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  if (n < 0) throw std::domain_error("n must be >= 0");
  if (n == 0) return 1;

  std::vector<uint16_t> P = p_power_order_elements(G, p);
  double estimate = 1;
  for (long long i = 0; i < n; ++i) estimate *= static_cast<double>(P.size());
  if (estimate > static_cast<double>(budget.max_tuples))
    throw budget_error("brute force: |P|^n exceeds the tuple budget");

  // DFS over commuting tuples; candidates narrow as components are chosen,
  // so the visited set is far smaller than |P|^n in practice.
  std::vector<std::vector<uint16_t>> tuples;
  std::vector<uint16_t> current;
  auto dfs = [&](auto&& self, const std::vector<uint16_t>& cands) -> void {
    if (static_cast<long long>(current.size()) == n) {
      tuples.push_back(current);
      if (tuples.size() > budget.max_tuples)
        throw budget_error("brute force: tuple budget exhausted");
      return;
    }
    for (uint16_t g : cands) {
      std::vector<uint16_t> next;
      for (uint16_t h : cands)
        if (G.commute(h, g)) next.push_back(h);
      current.push_back(g);
      self(self, next);
      current.pop_back();
    }
  };
  dfs(dfs, P);

  // tuples is sorted lex by construction; count conjugation orbits.
  std::vector<bool> visited(tuples.size(), false);
  Integer orbits = 0;
  std::vector<uint16_t> image(n);
  for (size_t i = 0; i < tuples.size(); ++i) {
    if (visited[i]) continue;
    ++orbits;
    for (unsigned c = 0; c < G.order(); ++c) {
      for (long long k = 0; k < n; ++k)
        image[k] = static_cast<uint16_t>(G.conjugate(tuples[i][k], c));
      auto it = std::lower_bound(tuples.begin(), tuples.end(), image);
      if (it == tuples.end() || *it != image)
        throw std::logic_error("brute force: conjugate tuple missing");
      visited[it - tuples.begin()] = true;
    }
  }
  return orbits;
}

namespace {

// <H, g> for H an abelian subgroup and g commuting with H: the cosets H g^i.
std::vector<uint16_t> extend_abelian(const FiniteGroup& G,
                                     const std::vector<uint16_t>& H,
                                     uint16_t g) {
  std::set<uint16_t> out(H.begin(), H.end());
  unsigned ord = G.element_order(g);
  for (unsigned i = 1; i < ord; ++i) {
    unsigned gi = g;
    for (unsigned k = 1; k < i; ++k) gi = G.mul(gi, g);
    for (uint16_t h : H) out.insert(static_cast<uint16_t>(G.mul(h, gi)));
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Subgroup> abelian_subgroups(const FiniteGroup& G,
                                        const GroupBudget& budget) {
  if (G.order() > budget.lattice_max_order)
    throw budget_error("abelian_subgroups: order " +
                       std::to_string(G.order()) +
                       " exceeds the lattice budget");

  // One canonical generator per cyclic subgroup; extending by any other
  // generator of the same cyclic subgroup yields the same closure.
  std::vector<uint16_t> gens;
  {
    std::set<std::vector<uint16_t>> cyclic_seen;
    for (unsigned g = 0; g < G.order(); ++g) {
      std::vector<uint16_t> c =
          extend_abelian(G, {static_cast<uint16_t>(G.identity())},
                         static_cast<uint16_t>(g));
      if (cyclic_seen.insert(c).second) gens.push_back(static_cast<uint16_t>(g));
    }
  }

  std::set<std::vector<uint16_t>> seen;
  std::vector<std::vector<uint16_t>> queue;
  std::vector<uint16_t> trivial = {static_cast<uint16_t>(G.identity())};
  seen.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    std::vector<uint16_t> H = std::move(queue.back());
    queue.pop_back();
    for (uint16_t g : gens) {
      if (std::binary_search(H.begin(), H.end(), g)) continue;
      bool ok = true;
      for (uint16_t h : H)
        if (!G.commute(h, g)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::vector<uint16_t> K = extend_abelian(G, H, g);
      if (seen.insert(K).second) queue.push_back(std::move(K));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(Subgroup{&G, s});
  return out;
}

std::vector<MoebiusEntry> moebius_coefficients(const FiniteGroup& G,
                                               const GroupBudget& budget) {
  std::vector<Subgroup> subs = abelian_subgroups(G, budget);
  size_t k = subs.size();

  // Indices sorted by decreasing order so strict overgroups are already
  // resolved when a subgroup is reached.
  std::vector<size_t> by_size(k);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::sort(by_size.begin(), by_size.end(), [&](size_t a, size_t b) {
    return subs[a].order() > subs[b].order();
  });

  std::vector<Integer> c(k);
  for (size_t ii = 0; ii < k; ++ii) {
    size_t i = by_size[ii];
    Integer acc = 1;
    for (size_t j = 0; j < k; ++j) {
      if (j == i || subs[j].order() <= subs[i].order()) continue;
      if (subs[j].contains(subs[i])) acc -= c[j];
    }
    c[i] = acc;
  }

  std::vector<MoebiusEntry> out;
  out.reserve(k);
  for (size_t i = 0; i < k; ++i) out.push_back({subs[i], c[i]});
  return out;
}

ExpoPoly hkr_chi(const FiniteGroup& G, long long p,
                 const GroupBudget& budget) {
  if (!is_prime(p)) throw std::domain_error("hkr_chi: p must be prime");
  auto entries = moebius_coefficients(G, budget);

  ExpoPoly e = ExpoPoly::zero(p);
  for (const auto& [A, cA] : entries) {
    if (cA == 0) continue;
    long long a = integer_valuation(Integer(A.order()), p).value();
    Integer index = Integer(A.order()) / pow_integer(p, a);
    Rational c = Rational(cA * index, Integer(G.order()));
    // |A_p|^(n+1) = p^(a n + a)
    e = e + ExpoPoly::power_term(
                p, c, IntValuedPoly({Integer(a), Integer(a)}));
  }

  for (long long n = 0; n <= 5; ++n)
    if (e.eval(n) != Rational(chi_bg(G, p, n, budget)))
      throw std::logic_error("hkr_chi: closed form disagrees with the "
                             "centralizer recursion at n = " +
                             std::to_string(n));
  return e;
}

Rational p_typical_cardinality(const FiniteGroup& G, long long p,
                               const GroupBudget& budget) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  unsigned count = 0;
  for (unsigned g = 0; g < G.order(); ++g)
    if (G.element_order(g) % p != 0) ++count;
  Rational direct(Integer(count), Integer(G.order()));

  if (G.order() <= budget.lattice_max_order) {
    Rational via_formula = extrapolate_minus_one(hkr_chi(G, p, budget));
    if (via_formula != direct)
      throw std::logic_error(
          "p_typical_cardinality: formula route disagrees with direct count");
  }
  return direct;
}

}  // namespace morava
