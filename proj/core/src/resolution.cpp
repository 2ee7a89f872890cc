#include "morava/resolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "morava/binomial.hpp"
#include "morava/mahler.hpp"

namespace morava {

namespace {

// g = p^k with k >= 1 gives p; 1 and non-prime-powers give 0.
long long prime_base(unsigned long long g) {
  if (g <= 1) return 0;
  for (long long p = 2; static_cast<unsigned long long>(p) * p <= g; ++p)
    if (g % p == 0) {
      unsigned long long x = g;
      while (x % p == 0) x /= p;
      return x == 1 ? p : 0;
    }
  return static_cast<long long>(g);  // g itself is prime
}

}  // namespace

std::vector<Rational> skeleton_cardinalities(const std::vector<Rational>& x) {
  std::vector<Rational> xbar = inverse_binomial_transform(x);
  std::vector<Rational> sk(x.size());
  Rational acc = 0;
  for (size_t n = 0; n < x.size(); ++n) {
    acc += (n % 2 == 0) ? xbar[n] : -xbar[n];
    sk[n] = acc;
  }
  // Direct form; disagreement means the closed formula broke.
  for (size_t n = 0; n < x.size(); ++n) {
    Rational direct = 0;
    for (size_t k = 0; k <= n; ++k) {
      Rational term = Rational(binomial(Integer(n) + 1, k + 1)) * x[k];
      direct += (k % 2 == 0) ? term : -term;
    }
    if (direct != sk[n])
      throw std::logic_error("skeleton_cardinalities: direct form disagrees "
                             "with the alternating-sum form");
  }
  return sk;
}

SimplicialCardinalitySeq bar_sequence(unsigned long long g) {
  if (g == 0) throw std::domain_error("bar_sequence: g must be >= 1");
  SimplicialCardinalitySeq seq;
  seq.label = "bar(" + std::to_string(g) + ")";
  seq.p = prime_base(g);
  seq.degree = g == 1 ? 0 : 1;
  seq.target = Rational(Integer(1), Integer(g));
  seq.value = [g](long long n) {
    return Rational(pow_integer(Integer(g), Integer(n)));
  };
  return seq;
}

SimplicialCardinalitySeq cech_sequence(const Rational& card_x,
                                       unsigned long long g) {
  if (g == 0) throw std::domain_error("cech_sequence: g must be >= 1");
  SimplicialCardinalitySeq seq;
  seq.label = "cech(" + fraction_string(card_x) + "," + std::to_string(g) + ")";
  seq.p = prime_base(g);
  seq.degree = g == 1 ? 0 : 1;
  seq.target = card_x / Rational(Integer(g));
  seq.value = [card_x, g](long long n) {
    return card_x * Rational(pow_integer(Integer(g), Integer(n)));
  };
  return seq;
}

SimplicialCardinalitySeq iterated_bar_sequence(unsigned long long g,
                                               long long d) {
  if (g == 0) throw std::domain_error("iterated_bar_sequence: g must be >= 1");
  if (d < 1) throw std::domain_error("iterated_bar_sequence: d must be >= 1");
  SimplicialCardinalitySeq seq;
  seq.label = "iterbar(" + std::to_string(g) + "," + std::to_string(d) + ")";
  seq.p = prime_base(g);
  seq.degree = g == 1 ? 0 : d;
  seq.target = pow_rational(Rational(Integer(g)), d % 2 == 0 ? 1 : -1);
  seq.value = [g, d](long long n) {
    Integer exponent = 1;
    for (long long i = 0; i < d; ++i) exponent *= n;
    return Rational(pow_integer(Integer(g), exponent));
  };
  return seq;
}

SimplicialGroupData simplicial_group_sequences(
    const std::vector<unsigned long long>& moore_sizes) {
  if (moore_sizes.empty())
    throw std::invalid_argument("simplicial group: no Moore sizes given");
  SimplicialGroupData data;

  // Moore sizes must be powers of one common prime; read off the exponents.
  long long p = 0;
  for (unsigned long long s : moore_sizes) {
    if (s == 0)
      throw std::invalid_argument("simplicial group: Moore size 0");
    long long base = prime_base(s);
    if (s == 1) continue;
    if (base == 0)
      throw std::invalid_argument("simplicial group: Moore size " +
                                  std::to_string(s) + " is not a prime power");
    if (p == 0) p = base;
    if (base != p)
      throw std::invalid_argument(
          "simplicial group: Moore sizes mix primes " + std::to_string(p) +
          " and " + std::to_string(base));
  }
  data.p = p;

  std::vector<Integer> m(moore_sizes.size(), 0);
  for (size_t k = 0; k < moore_sizes.size(); ++k) {
    unsigned long long s = moore_sizes[k];
    while (s > 1) {
      s /= static_cast<unsigned long long>(p);
      m[k] += 1;
    }
  }
  data.f = IntValuedPoly(m);

  Rational base = p == 0 ? Rational(1) : Rational(Integer(p));
  data.group_cardinality = pow_rational(base, data.f.eval(Integer(-1)));
  data.target = Rational(1) / data.group_cardinality;

  long long d = data.f.is_zero() ? 0 : data.f.degree() + 1;
  IntValuedPoly f = data.f;

  data.bar.label = "simplicial-group bar, f = " + f.str();
  data.bar.p = p;
  data.bar.degree = d;
  data.bar.target = data.target;
  data.bar.value = [f, base](long long n) {
    return pow_rational(base, Integer(n) * f.eval(Integer(n)));
  };

  // sum_{k<n} f(k): shift each binomial coefficient up one slot.
  std::vector<Integer> shifted(m.size() + 1, 0);
  for (size_t k = 0; k < m.size(); ++k) shifted[k + 1] = m[k];
  IntValuedPoly wexp{shifted};

  data.wbar.label = "simplicial-group wbar, f = " + f.str();
  data.wbar.p = p;
  data.wbar.degree = d;
  data.wbar.target = data.target;
  data.wbar.value = [wexp, base](long long n) {
    return pow_rational(base, wexp.eval(Integer(n)));
  };
  return data;
}

ConvergenceReport resolution_convergence(const SimplicialCardinalitySeq& seq,
                                         long long ell, long long N,
                                         std::optional<long long> burn_in,
                                         bool allow_any_ell) {
  if (!is_prime(ell)) throw std::domain_error("ell must be prime");
  if (N < 0) throw std::domain_error("N must be >= 0");
  if (!seq.value) throw std::invalid_argument("sequence has no value callback");
  if (!allow_any_ell && seq.p != 0 && (seq.p - 1) % ell != 0)
    throw std::domain_error("ell = " + std::to_string(ell) +
                            " does not divide p - 1 for this resolution");

  ConvergenceReport rep;
  rep.label = seq.label;
  rep.ell = ell;
  rep.N = N;
  rep.degree = seq.degree;
  rep.burn_in = burn_in.value_or(seq.degree);
  Valuation tv = l_valuation(seq.target, ell);
  rep.slack = (!tv.is_infinite() && tv.value() < 0) ? -tv.value() : 0;
  rep.target = seq.target;

  std::vector<Rational> x;
  for (long long n = 0; n <= N; ++n) x.push_back(seq.value(n));
  std::vector<Rational> xbar = inverse_binomial_transform(x);
  std::vector<Rational> sk = skeleton_cardinalities(x);

  // A degree-d sequence gains one unit of valuation per d levels, so compare
  // each valuation against the minimum over the previous d levels rather than
  // the immediate predecessor; incidental extra divisibility at one level is
  // not held against its successors.  Exact hits (infinite valuation) impose
  // no constraint.  For d = 1 this is plain monotonicity.
  const long long window = std::max<long long>(rep.degree, 1);
  for (long long n = 0; n <= N; ++n) {
    ConvergenceRow row;
    row.n = n;
    row.x = x[static_cast<size_t>(n)];
    row.xbar = xbar[static_cast<size_t>(n)];
    row.sk = sk[static_cast<size_t>(n)];
    row.valuation = l_valuation(row.sk - seq.target, ell);

    bool ok = true;
    if (n >= rep.burn_in) {
      ok = row.valuation.at_least(
          required_valuation(n + 1, rep.degree, rep.slack));
      std::optional<Valuation> floor;
      for (long long k = std::max(rep.burn_in, n - window); k < n; ++k) {
        const Valuation& v = rep.rows[static_cast<size_t>(k)].valuation;
        if (v.is_infinite()) continue;
        if (!floor || v < *floor) floor = v;
      }
      if (floor && row.valuation < *floor) ok = false;
    }
    if (!ok && !rep.first_violation) rep.first_violation = n;
    rep.pass = rep.pass && ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace morava
