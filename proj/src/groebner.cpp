#include "grim/groebner.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <tuple>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "grim/error.hpp"
#include "grim/matrix.hpp"

namespace grim {

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    gens_.push_back(g.to_ring(ring_));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Poly one = Poly::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::irrelevant(RingPtr ring) {
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Poly::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_homogeneous(); });
}

const std::vector<Poly>& Ideal::basis(const MonomialOrder& order, const GbOptions& opts) const {
  std::string tag = order.tag();
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(tag);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto computed = std::make_shared<const std::vector<Poly>>(groebner_basis(*this, order, opts));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(tag, std::move(computed));
  return *it->second;
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!ring_->same_variables(*other.ring_))
    throw Error(ErrorCode::RingMismatch, "ideal sum across different rings");
  std::vector<Poly> g = gens_;
  for (const auto& h : other.gens_) g.push_back(h.to_ring(ring_));
  return Ideal(ring_, std::move(g));
}

// ---------------------------------------------------------------- reduction

namespace {

struct StepBudget {
  const GbOptions& opts;
  std::uint64_t used = 0;

  void tick() {
    ++used;
    if (opts.stats) ++opts.stats->reduction_steps;
    if (used > opts.max_steps)
      throw Error(ErrorCode::ResourceLimit,
                  "Groebner computation exceeded " + std::to_string(opts.max_steps) + " reduction steps");
  }
};

const Poly* find_reducer(const Monomial& m, const std::vector<const Poly*>& basis) {
  for (const Poly* g : basis)
    if (g->lead_mono().divides(m)) return g;
  return nullptr;
}

Poly reduce_full(Poly f, const std::vector<const Poly*>& basis, StepBudget& budget) {
  std::vector<Term> done;
  RingPtr ring = f.ring();
  while (!f.is_zero()) {
    const Term& lt = f.lead();
    if (const Poly* g = find_reducer(lt.mono, basis)) {
      budget.tick();
      Rational c = -lt.coeff / g->lead_coeff();
      Monomial m = lt.mono / g->lead_mono();
      f.add_scaled(c, m, *g);
    } else {
      done.push_back(lt);
      f.add_scaled(-lt.coeff, Monomial{}, Poly::monomial(ring, lt.mono));
    }
  }
  // `done` is already in descending order.
  return Poly::from_terms(ring, std::move(done));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

Poly reduce(const Poly& f, const std::vector<Poly>& basis, const GbOptions& opts) {
  std::vector<const Poly*> ptrs;
  for (const auto& g : basis) ptrs.push_back(&g);
  StepBudget budget{opts};
  return reduce_full(f, ptrs, budget);
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  Monomial l = lcm(f.lead_mono(), g.lead_mono());
  Poly s = f.mul_term(l / f.lead_mono(), 1 / f.lead_coeff());
  s.add_scaled(-1 / g.lead_coeff(), l / g.lead_mono(), g);
  return s;
}

// ---------------------------------------------------------------- Buchberger

std::vector<Poly> groebner_basis(const Ideal& ideal, const MonomialOrder& order, const GbOptions& opts) {
  RingPtr ring = ideal.ring()->order() == order ? ideal.ring() : ideal.ring()->with_order(order);
  const Ring& r = *ring;
  StepBudget budget{opts};
  if (opts.stats) ++opts.stats->bases;

  std::vector<Poly> polys;     // every basis element ever added
  std::vector<bool> active;    // still part of the current basis
  std::vector<Pair> pairs;

  auto active_ptrs = [&] {
    std::vector<const Poly*> out;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) out.push_back(&polys[k]);
    return out;
  };

  // Gebauer–Möller update with the new element h = polys.back().
  auto update = [&] {
    std::size_t h = polys.size() - 1;
    const Monomial& th = polys[h].lead_mono();
    std::vector<Pair> cand;
    for (std::size_t g = 0; g < h; ++g)
      if (active[g]) cand.push_back({g, h, lcm(polys[g].lead_mono(), th)});

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool coprime = polys[cand[a].i].lead_mono().coprime(th);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
          if (b == a) continue;
          if (!cand[b].lcm.divides(cand[a].lcm)) continue;
          // Strictly smaller lcm, or equal lcm with a tie broken by index
          // (and coprime pairs win ties, since they are discarded anyway).
          if (!(cand[b].lcm == cand[a].lcm)) dominated = true;
          else if (b < a) dominated = true;
          else if (polys[cand[b].i].lead_mono().coprime(th)) dominated = true;
        }
      }
      if (!dominated) kept.push_back(cand[a]);
    }
    std::vector<Pair> fresh;
    for (const auto& p : kept)
      if (!polys[p.i].lead_mono().coprime(th)) fresh.push_back(p);

    std::vector<Pair> old;
    for (const auto& p : pairs) {
      bool drop = th.divides(p.lcm) && !(lcm(polys[p.i].lead_mono(), th) == p.lcm) &&
                  !(lcm(polys[p.j].lead_mono(), th) == p.lcm);
      if (!drop) old.push_back(p);
    }
    pairs = std::move(old);
    pairs.insert(pairs.end(), fresh.begin(), fresh.end());
    if (opts.stats) opts.stats->pairs_considered += cand.size();

    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && th.divides(polys[g].lead_mono())) active[g] = false;
  };

  auto insert = [&](Poly p) {
    polys.push_back(p.monic());
    active.push_back(true);
    update();
    if (opts.stats) {
      auto n = static_cast<std::uint64_t>(std::count(active.begin(), active.end(), true));
      opts.stats->max_basis_size = std::max(opts.stats->max_basis_size, n);
    }
  };

  // Seed with generators, each reduced against what is already there.
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.to_ring(ring));
  std::sort(gens.begin(), gens.end(), [&](const Poly& a, const Poly& b) {
    return r.cmp(a.lead_mono(), b.lead_mono()) < 0;
  });
  for (auto& g : gens) {
    Poly red = reduce_full(g, active_ptrs(), budget);
    if (red.is_zero()) continue;
    if (red.is_constant()) return {Poly::constant(ring, 1)};
    insert(std::move(red));
  }

  while (!pairs.empty()) {
    // Normal selection: smallest lcm in the active order.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      int c = r.cmp(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = *best;
    pairs.erase(best);
    if (opts.stats) ++opts.stats->pairs_reduced;
    Poly s = s_polynomial(polys[p.i], polys[p.j]);
    Poly red = reduce_full(std::move(s), active_ptrs(), budget);
    if (red.is_zero()) {
      if (opts.stats) ++opts.stats->zero_reductions;
      continue;
    }
    if (red.is_constant()) return {Poly::constant(ring, 1)};
    insert(std::move(red));
  }

  // Interreduce the (already minimal) active set.
  std::vector<Poly> basis;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) basis.push_back(polys[k]);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<const Poly*> others;
    for (std::size_t l = 0; l < basis.size(); ++l)
      if (l != k) others.push_back(&basis[l]);
    Poly tail = basis[k];
    Term lead = tail.lead();
    tail.add_scaled(-lead.coeff, Monomial{}, Poly::monomial(ring, lead.mono));
    Poly red = reduce_full(std::move(tail), others, budget);
    red += Poly::monomial(ring, lead.mono, lead.coeff);
    basis[k] = red.monic();
  }
  std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
    return r.cmp(a.lead_mono(), b.lead_mono()) > 0;
  });
  return basis;
}

// ---------------------------------------------------------------- membership

Poly normal_form(const Poly& f, const Ideal& ideal, const MonomialOrder& order, const GbOptions& opts) {
  const auto& gb = ideal.basis(order, opts);
  RingPtr ring = gb.empty() ? ideal.ring()->with_order(order) : gb.front().ring();
  return reduce(f.to_ring(ring), gb, opts);
}

bool contains(const Ideal& ideal, const Poly& f, const GbOptions& opts) {
  return normal_form(f, ideal, ideal.ring()->order(), opts).is_zero();
}

bool is_subset(const Ideal& a, const Ideal& b, const GbOptions& opts) {
  for (const auto& g : a.generators())
    if (!contains(b, g, opts)) return false;
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GbOptions& opts) {
  if (!a.ring()->same_variables(*b.ring())) throw Error(ErrorCode::RingMismatch, "ideal_equal across rings");
  auto order = MonomialOrder::grevlex();
  const auto& ga = a.basis(order, opts);
  const auto& gb = b.basis(order, opts);
  if (ga.size() != gb.size()) return false;
  for (std::size_t k = 0; k < ga.size(); ++k)
    if (!(ga[k] == gb[k])) return false;
  return true;
}

// ---------------------------------------------------------------- elimination

namespace {

std::vector<std::string> prefixed(const std::string& extra, const Ring& ring) {
  std::string name = extra;
  while (ring.index_of(name) >= 0) name += "_";
  std::vector<std::string> names{name};
  names.insert(names.end(), ring.names().begin(), ring.names().end());
  return names;
}

std::vector<std::size_t> shift_map(std::size_t n, std::size_t by) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), by);
  return m;
}

// Drops the (unused) first k variables of p.
Poly drop_prefix(const Poly& p, std::size_t k, const RingPtr& target) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = k; i < p.ring()->nvars(); ++i) m.exp[i - k] = t.mono.exp[i];
    m.deg = t.mono.deg;
    out.push_back({m, t.coeff});
  }
  return Poly::from_terms(target, std::move(out));
}

}  // namespace

Ideal eliminate(const Ideal& ideal, std::size_t first_k, const GbOptions& opts) {
  const Ring& r = *ideal.ring();
  if (first_k > r.nvars()) throw Error(ErrorCode::ArityMismatch, "cannot eliminate more variables than exist");
  std::vector<std::string> rest(r.names().begin() + static_cast<long>(first_k), r.names().end());
  RingPtr target = Ring::make(rest, MonomialOrder::grevlex());
  if (first_k == 0) {
    std::vector<Poly> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.to_ring(target));
    return Ideal(target, std::move(gens));
  }
  const auto& gb = ideal.basis(MonomialOrder::elimination(static_cast<int>(first_k)), opts);
  std::vector<Poly> kept;
  for (const auto& g : gb) {
    bool free = true;
    for (std::size_t v = 0; v < first_k && free; ++v) free = !g.uses_variable(v);
    if (free) kept.push_back(drop_prefix(g, first_k, target));
  }
  return Ideal(target, std::move(kept));
}

Ideal saturate(const Ideal& ideal, const Poly& f, const GbOptions& opts) {
  const RingPtr& ring = ideal.ring();
  if (f.is_zero()) return Ideal::unit(ring);
  RingPtr big = Ring::make(prefixed("_t", *ring), MonomialOrder::elimination(1));
  auto map = shift_map(ring->nvars(), 1);
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(big, map));
  Poly t = Poly::variable(big, 0);
  gens.push_back(Poly::constant(big, 1) - t * f.to_ring(ring).embed(big, map));
  Ideal elim = eliminate(Ideal(big, std::move(gens)), 1, opts);
  std::vector<Poly> out;
  for (const auto& g : elim.generators()) out.push_back(g.to_ring(ring));
  return Ideal(ring, std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b, const GbOptions& opts) {
  const RingPtr& ring = a.ring();
  if (!ring->same_variables(*b.ring())) throw Error(ErrorCode::RingMismatch, "intersection across rings");
  if (a.generators().empty() || b.generators().empty()) return Ideal::zero(ring);
  RingPtr big = Ring::make(prefixed("_t", *ring), MonomialOrder::elimination(1));
  auto map = shift_map(ring->nvars(), 1);
  Poly t = Poly::variable(big, 0);
  Poly one_minus_t = Poly::constant(big, 1) - t;
  std::vector<Poly> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.embed(big, map));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.to_ring(ring).embed(big, map));
  Ideal elim = eliminate(Ideal(big, std::move(gens)), 1, opts);
  std::vector<Poly> out;
  for (const auto& g : elim.generators()) out.push_back(g.to_ring(ring));
  return Ideal(ring, std::move(out));
}

Ideal saturate(const Ideal& ideal, const Ideal& by, const GbOptions& opts) {
  const RingPtr& ring = ideal.ring();
  if (!ring->same_variables(*by.ring())) throw Error(ErrorCode::RingMismatch, "saturation across rings");
  if (by.generators().empty()) return Ideal::unit(ring);
  // Saturating by the irrelevant ideal yields the unit ideal exactly when
  // the projective zero set is empty.
  bool irrelevant = by.generators().size() == ring->nvars();
  for (std::size_t i = 0; irrelevant && i < by.generators().size(); ++i)
    irrelevant = by.generators()[i] == Poly::variable(by.ring(), i);
  if (irrelevant && ideal.is_homogeneous() && is_empty_projective(ideal, opts)) return Ideal::unit(ring);

  std::optional<Ideal> acc;
  for (const auto& g : by.generators()) {
    Ideal s = saturate(ideal, g, opts);
    acc = acc ? intersect(*acc, s, opts) : s;
  }
  std::vector<Poly> gens = acc->basis(ring->order(), opts);
  return Ideal(ring, std::move(gens));
}

// ---------------------------------------------------------------- graded parts

std::vector<Poly> minimal_generators(const Ideal& ideal, const GbOptions& opts) {
  if (!ideal.is_homogeneous())
    throw Error(ErrorCode::DegreeMismatch, "minimal generators need a homogeneous ideal");
  RingPtr ring = ideal.ring()->with_order(MonomialOrder::grevlex());
  std::vector<Poly> gb = ideal.basis(MonomialOrder::grevlex(), opts);
  std::stable_sort(gb.begin(), gb.end(), [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  std::vector<Poly> kept;
  for (const auto& g : gb) {
    if (!kept.empty() && contains(Ideal(ring, kept), g, opts)) continue;
    kept.push_back(g);
  }
  return kept;
}

std::vector<Poly> graded_piece(const Ideal& ideal, unsigned d, const GbOptions& opts) {
  RingPtr ring = ideal.ring()->with_order(MonomialOrder::grevlex());
  const auto& gb = ideal.basis(MonomialOrder::grevlex(), opts);
  auto basis = monomials_of_degree(*ring, d);
  std::vector<RatVector> rows;
  for (const auto& g : gb) {
    if (!g.is_homogeneous()) throw Error(ErrorCode::DegreeMismatch, "graded_piece needs a homogeneous ideal");
    int dg = g.degree();
    if (dg > static_cast<int>(d)) continue;
    for (const auto& m : monomials_of_degree(*ring, d - static_cast<unsigned>(dg)))
      rows.push_back(coefficient_vector(g.mul_term(m, 1), d));
  }
  std::vector<Poly> out;
  for (const auto& row : row_space_basis(rows)) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] != 0) terms.push_back({basis[k], row[k]});
    out.push_back(Poly::from_terms(ideal.ring(), std::move(terms)));
  }
  return out;
}

// ---------------------------------------------------------------- Hilbert

namespace {

using IntPoly = std::vector<std::int64_t>;

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IntPoly ip_add(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

void minimize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.exp < b.exp;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

std::string key_of(const std::vector<Monomial>& gens) {
  std::string k;
  for (const auto& g : gens) {
    k.append(reinterpret_cast<const char*>(g.exp.data()), sizeof(g.exp));
  }
  return k;
}

IntPoly numerator_rec(std::vector<Monomial> gens, std::unordered_map<std::string, IntPoly>& memo) {
  minimize(gens);
  if (gens.empty()) return {1};
  std::string key = key_of(gens);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // Base case: pairwise coprime generators.
  std::array<int, kMaxVars> count{};
  for (const auto& g : gens)
    for (std::size_t v = 0; v < kMaxVars; ++v)
      if (g.exp[v]) ++count[v];
  std::size_t pivot = 0;
  for (std::size_t v = 1; v < kMaxVars; ++v)
    if (count[v] > count[pivot]) pivot = v;

  IntPoly result;
  if (count[pivot] <= 1) {
    result = {1};
    for (const auto& g : gens) {
      IntPoly f(g.deg + 1, 0);
      f[0] = 1;
      f[g.deg] -= 1;
      result = ip_mul(result, f);
    }
  } else {
    // N(I) = N(I + (x)) + t * N(I : x) for the most frequent variable x.
    Monomial x = Monomial::variable(pivot);
    std::vector<Monomial> plus = gens;
    plus.push_back(x);
    std::vector<Monomial> colon;
    for (const auto& g : gens) {
      Monomial h = g;
      if (h.exp[pivot]) {
        h.exp[pivot] -= 1;
        h.deg -= 1;
      }
      colon.push_back(h);
    }
    IntPoly a = numerator_rec(std::move(plus), memo);
    IntPoly b = numerator_rec(std::move(colon), memo);
    b.insert(b.begin(), 0);
    result = ip_add(a, b);
  }
  while (result.size() > 1 && result.back() == 0) result.pop_back();
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

std::vector<std::int64_t> hilbert_numerator(std::vector<Monomial> gens, std::size_t) {
  std::unordered_map<std::string, IntPoly> memo;
  return numerator_rec(std::move(gens), memo);
}

Rational HilbertData::evaluate(long s) const {
  Rational acc = 0, power = 1;
  for (const auto& c : hilbert_polynomial) {
    acc += c * power;
    power *= s;
  }
  return acc;
}

std::string HilbertData::polynomial_string() const {
  if (hilbert_polynomial.empty()) return "0";
  RingPtr r = Ring::make({"s"});
  std::vector<Term> terms;
  for (std::size_t k = 0; k < hilbert_polynomial.size(); ++k)
    terms.push_back({Monomial::variable(0, static_cast<std::uint16_t>(k)), hilbert_polynomial[k]});
  return Poly::from_terms(r, std::move(terms)).to_string();
}

HilbertData hilbert_data(const Ideal& ideal, const GbOptions& opts) {
  if (!ideal.is_homogeneous()) throw Error(ErrorCode::DegreeMismatch, "hilbert_data needs a homogeneous ideal");
  std::size_t n = ideal.ring()->nvars();
  const auto& gb = ideal.basis(MonomialOrder::grevlex(), opts);
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.lead_mono());

  HilbertData hd;
  IntPoly num = hilbert_numerator(leads, n);
  hd.series_numerator = num;

  // Divide by (1 - t) while possible.
  std::size_t k = 0;
  while (k < n) {
    std::int64_t at_one = std::accumulate(num.begin(), num.end(), std::int64_t{0});
    if (at_one != 0 || (num.size() == 1 && num[0] == 0)) break;
    // num = (1 - t) q  =>  q_i = sum_{j<=i} num_j
    IntPoly q(num.size() - 1);
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      run += num[i];
      q[i] = run;
    }
    num = q.empty() ? IntPoly{0} : q;
    ++k;
  }
  std::size_t krull = n - k;
  if (krull == 0 || (num.size() == 1 && num[0] == 0)) {
    hd.projective_dimension = -1;
    hd.degree = 0;
    return hd;
  }
  hd.projective_dimension = static_cast<int>(krull) - 1;
  hd.degree = std::accumulate(num.begin(), num.end(), std::int64_t{0});

  // HP(s) = sum_i num_i * binom(s - i + d - 1, d - 1), d = krull.
  std::vector<Rational> hp(krull, Rational(0));
  Rational fact = 1;
  for (std::size_t j = 1; j < krull; ++j) fact *= static_cast<unsigned long>(j);
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    std::vector<Rational> prod{Rational(1)};
    for (std::size_t j = 1; j < krull; ++j) {
      // multiply by (s + (j - i))
      Rational c = static_cast<long>(j) - static_cast<long>(i);
      std::vector<Rational> next(prod.size() + 1, Rational(0));
      for (std::size_t e = 0; e < prod.size(); ++e) {
        next[e] += prod[e] * c;
        next[e + 1] += prod[e];
      }
      prod = std::move(next);
    }
    for (std::size_t e = 0; e < prod.size(); ++e) hp[e] += prod[e] * num[i] / fact;
  }
  while (!hp.empty() && hp.back() == 0) hp.pop_back();
  hd.hilbert_polynomial = std::move(hp);
  return hd;
}

bool is_empty_projective(const Ideal& ideal, const GbOptions& opts) {
  return hilbert_data(ideal, opts).projective_dimension < 0;
}

}  // namespace grim
