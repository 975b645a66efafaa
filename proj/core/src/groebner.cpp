#include "boolgb/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace boolgb {

GeneratorSet::GeneratorSet(std::vector<Polynomial> polynomials, std::uint32_t n, Mode mode,
                           MonomialOrder order)
    : n_(n), mode_(mode), order_(order) {
  std::unordered_multimap<std::size_t, std::size_t> seen;
  polynomials_.reserve(polynomials.size());
  for (auto& f : polynomials) {
    if (f.mode() != mode) throw ModeMismatch();
    if (f.is_zero()) continue;
    std::size_t h = hash_value(f);
    auto [lo, hi] = seen.equal_range(h);
    bool duplicate = std::any_of(lo, hi, [&](const auto& kv) { return polynomials_[kv.second] == f; });
    if (duplicate) continue;
    seen.emplace(h, polynomials_.size());
    polynomials_.push_back(std::move(f));
  }
}

std::string ReductionStats::to_key_values() const {
  std::ostringstream out;
  out << "pairs_generated=" << pairs_generated << '\n'
      << "pairs_skipped_by_criteria=" << pairs_skipped_by_criteria << '\n'
      << "reductions_to_zero=" << reductions_to_zero << '\n'
      << "basis_insertions=" << basis_insertions << '\n'
      << "wall_time_ms="
      << std::chrono::duration_cast<std::chrono::milliseconds>(wall_time).count() << '\n';
  return out.str();
}

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::Full: return "full";
    case Engine::Boolean: return "boolean";
    case Engine::Both: return "both";
  }
  return "full";
}

Engine engine_from_string(const std::string& text) {
  if (text == "full") return Engine::Full;
  if (text == "boolean") return Engine::Boolean;
  if (text == "both") return Engine::Both;
  throw Error("unknown engine '" + text + "'");
}

namespace {

// Terms sorted descending under the working order; front() is the leading
// monomial.
using Row = std::vector<Monomial>;

class Reducer {
 public:
  Reducer(Mode mode, const MonomialOrder& order) : mode_(mode), order_(order) {}

  Row to_row(const Polynomial& f) const { return sorted_terms(f, order_); }

  Polynomial to_poly(Row row) const { return Polynomial::from_terms(std::move(row), mode_); }

  // row * q; in BooleanRing mode terms can collide and must be re-sorted.
  Row scale(const Row& row, const Monomial& q) const {
    Row out;
    out.reserve(row.size());
    for (const auto& t : row) out.push_back(multiply(t, q, mode_));
    if (mode_ == Mode::BooleanRing) {
      std::sort(out.begin(), out.end(),
                [&](const Monomial& a, const Monomial& b) { return order_.greater(a, b); });
      Row dedup;
      dedup.reserve(out.size());
      for (auto& t : out) {
        if (!dedup.empty() && dedup.back() == t) {
          dedup.pop_back();
        } else {
          dedup.push_back(std::move(t));
        }
      }
      out = std::move(dedup);
    }
    return out;
  }

  // Symmetric difference of a[from_a..] and b[from_b..].
  Row add(Row&& a, std::size_t from_a, const Row& b, std::size_t from_b) const {
    Row out;
    out.reserve(a.size() - from_a + b.size() - from_b);
    std::size_t i = from_a, j = from_b;
    while (i < a.size() && j < b.size()) {
      auto c = order_.compare(a[i], b[j]);
      if (c > 0) {
        out.push_back(std::move(a[i++]));
      } else if (c < 0) {
        out.push_back(b[j++]);
      } else {
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
  }

  Row s_polynomial(const Row& f, const Row& g) const {
    Monomial l = lcm(f.front(), g.front());
    Row a = scale(f, quotient(l, f.front()));
    Row b = scale(g, quotient(l, g.front()));
    return add(std::move(a), 1, b, 1);
  }

  // Full reduction. `divisors` are searched in list order.
  Row reduce(Row p, std::span<const Row* const> divisors) const {
    Row remainder;
    std::size_t head = 0;
    while (head < p.size()) {
      const Monomial& t = p[head];
      const Row* divisor = nullptr;
      for (const Row* d : divisors) {
        if (divides(d->front(), t)) {
          divisor = d;
          break;
        }
      }
      if (divisor == nullptr) {
        remainder.push_back(std::move(p[head]));
        ++head;
        continue;
      }
      Row multiple = scale(*divisor, quotient(t, divisor->front()));
      p = add(std::move(p), head + 1, multiple, 1);
      head = 0;
    }
    return remainder;
  }

  Mode mode() const { return mode_; }
  const MonomialOrder& order() const { return order_; }

 private:
  Mode mode_;
  MonomialOrder order_;
};

Mode common_mode(std::span<const Polynomial> polys, Mode fallback) {
  if (polys.empty()) return fallback;
  Mode mode = polys.front().mode();
  for (const auto& f : polys) {
    if (f.mode() != mode) throw ModeMismatch();
  }
  return mode;
}

struct Pair {
  std::uint32_t i = 0;
  std::uint32_t j = 0;  // unused for field pairs
  Monomial lcm;
  bool field = false;
  VarIndex var = 0;  // field pairs: the variable v of v^2 + v
  std::uint64_t seq = 0;
};

class BuchbergerRun {
 public:
  BuchbergerRun(const Reducer& reducer, const BuchbergerLimits& limits)
      : reducer_(reducer),
        limits_(limits),
        queue_(PairLess{&reducer_.order()}),
        start_(std::chrono::steady_clock::now()) {}

  void insert(Row h) {
    if (rows_.size() >= limits_.max_basis) {
      fail("basis size exceeded " + std::to_string(limits_.max_basis));
    }
    const auto h_index = static_cast<std::uint32_t>(rows_.size());
    const Monomial& lm_h = h.front();
    ++stats_.basis_insertions;

    // Gebauer-Moeller: new pairs (h, g) for active g.
    std::vector<Pair> candidates;
    for (std::uint32_t g : active_) {
      candidates.push_back(Pair{g, h_index, lcm(rows_[g].front(), lm_h), false, 0, 0});
    }
    count_generated(candidates.size());

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      if (coprime(rows_[p.i].front(), lm_h)) {
        kept.push_back(p);
        continue;
      }
      auto dominates = [&](const Pair& q) { return divides(q.lcm, p.lcm); };
      bool dominated = std::any_of(candidates.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                                   candidates.end(), dominates) ||
                       std::any_of(kept.begin(), kept.end(), dominates);
      if (dominated) {
        ++stats_.pairs_skipped_by_criteria;
      } else {
        kept.push_back(p);
      }
    }

    for (auto it = queue_.begin(); it != queue_.end();) {
      const Pair& p = *it;
      if (!p.field && divides(lm_h, p.lcm) && lcm(rows_[p.i].front(), lm_h) != p.lcm &&
          lcm(rows_[p.j].front(), lm_h) != p.lcm) {
        it = queue_.erase(it);
        ++stats_.pairs_skipped_by_criteria;
      } else {
        ++it;
      }
    }

    for (auto& p : kept) {
      if (coprime(rows_[p.i].front(), lm_h)) {
        ++stats_.pairs_skipped_by_criteria;
        continue;
      }
      p.seq = next_seq_++;
      queue_.insert(std::move(p));
    }

    if (reducer_.mode() == Mode::BooleanRing) {
      for (const auto& vp : lm_h.powers()) {
        count_generated(1);
        queue_.insert(Pair{h_index, h_index, lm_h, true, vp.var, next_seq_++});
      }
    }

    std::erase_if(active_, [&](std::uint32_t g) { return divides(lm_h, rows_[g].front()); });
    active_.push_back(h_index);
    rows_.push_back(std::move(h));
  }

  void run() {
    while (!queue_.empty()) {
      Pair p = std::move(queue_.extract(queue_.begin()).value());
      Row s = p.field ? reducer_.scale(rows_[p.i], Monomial::variable(p.var))
                      : reducer_.s_polynomial(rows_[p.i], rows_[p.j]);
      Row h = reducer_.reduce(std::move(s), divisors());
      if (h.empty()) {
        ++stats_.reductions_to_zero;
      } else {
        insert(std::move(h));
      }
    }
  }

  GroebnerBasis result(std::uint32_t n) {
    GroebnerBasis basis;
    basis.n = n;
    basis.mode = reducer_.mode();
    basis.order = reducer_.order();
    for (std::uint32_t g : active_) basis.elements.push_back(reducer_.to_poly(rows_[g]));
    sort_by_leading_monomial(basis.elements, basis.order);
    stats_.wall_time = std::chrono::steady_clock::now() - start_;
    return basis;
  }

  const ReductionStats& stats() const { return stats_; }

 private:
  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      auto c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return a.seq < b.seq;
    }
  };

  std::vector<const Row*> divisors() const {
    std::vector<const Row*> out;
    out.reserve(active_.size());
    for (std::uint32_t g : active_) out.push_back(&rows_[g]);
    return out;
  }

  void count_generated(std::size_t k) {
    stats_.pairs_generated += k;
    if (stats_.pairs_generated > limits_.max_pairs) {
      fail("pair count exceeded " + std::to_string(limits_.max_pairs));
    }
  }

  [[noreturn]] void fail(const std::string& what) {
    stats_.wall_time = std::chrono::steady_clock::now() - start_;
    throw ResourceLimit(what, stats_);
  }

  const Reducer& reducer_;
  BuchbergerLimits limits_;
  std::vector<Row> rows_;
  std::vector<std::uint32_t> active_;
  std::set<Pair, PairLess> queue_;
  std::uint64_t next_seq_ = 0;
  ReductionStats stats_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

void sort_by_leading_monomial(std::vector<Polynomial>& polys, const MonomialOrder& order) {
  std::stable_sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(leading_monomial(a, order), leading_monomial(b, order));
  });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("S-polynomial of the zero polynomial");
  if (f.mode() != g.mode()) throw ModeMismatch();
  Reducer reducer(f.mode(), order);
  return reducer.to_poly(reducer.s_polynomial(reducer.to_row(f), reducer.to_row(g)));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order) {
  Reducer reducer(f.mode(), order);
  std::vector<Row> rows;
  rows.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (g.mode() != f.mode()) throw ModeMismatch();
    if (!g.is_zero()) rows.push_back(reducer.to_row(g));
  }
  std::vector<const Row*> ptrs;
  for (const auto& r : rows) ptrs.push_back(&r);
  return reducer.to_poly(reducer.reduce(reducer.to_row(f), ptrs));
}

BuchbergerResult buchberger(const GeneratorSet& generators, const BuchbergerLimits& limits) {
  Reducer reducer(generators.mode(), generators.order());
  BuchbergerRun run(reducer, limits);
  for (const auto& f : generators.polynomials()) run.insert(reducer.to_row(f));
  run.run();
  BuchbergerResult result;
  result.basis = run.result(generators.n());
  result.stats = run.stats();
  return result;
}

GroebnerBasis interreduce(const GroebnerBasis& basis, bool strict) {
  Reducer reducer(basis.mode, basis.order);
  std::vector<Row> rows;
  for (const auto& f : basis.elements) {
    if (f.mode() != basis.mode) throw ModeMismatch();
    if (!f.is_zero()) rows.push_back(reducer.to_row(f));
  }
  std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    return basis.order.less(a.front(), b.front());
  });

  std::vector<const Row*> kept;
  std::vector<const Row*> dropped;
  for (const auto& r : rows) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Row* k) { return divides(k->front(), r.front()); });
    (redundant ? dropped : kept).push_back(&r);
  }

  if (strict) {
    for (const Row* d : dropped) {
      if (!reducer.reduce(*d, kept).empty()) {
        throw NotAGroebnerBasis("element " + format_poly(reducer.to_poly(*d), basis.order) +
                                " does not reduce to zero");
      }
    }
  }

  GroebnerBasis out;
  out.n = basis.n;
  out.mode = basis.mode;
  out.order = basis.order;
  out.reduced = true;
  std::vector<const Row*> others;
  for (const Row* k : kept) {
    others.clear();
    for (const Row* o : kept) {
      if (o != k) others.push_back(o);
    }
    // The leading monomial is irreducible by the others, so only the tail
    // changes.
    out.elements.push_back(reducer.to_poly(reducer.reduce(*k, others)));
  }
  sort_by_leading_monomial(out.elements, out.order);
  return out;
}

GroebnerBasis reduced_groebner_basis(const GeneratorSet& generators, const BuchbergerLimits& limits,
                                     ReductionStats* stats) {
  auto result = buchberger(generators, limits);
  if (stats != nullptr) *stats = result.stats;
  return interreduce(result.basis);
}

bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order) {
  Mode mode = common_mode(basis, Mode::FullRing);
  Reducer reducer(mode, order);
  std::vector<Row> rows;
  for (const auto& f : basis) {
    if (f.is_zero()) continue;
    rows.push_back(reducer.to_row(f));
  }
  std::vector<const Row*> ptrs;
  for (const auto& r : rows) ptrs.push_back(&r);

  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (coprime(rows[i].front(), rows[j].front())) continue;
      if (!reducer.reduce(reducer.s_polynomial(rows[i], rows[j]), ptrs).empty()) return false;
    }
    if (mode == Mode::BooleanRing) {
      for (const auto& vp : rows[i].front().powers()) {
        Row product = reducer.scale(rows[i], Monomial::variable(vp.var));
        if (!reducer.reduce(std::move(product), ptrs).empty()) return false;
      }
    }
  }
  return true;
}

bool is_minimal_basis(std::span<const Polynomial> basis, const MonomialOrder& order) {
  std::vector<Monomial> lms;
  for (const auto& f : basis) lms.push_back(leading_monomial(f, order));
  for (std::size_t i = 0; i < lms.size(); ++i) {
    for (std::size_t j = 0; j < lms.size(); ++j) {
      if (i != j && divides(lms[j], lms[i])) return false;
    }
  }
  return true;
}

bool is_reduced_basis(std::span<const Polynomial> basis, const MonomialOrder& order) {
  if (!is_minimal_basis(basis, order)) return false;
  std::vector<Monomial> lms;
  for (const auto& f : basis) lms.push_back(leading_monomial(f, order));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const auto& t : basis[i].terms()) {
      for (std::size_t j = 0; j < lms.size(); ++j) {
        if (i != j && divides(lms[j], t)) return false;
      }
    }
  }
  return true;
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis) {
  if (f.mode() != basis.mode) throw ModeMismatch();
  return normal_form(f, basis.elements, basis.order).is_zero();
}

std::vector<Polynomial> field_polynomials(std::uint32_t n) {
  std::vector<Polynomial> out;
  out.reserve(3 * std::size_t{n});
  for (VarIndex v = 0; v < 3 * n; ++v) {
    out.push_back(Polynomial::from_terms({Monomial::variable(v, 2), Monomial::variable(v)},
                                         Mode::FullRing));
  }
  return out;
}

GroebnerBasis lift_boolean_basis(const GroebnerBasis& boolean_basis) {
  GroebnerBasis lifted;
  lifted.n = boolean_basis.n;
  lifted.mode = Mode::FullRing;
  lifted.order = boolean_basis.order;
  for (const auto& f : boolean_basis.elements) lifted.elements.push_back(to_full_ring(f));
  for (auto& s : field_polynomials(boolean_basis.n)) lifted.elements.push_back(std::move(s));
  return interreduce(lifted);
}

GroebnerBasis field_closed_basis(const GeneratorSet& generators, Engine engine,
                                 const BuchbergerLimits& limits, ReductionStats* stats) {
  auto full = [&] {
    std::vector<Polynomial> polys;
    for (const auto& f : generators.polynomials()) polys.push_back(to_full_ring(f));
    for (auto& s : field_polynomials(generators.n())) polys.push_back(std::move(s));
    return reduced_groebner_basis(
        GeneratorSet(std::move(polys), generators.n(), Mode::FullRing, generators.order()), limits,
        stats);
  };
  auto boolean = [&] {
    std::vector<Polynomial> polys;
    for (const auto& f : generators.polynomials()) polys.push_back(to_boolean(f));
    return lift_boolean_basis(reduced_groebner_basis(
        GeneratorSet(std::move(polys), generators.n(), Mode::BooleanRing, generators.order()),
        limits, stats));
  };

  switch (engine) {
    case Engine::Full: return full();
    case Engine::Boolean: return boolean();
    case Engine::Both: {
      GroebnerBasis b = boolean();
      GroebnerBasis f = full();
      if (canonical_strings(f.elements, f.order) != canonical_strings(b.elements, b.order)) {
        throw EngineMismatch("full-ring and Boolean-ring engines disagree");
      }
      return f;
    }
  }
  return full();
}

std::vector<std::string> canonical_strings(std::span<const Polynomial> polys,
                                           const MonomialOrder& order) {
  std::vector<std::string> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(format_poly(f, order));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace boolgb
