#pragma once

// Quotients N(z) / prod_k l_k(z) of a truncated power series by linear forms,
// and the Laurent coefficients of such quotients.

#include <algorithm>
#include <numeric>
#include <vector>

#include "shintani/pairing/series.hpp"

namespace shintani {

/// numerator / prod(denominators). The numerator is exact through total
/// degree `num_prec()`, so the represented Laurent expansion is exact through
/// degree `dmax() = num_prec() - |denominators|`. Denominator forms are stored
/// with first nonzero coefficient 1; the scalars go into the numerator.
class QuotSeries {
 public:
  explicit QuotSeries(std::size_t n = 1, int dmax = 0) : num_(n), prec_(dmax) {}

  QuotSeries(Series num, std::vector<LinForm> denoms, int num_prec) : num_(std::move(num)), prec_(num_prec) {
    for (auto& l : denoms) {
      if (l.size() != num_.nvars()) fail(ErrorCode::invalid_argument, "denominator form has wrong dimension");
      auto it = std::find_if(l.begin(), l.end(), [](const CoeffElem& c) { return !c.is_zero(); });
      if (it == l.end()) fail(ErrorCode::zero_form, "zero denominator form");
      CoeffElem lead = *it;
      if (!(lead == CoeffElem(1))) {
        CoeffElem inv = CoeffElem(1) / lead;
        for (auto& c : l) c = c * inv;
        num_ = num_.scaled(inv);
      }
      den_.push_back(std::move(l));
    }
    num_ = num_.truncated(prec_);
  }

  static QuotSeries power_series(Series s, int dmax) { return QuotSeries(std::move(s), {}, dmax); }

  std::size_t nvars() const noexcept { return num_.nvars(); }
  const Series& numerator() const noexcept { return num_; }
  const std::vector<LinForm>& denominators() const noexcept { return den_; }
  int num_prec() const noexcept { return prec_; }
  int dmax() const noexcept { return prec_ - static_cast<int>(den_.size()); }

  /// True when the numerator vanishes through its precision.
  bool is_zero() const { return num_.is_zero(); }

  QuotSeries scaled(const CoeffElem& c) const {
    QuotSeries r = *this;
    r.num_ = num_.scaled(c);
    return r;
  }

  /// Product with a power series exact through `prec`, whose terms all have
  /// degree >= `low` (low-degree factors raise the known precision).
  QuotSeries times(const Series& s, int prec) const {
    int low_s = s.low_degree(), low_n = num_.low_degree();
    if (low_s < 0 || low_n < 0) return QuotSeries(num_.nvars() == 0 ? 1 : num_.nvars(), dmax());
    int p = std::min(prec_ + low_s, prec + low_n);
    QuotSeries r = *this;
    r.num_ = Series::mul_truncated(num_, s, p);
    r.prec_ = p;
    return r;
  }

  friend QuotSeries operator+(const QuotSeries& a, const QuotSeries& b) { return combine(a, b, false); }
  friend QuotSeries operator-(const QuotSeries& a, const QuotSeries& b) { return combine(a, b, true); }
  QuotSeries& operator+=(const QuotSeries& o) { return *this = *this + o; }

  /// Equality of the represented Laurent expansions through the smaller dmax.
  friend bool same_expansion(const QuotSeries& a, const QuotSeries& b) { return (a - b).is_zero(); }

 private:
  /// Forms of `b` left over after matching against `a` as multisets.
  static std::vector<LinForm> missing(const std::vector<LinForm>& a, const std::vector<LinForm>& b) {
    std::vector<LinForm> pool = a, out;
    for (const auto& l : b) {
      auto it = std::find(pool.begin(), pool.end(), l);
      if (it == pool.end()) {
        out.push_back(l);
      } else {
        pool.erase(it);
      }
    }
    return out;
  }

  static QuotSeries combine(const QuotSeries& a, const QuotSeries& b, bool subtract) {
    if (a.nvars() != b.nvars()) fail(ErrorCode::invalid_argument, "quotient series in different dimensions");
    auto extra_a = missing(a.den_, b.den_);  // multiply a by these
    auto extra_b = missing(b.den_, a.den_);
    auto lift = [](const QuotSeries& q, const std::vector<LinForm>& extra) {
      Series s = q.num_;
      int p = q.prec_;
      for (const auto& l : extra) {
        p += 1;
        s = Series::mul_truncated(s, linear_series(l), p);
      }
      return std::pair{s, p};
    };
    auto [na, pa] = lift(a, extra_a);
    auto [nb, pb] = lift(b, extra_b);
    QuotSeries r(a.nvars());
    r.den_ = a.den_;
    r.den_.insert(r.den_.end(), extra_a.begin(), extra_a.end());
    r.prec_ = std::min(pa, pb);
    r.num_ = subtract ? na - nb : na + nb;
    r.num_ = r.num_.truncated(r.prec_);
    return r;
  }

  Series num_;
  std::vector<LinForm> den_;
  int prec_;
};

/// The honest power series N / prod(l_k), exact through dmax().
inline Series reduce_to_power_series(const QuotSeries& q) {
  Series s = q.numerator();
  int p = q.num_prec();
  for (const auto& l : q.denominators()) {
    s = divide_by_form(s, l, p);
    p -= 1;
  }
  return s.truncated(p);
}

/// Change of variables z_j = sum_i t[j][i] x_i applied to numerator and
/// denominators alike.
inline QuotSeries substitute(const QuotSeries& q, const std::vector<LinForm>& t) {
  if (t.size() != q.nvars()) fail(ErrorCode::invalid_argument, "substitution matrix has wrong row count");
  const std::size_t m = t[0].size();
  std::vector<LinForm> den;
  for (const auto& l : q.denominators()) {
    LinForm r(m, CoeffElem(0));
    for (std::size_t j = 0; j < l.size(); ++j)
      for (std::size_t i = 0; i < m; ++i) r[i] += l[j] * t[j][i];
    if (is_zero_form(r)) fail(ErrorCode::zero_form, "denominator form vanishes after substitution", to_string(l));
    den.push_back(std::move(r));
  }
  return QuotSeries(substitute_linear(q.numerator(), t), std::move(den), q.num_prec());
}

namespace detail {

using LaurentKey = std::vector<int>;
using LaurentMap = std::map<LaurentKey, CoeffElem>;

inline int weight(const LaurentKey& k, const std::vector<int>& rank) {
  int w = 0;
  for (std::size_t i = 0; i < k.size(); ++i) w += rank[i] * k[i];
  return w;
}

/// Coefficient of z^e in N_{|e|+k} / prod l, each 1/l expanded as a geometric
/// series in the ratio of lower-ranked variables to its top-ranked variable.
inline CoeffElem laurent_coefficient_for_order(const Series& piece, const std::vector<LinForm>& den,
                                               const std::vector<int>& e, const std::vector<std::size_t>& order) {
  const std::size_t n = e.size();
  std::vector<int> rank(n);
  for (std::size_t p = 0; p < n; ++p) rank[order[p]] = static_cast<int>(p);
  std::vector<std::size_t> top;
  int bound = weight(e, rank);
  for (const auto& l : den) {
    std::size_t best = n;
    for (std::size_t v : order)
      if (!l[v].is_zero()) {
        best = v;
        break;
      }
    top.push_back(best);
    bound += rank[best];
  }
  // "Adjusted weight" of a partial product never decreases, so anything
  // above `bound` cannot reach z^e.
  LaurentMap cur;
  for (const auto& [m, c] : piece.terms()) {
    LaurentKey k(n);
    for (std::size_t i = 0; i < n; ++i) k[i] = m[i];
    if (weight(k, rank) <= bound) cur.emplace(std::move(k), c);
  }
  int shift = 0;  // sum of rank[top] over processed forms
  for (std::size_t f = 0; f < den.size(); ++f) {
    const LinForm& l = den[f];
    const std::size_t p = top[f];
    const CoeffElem inv = CoeffElem(1) / l[p];
    // 1/l = (1/(a z_p)) sum_m (-(l - a z_p)/(a z_p))^m
    LaurentMap ratio;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == p || l[j].is_zero()) continue;
      LaurentKey k(n);
      k[j] = 1;
      k[p] = -1;
      ratio.emplace(std::move(k), -(l[j] * inv));
    }
    LaurentMap next;
    LaurentMap power;  // (ratio)^m / (a z_p)
    {
      LaurentKey k(n);
      k[p] = -1;
      power.emplace(std::move(k), inv);
    }
    while (!power.empty()) {
      for (const auto& [ka, ca] : cur) {
        int wa = weight(ka, rank) + shift;
        for (const auto& [kb, cb] : power) {
          int w = wa + weight(kb, rank) + rank[p];
          if (w > bound) continue;
          LaurentKey k = ka;
          for (std::size_t i = 0; i < n; ++i) k[i] += kb[i];
          auto [it, inserted] = next.try_emplace(k, ca * cb);
          if (!inserted) it->second += ca * cb;
        }
      }
      LaurentMap np;
      for (const auto& [ka, ca] : power)
        for (const auto& [kb, cb] : ratio) {
          LaurentKey k = ka;
          for (std::size_t i = 0; i < n; ++i) k[i] += kb[i];
          if (weight(k, rank) + rank[p] > bound) continue;
          auto [it, inserted] = np.try_emplace(k, ca * cb);
          if (!inserted) it->second += ca * cb;
        }
      power = std::move(np);
    }
    shift += rank[p];
    for (auto it = next.begin(); it != next.end();) {
      if (it->second.is_zero()) {
        it = next.erase(it);
      } else {
        ++it;
      }
    }
    cur = std::move(next);
  }
  auto it = cur.find(LaurentKey(e.begin(), e.end()));
  return it == cur.end() ? CoeffElem(0) : it->second;
}

}  // namespace detail

/// Coefficient of z^e in the Laurent expansion of q. Without surviving poles
/// the expansion is a power series and the coefficient is unambiguous; with
/// poles it depends on the expansion domain, and the value returned is the
/// average over the n! domains in which one variable dominates the next.
inline CoeffElem laurent_coefficient(const QuotSeries& q, const std::vector<int>& e) {
  const std::size_t n = q.nvars();
  if (e.size() != n) fail(ErrorCode::invalid_argument, "exponent has wrong length");
  int deg = std::accumulate(e.begin(), e.end(), 0);
  if (deg > q.dmax())
    fail(ErrorCode::truncation_too_small, "requested degree " + std::to_string(deg) + " exceeds tracked degree " +
                                              std::to_string(q.dmax()));
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
    fail(ErrorCode::invalid_argument, "negative exponents are not extracted");
  const Series piece = q.numerator().homogeneous_part(deg + static_cast<int>(q.denominators().size()));
  if (q.denominators().empty()) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<std::uint16_t>(e[i]);
    return piece.coeff(m);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  CoeffElem sum(0);
  long count = 0;
  do {
    sum += detail::laurent_coefficient_for_order(piece, q.denominators(), e, order);
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return sum.scaled(Rat(1) / Rat(count));
}

}  // namespace shintani
