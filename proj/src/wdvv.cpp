#include "e7/wdvv.hpp"

#include "e7/e7family.hpp"
#include "e7/parse.hpp"
#include "e7/polymatrix.hpp"

#include <atomic>
#include <functional>
#include <random>
#include <thread>

namespace e7 {

namespace {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errs(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i; (i = next++) < n;) body(i);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

// Horner in order[idx], recursing into the coefficients.
MPoly horner_substitute(const MPoly& p, const std::vector<std::size_t>& order, std::size_t idx,
                        const std::vector<MPoly>& img, const RingPtr& target) {
  if (p.is_zero()) return MPoly(target);
  if (idx == order.size()) return MPoly(target, p.constant_term());
  auto cs = p.coefficients_in(order[idx]);
  MPoly acc(target);
  for (std::size_t k = cs.size(); k-- > 0;) {
    acc = acc * img[order[idx]];
    acc += horner_substitute(cs[k], order, idx + 1, img, target);
  }
  return acc;
}

}  // namespace

AlgContextPtr make_alg_context(const MPoly& v, const std::array<Rational, 7>& weights) {
  auto c = std::make_shared<AlgContext>();
  c->ring = v.ring();
  if (c->ring->nvars() != 7) throw AlgebraError("algebraic potential needs the ring x1..x7");
  c->v = v;
  if (v.depends_on(5) || v.depends_on(6)) throw AlgebraError("v must not involve x6, x7");
  c->w = MPoly::variable(c->ring, 5) - v;
  for (std::size_t j = 0; j < 7; ++j) c->dw[j] = c->w.derivative(j);
  c->weights = weights;
  return c;
}

AlgElem::AlgElem(AlgContextPtr ctx, MPoly p, MPoly q, unsigned k) : ctx_(std::move(ctx)), p_(std::move(p)), q_(std::move(q)), k_(k) {
  if (!p_.ring()) p_ = MPoly(ctx_->ring);
  if (!q_.ring()) q_ = MPoly(ctx_->ring);
  normalize();
}

AlgElem AlgElem::z(AlgContextPtr ctx) {
  MPoly one(ctx->ring, FieldElem(1));
  return AlgElem(ctx, MPoly(ctx->ring), one, 0);
}

void AlgElem::normalize() {
  if (is_zero()) {
    k_ = 0;
    return;
  }
  while (k_ > 0) {
    auto a = try_divide(p_, ctx_->w);
    if (!a) return;
    auto b = try_divide(q_, ctx_->w);
    if (!b) return;
    p_ = std::move(*a);
    q_ = std::move(*b);
    --k_;
  }
}

void AlgElem::lift(unsigned k) {
  if (k <= k_) return;
  MPoly f = ctx_->w.pow(k - k_);
  p_ = p_ * f;
  q_ = q_ * f;
  k_ = k;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  if (!ctx_) return *this = o;
  if (o.k_ == k_) {
    p_ += o.p_;
    q_ += o.q_;
  } else {
    AlgElem b = o;
    unsigned k = std::max(k_, o.k_);
    lift(k);
    b.lift(k);
    p_ += b.p_;
    q_ += b.q_;
  }
  normalize();
  return *this;
}

AlgElem AlgElem::operator-() const {
  AlgElem r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) { return *this += -o; }

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  const auto& w = a.ctx_->w;
  MPoly p = a.p_ * b.p_;
  if (!a.q_.is_zero() && !b.q_.is_zero()) p += a.q_ * b.q_ * w;
  MPoly q = a.p_ * b.q_ + a.q_ * b.p_;
  return AlgElem(a.ctx_, std::move(p), std::move(q), a.k_ + b.k_);
}

AlgElem operator*(AlgElem a, const FieldElem& c) {
  a.p_ *= c;
  a.q_ *= c;
  a.normalize();
  return a;
}

bool operator==(const AlgElem& a, const AlgElem& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.k_ == b.k_ && a.p_ == b.p_ && a.q_ == b.q_;
}

AlgElem AlgElem::partial(std::size_t j) const {
  if (is_zero()) return *this;
  const MPoly& dw = ctx_->dw[j];
  const MPoly& w = ctx_->w;
  // w^(k+1) d/dx_j [(p + q z) / w^k]
  MPoly p = w * p_.derivative(j);
  MPoly q = w * q_.derivative(j);
  if (!dw.is_zero()) {
    if (k_ > 0) p -= p_ * dw * FieldElem(Rational(k_));
    q += q_ * dw * FieldElem(Rational(1, 2) - Rational(k_));
  }
  return AlgElem(ctx_, std::move(p), std::move(q), k_ + 1);
}

AlgElem AlgElem::euler() const {
  AlgElem out(ctx_, MPoly(ctx_->ring));
  for (std::size_t j = 0; j < 7; ++j) {
    if (sgn(ctx_->weights[j]) == 0) continue;
    AlgElem d = partial(j);
    if (d.is_zero()) continue;
    out += AlgElem(ctx_, MPoly::variable(ctx_->ring, j) * FieldElem(ctx_->weights[j])) * d;
  }
  return out;
}

RingPtr laurent_ring() {
  static RingPtr r = make_ring("x1,x2,x3,x4,x5,x7,z");
  return r;
}

std::pair<MPoly, unsigned> AlgElem::eliminate_x6() const {
  RingPtr L = laurent_ring();
  MPoly z = MPoly::variable(L, 6);
  std::vector<std::optional<MPoly>> img(7);
  for (std::size_t j = 0; j < 5; ++j) img[j] = MPoly::variable(L, j);
  img[6] = MPoly::variable(L, 5);
  img[5] = MPoly(L);
  img[5] = substitute(ctx_->v, img, L) + z * z;
  MPoly n = substitute(p_, img, L) + substitute(q_, img, L) * z;
  unsigned shift = 2 * k_;
  while (shift > 0 && !n.is_zero()) {
    auto d = try_divide(n, z);
    if (!d) break;
    n = std::move(*d);
    --shift;
  }
  if (n.is_zero()) shift = 0;
  return {n, shift};
}

FieldElem AlgElem::evaluate(std::span<const FieldElem> x, const FieldElem& zval) const {
  FieldElem num = p_.evaluate(x) + q_.evaluate(x) * zval;
  if (k_ == 0) return num;
  return num / ctx_->w.evaluate(x).pow(k_);
}

std::string AlgElem::str() const {
  std::string s = "(" + p_.str() + ") + (" + q_.str() + ")*z";
  if (k_ > 0) s = "(" + s + ")/w^" + std::to_string(k_);
  return s;
}

const PotentialE7& potential() {
  static const PotentialE7 pot = [] {
    const auto& df = data_file("potential.txt");
    RingPtr r = make_ring("x1,x2,x3,x4,x5,x6,x7");
    std::array<Rational, 7> wt;
    for (int j = 0; j < 7; ++j) {
      wt[j] = Rational(j + 1, 7);
      wt[j].canonicalize();
    }
    MPoly v = parse_poly(df.get("potential", "v"), r);
    auto ctx = make_alg_context(v, wt);
    PotentialE7 p;
    p.ctx = ctx;
    p.F_poly = parse_poly(df.get("potential", "F_poly"), r);
    FieldElem c = parse_rational(df.get("potential", "alg_coeff"));
    // z^5 = w^2 z
    p.F_alg = AlgElem(ctx, MPoly(r), ctx->w.pow(2) * c);
    p.F = AlgElem(ctx, p.F_poly) + p.F_alg;
    return p;
  }();
  return pot;
}

FrobMatrices frob_matrices(const PotentialE7& f, unsigned threads) {
  FrobMatrices m;
  std::vector<AlgElem> dF(7);
  parallel_for(7, threads, [&](std::size_t i) { dF[i] = f.F.partial(i); });
  m.C.assign(7, std::vector<AlgElem>(7));
  m.T = m.C;
  for (auto& b : m.B) b = m.C;
  parallel_for(49, threads, [&](std::size_t n) {
    std::size_t i = n / 7, j = n % 7;
    m.C[i][j] = dF[i].partial(6 - j);
  });
  parallel_for(49 * 8, threads, [&](std::size_t n) {
    std::size_t e = n % 49, which = n / 49;
    std::size_t i = e / 7, j = e % 7;
    if (which == 7)
      m.T[i][j] = m.C[i][j].euler();
    else
      m.B[which][i][j] = m.C[i][j].partial(which);
  });
  return m;
}

AlgMatrix alg_matmul(const AlgMatrix& a, const AlgMatrix& b) {
  std::size_t n = a.size();
  AlgMatrix c(n, std::vector<AlgElem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      AlgElem s(a[0][0].context(), MPoly());
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
        s += a[i][k] * b[k][j];
      }
      c[i][j] = s;
    }
  return c;
}

std::vector<CommutatorFailure> check_commutators(const FrobMatrices& m, unsigned threads) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < 7; ++j)
    for (int k = j + 1; k < 7; ++k) pairs.emplace_back(j, k);
  std::vector<std::vector<CommutatorFailure>> per(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t n) {
    auto [j, k] = pairs[n];
    AlgMatrix ab = alg_matmul(m.B[j], m.B[k]), ba = alg_matmul(m.B[k], m.B[j]);
    for (std::size_t r = 0; r < 7; ++r)
      for (std::size_t c = 0; c < 7; ++c)
        if (ab[r][c] != ba[r][c]) per[n].push_back({j + 1, k + 1, r + 1, c + 1});
  });
  std::vector<CommutatorFailure> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

MPoly det_T(const FrobMatrices& m) {
  RingPtr L = laurent_ring();
  MPoly z = MPoly::variable(L, 6);
  PolyMatrix M(L, 7, 7);
  unsigned total = 0;
  for (std::size_t i = 0; i < 7; ++i) {
    std::vector<std::pair<MPoly, unsigned>> row;
    unsigned s = 0;
    for (std::size_t j = 0; j < 7; ++j) {
      row.push_back(m.T[i][j].eliminate_x6());
      s = std::max(s, row.back().second);
    }
    for (std::size_t j = 0; j < 7; ++j) M(i, j) = row[j].first * z.pow(s - row[j].second);
    total += s;
  }
  MPoly d = minor_expansion_det(M);
  if (total == 0) return d;
  auto q = try_divide(d, z.pow(total));
  if (!q) throw AlgebraError("det(T) keeps a denominator in z after eliminating x6");
  return *q;
}

std::array<MPoly, 7> wdvv_transform() {
  static const std::array<MPoly, 7> t = [] {
    const auto& df = data_file("potential.txt");
    RingPtr r = make_ring("s3,t1,t2,t3,t4,t5,t7", ExtField::septic());
    std::array<MPoly, 7> out;
    const char* names[7] = {"x1", "x2", "x3", "x4", "x5", "x7", "z"};
    for (int k = 0; k < 7; ++k) out[k] = parse_poly(df.get("transform", names[k]), r);
    return out;
  }();
  return t;
}

TransformResult transform_and_compare(const MPoly& detT, const MPoly& delta_tilde) {
  const std::array<unsigned, 7> cpow{2, 4, 6, 8, 10, 14, 6};
  const std::vector<Rational> lw{Rational(1, 7), Rational(2, 7), Rational(3, 7), Rational(4, 7),
                                 Rational(5, 7), Rational(1), Rational(3, 7)};
  if (weighted_degree(detT, lw) != Rational(7)) throw AlgebraError("det(T) is not weighted homogeneous of weight 7");
  RingPtr pr = delta_tilde.ring();
  auto tr = wdvv_transform();
  std::vector<MPoly> img(7);
  for (int k = 0; k < 7; ++k) {
    // every coefficient is rational * c7^m with m = cpow mod 7
    MPoly phi(pr);
    unsigned m = cpow[k] % 7;
    Rational lift = 1;
    for (unsigned e = 0; e < cpow[k] / 7; ++e) lift *= 14112;
    for (const auto& t : tr[k].terms()) {
      const auto& c = t.coeff.coords();
      for (std::size_t i = 0; i < c.size(); ++i)
        if (i != m && sgn(c[i]) != 0) throw AlgebraError("transform coefficient is not a multiple of c7^" + std::to_string(m));
      phi += MPoly::monomial(pr, t.mono, FieldElem(c[m] * lift));
    }
    img[k] = phi;
  }
  TransformResult r;
  MPoly g = horner_substitute(detT, {5, 4, 3, 2, 1, 0, 6}, 0, img, pr);
  Rational scale = 1;
  for (int e = 0; e < 14; ++e) scale /= 14112;
  r.transformed = g * FieldElem(scale);
  if (delta_tilde.is_zero() || r.transformed.is_zero()) return r;
  FieldElem k = r.transformed.leading().coeff / delta_tilde.leading().coeff;
  r.kappa = k;
  r.matches = r.transformed == delta_tilde * k;
  return r;
}

FieldElem field_det(std::vector<std::vector<FieldElem>> m) {
  const std::size_t n = m.size();
  FieldElem det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return FieldElem(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    FieldElem inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      FieldElem f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
    }
  }
  return det;
}

std::vector<FieldElem> pointwise_kappa(const FrobMatrices& m, const MPoly& delta_tilde, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  auto tr = wdvv_transform();
  const auto& ctx = *m.C[0][0].context();
  std::vector<FieldElem> out;
  while (static_cast<int>(out.size()) < n) {
    std::vector<FieldElem> pt;
    for (int k = 0; k < 7; ++k) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      pt.emplace_back(q);
    }
    FieldElem dt = delta_tilde.evaluate(pt);
    if (dt.is_zero()) continue;
    std::vector<FieldElem> x(7, FieldElem(0));
    for (int k = 0; k < 5; ++k) x[k] = tr[k].evaluate(pt);
    x[6] = tr[5].evaluate(pt);
    FieldElem zv = tr[6].evaluate(pt);
    x[5] = ctx.v.evaluate(x) + zv * zv;
    std::vector<std::vector<FieldElem>> t(7, std::vector<FieldElem>(7));
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) t[i][j] = m.T[i][j].evaluate(x, zv);
    out.push_back(field_det(t) / dt);
  }
  return out;
}

}  // namespace e7
