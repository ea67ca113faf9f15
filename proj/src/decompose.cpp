#include "quiverlab/decompose.hpp"

#include <algorithm>
#include <random>

#include "quiverlab/errors.hpp"

namespace quiverlab {

namespace {

// ---- polynomials ----------------------------------------------------------

void trim(Polynomial& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::ptrdiff_t degree(const Polynomial& p) { return static_cast<std::ptrdiff_t>(p.size()) - 1; }

Polynomial monic(Polynomial p, const Field& f) {
  trim(p);
  if (p.empty()) return p;
  Scalar inv = f.inverse(p.back());
  for (auto& c : p) c = f.mul(c, inv);
  return p;
}

// quotient and remainder
std::pair<Polynomial, Polynomial> divmod(Polynomial a, Polynomial b, const Field& f) {
  trim(a);
  trim(b);
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  Polynomial q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  Scalar lead_inv = f.inverse(b.back());
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Scalar c = f.mul(a.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) f.sub_mul(a[shift + i], c, b[i]);
    trim(a);
  }
  trim(q);
  return {q, a};
}

Polynomial gcd(Polynomial a, Polynomial b, const Field& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b, f).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, f);
}

Polynomial derivative(const Polynomial& p, const Field& f) {
  Polynomial d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(f.mul(f.from_int(static_cast<long>(i)), p[i]));
  trim(d);
  return d;
}

Scalar evaluate(const Polynomial& p, const Scalar& x, const Field& f) {
  Scalar acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
  return acc;
}

// Square-free factors by multiplicity (Yun), characteristic zero only.
std::vector<Polynomial> squarefree_factors(const Polynomial& p, const Field& f) {
  std::vector<Polynomial> out;
  Polynomial a = monic(p, f);
  if (degree(a) < 1) return out;
  Polynomial c = gcd(a, derivative(a, f), f);
  Polynomial w = divmod(a, c, f).first;
  while (degree(c) > 0) {
    Polynomial y = gcd(w, c, f);
    Polynomial z = divmod(w, y, f).first;
    if (degree(z) > 0) out.push_back(monic(z, f));
    w = y;
    c = divmod(c, y, f).first;
  }
  if (degree(w) > 0) out.push_back(monic(w, f));
  return out;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  if (n == 0) return {};
  const mpz_class limit = 1000000;
  for (mpz_class d = 1; d * d <= n && d <= limit; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// ---- block-diagonal endomorphisms -----------------------------------------

ModuleMap block_power(const ModuleMap& phi, std::size_t k) {
  ModuleMap out;
  for (const auto& m : phi.components) out.components.push_back(power(m, k));
  return out;
}

ModuleMap evaluate_at(const Polynomial& p, const ModuleMap& phi, const Field& f) {
  ModuleMap out;
  for (const auto& m : phi.components) {
    Mat acc(f, m.rows(), m.cols());
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * m + Mat::identity(f, m.rows()).scaled(*it);
    out.components.push_back(std::move(acc));
  }
  return out;
}

ModuleMap shift(const ModuleMap& phi, const Scalar& lambda, const Field& f) {
  ModuleMap out;
  for (const auto& m : phi.components) out.components.push_back(m - Mat::identity(f, m.rows()).scaled(lambda));
  return out;
}

std::size_t max_block(const Representation& m) {
  std::size_t n = 0;
  for (auto d : m.dims()) n = std::max(n, d);
  return n;
}

// Fitting decomposition M = ker psi^N + im psi^N; nullopt when one side is 0.
std::optional<std::pair<Representation, Representation>> fitting_split(const Representation& m,
                                                                       const ModuleMap& psi) {
  ModuleMap p = block_power(psi, std::max<std::size_t>(max_block(m), 1));
  std::vector<Mat> ker, im;
  std::size_t kd = 0, id = 0;
  for (const auto& c : p.components) {
    ker.push_back(kernel_basis(c));
    im.push_back(column_space_basis(c));
    kd += ker.back().cols();
    id += im.back().cols();
  }
  if (kd == 0 || id == 0) return std::nullopt;
  return std::make_pair(subrepresentation(m, ker).module, subrepresentation(m, im).module);
}

std::optional<std::pair<Representation, Representation>> split_by(const Representation& m, const ModuleMap& phi) {
  const Field& f = m.field();
  Polynomial mu = minimal_polynomial(phi, f);
  if (degree(mu) < 1) return std::nullopt;
  for (const auto& lambda : polynomial_roots(mu, f)) {
    if (degree(mu) == 1) break;  // phi is a scalar
    if (auto s = fitting_split(m, shift(phi, lambda, f))) return s;
  }
  if (f.is_rational()) {
    auto factors = squarefree_factors(mu, f);
    if (factors.size() >= 2)
      if (auto s = fitting_split(m, evaluate_at(factors.front(), phi, f))) return s;
  }
  return std::nullopt;
}

std::optional<std::pair<Representation, Representation>> split_once(const Representation& m,
                                                                     const EngineOptions& opts) {
  const Field& f = m.field();
  const auto end = hom_space(m, m);
  if (end.size() <= 1) return std::nullopt;
  if (auto top = endomorphism_top_dimension(m); top && *top == 1) return std::nullopt;

  for (const auto& b : end)
    if (auto s = split_by(m, b)) return s;
  for (std::size_t i = 0; i < end.size(); ++i)
    for (std::size_t j = i + 1; j < end.size() && j < i + 4; ++j)
      if (auto s = split_by(m, add_maps(end[i], end[j]))) return s;

  std::mt19937_64 rng(opts.seed);
  for (std::size_t round = 0; round < opts.sweep_depth; ++round) {
    const long range = round < opts.sweep_depth / 2 ? 3 : 20;
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < end.size(); ++i)
      coeffs.push_back(f.from_int(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range));
    if (auto s = split_by(m, linear_combination(end, coeffs, m, m))) return s;
  }

  if (!f.is_rational()) {
    const std::uint64_t p = f.characteristic();
    double count = 1;
    for (std::size_t i = 0; i < end.size(); ++i) count *= static_cast<double>(p);
    if (count <= 4096) {
      std::vector<std::uint64_t> digits(end.size(), 0);
      for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(count); ++idx) {
        std::uint64_t r = idx;
        std::vector<Scalar> coeffs;
        for (std::size_t i = 0; i < end.size(); ++i) {
          coeffs.push_back(f.from_int(static_cast<long>(r % p)));
          r /= p;
        }
        if (auto s = fitting_split(m, linear_combination(end, coeffs, m, m))) return s;
      }
      return std::nullopt;  // every element is nilpotent or invertible: local
    }
  }
  throw InternalFault("could not decide whether a module of dimension vector " + dims_to_string(m.dims()) +
                      " decomposes within the sweep depth");
}

}  // namespace

Polynomial minimal_polynomial(const ModuleMap& phi, const Field& f) {
  // Powers of phi flattened blockwise; stop at the first linear dependency.
  auto flatten = [](const ModuleMap& m) {
    std::vector<Scalar> v;
    for (const auto& c : m.components) v.insert(v.end(), c.values().begin(), c.values().end());
    return v;
  };
  std::size_t total = 0;
  for (const auto& c : phi.components) total += c.rows();
  ModuleMap cur;
  for (const auto& c : phi.components) cur.components.push_back(Mat::identity(f, c.rows()));
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t k = 0; k <= total; ++k) {
    auto v = flatten(cur);
    if (!cols.empty()) {
      Mat basis(f, v.size(), cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i) basis(i, j) = cols[j][i];
      if (auto x = solve(basis, Mat::column(f, v))) {
        Polynomial p(k + 1);
        for (std::size_t j = 0; j < k; ++j) p[j] = f.neg((*x)(j, 0));
        p[k] = 1;
        return p;
      }
    } else if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; })) {
      return Polynomial{Scalar(1)};  // zero-dimensional module
    }
    cols.push_back(std::move(v));
    cur = compose(phi, cur);
  }
  throw InternalFault("minimal polynomial search exceeded the dimension bound");
}

std::vector<Scalar> polynomial_roots(const Polynomial& p_in, const Field& f) {
  Polynomial p = p_in;
  trim(p);
  std::vector<Scalar> roots;
  if (degree(p) < 1) return roots;
  if (!f.is_rational()) {
    const std::uint64_t q = f.characteristic();
    const std::uint64_t limit = std::min<std::uint64_t>(q, 4096);
    for (std::uint64_t x = 0; x < limit; ++x) {
      Scalar s = f.from_int(static_cast<long>(x));
      if (sgn(evaluate(p, s, f)) == 0) roots.push_back(s);
    }
    return roots;
  }
  // Integer coefficients.
  mpz_class den = 1;
  for (const auto& c : p) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> z;
  for (const auto& c : p) z.push_back(mpz_class(c * den));
  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (low + 1 >= z.size()) return roots;
  for (const auto& num : divisors(z[low])) {
    for (const auto& d : divisors(z.back())) {
      for (int sign : {1, -1}) {
        Scalar cand(num * sign, d);
        cand.canonicalize();
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (sgn(evaluate(p, cand, f)) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<std::size_t> endomorphism_top_dimension(const Representation& m) {
  if (!m.field().is_rational()) return std::nullopt;
  const auto end = hom_space(m, m);
  const Field& f = m.field();
  // rad End = kernel of the trace form tr(xy) in characteristic zero.
  Mat gram(f, end.size(), end.size());
  for (std::size_t i = 0; i < end.size(); ++i) {
    for (std::size_t j = i; j < end.size(); ++j) {
      Scalar t = 0;
      for (std::size_t v = 0; v < end[i].components.size(); ++v) {
        const Mat& x = end[i].at(v);
        const Mat& y = end[j].at(v);
        for (std::size_t a = 0; a < x.rows(); ++a)
          for (std::size_t b = 0; b < x.cols(); ++b) t += x(a, b) * y(b, a);
      }
      gram(i, j) = t;
      gram(j, i) = t;
    }
  }
  return rank(gram);
}

std::vector<Representation> decompose(const Representation& m, const EngineOptions& opts) {
  if (m.is_zero()) return {};
  std::vector<Representation> out;
  std::vector<Representation> work{m};
  while (!work.empty()) {
    Representation cur = std::move(work.back());
    work.pop_back();
    if (auto s = split_once(cur, opts)) {
      work.push_back(std::move(s->second));
      work.push_back(std::move(s->first));
    } else {
      out.push_back(std::move(cur));
    }
  }
  return out;
}

bool is_indecomposable(const Representation& m, const EngineOptions& opts) {
  if (m.is_zero()) return false;
  return !split_once(m, opts).has_value();
}

bool indecomposables_isomorphic(const Representation& x, const Representation& y) {
  if (x.dims() != y.dims()) return false;
  if (x.is_zero()) return true;
  const auto f = hom_space(x, y);
  if (f.empty()) return false;
  const auto g = hom_space(y, x);
  for (const auto& a : f) {
    for (const auto& b : g) {
      ModuleMap c = compose(b, a);
      bool invertible = true;
      for (const auto& comp : c.components)
        if (rank(comp) != comp.rows()) {
          invertible = false;
          break;
        }
      if (invertible) return true;
    }
  }
  return false;
}

namespace {

bool is_invertible(const ModuleMap& f) {
  for (const auto& c : f.components)
    if (!c.is_square() || rank(c) != c.rows()) return false;
  return true;
}

}  // namespace

bool is_isomorphic(const Representation& m, const Representation& n, const EngineOptions& opts) {
  require_same_algebra(m, n);
  if (m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  const auto mn = hom_space(m, n);
  const std::size_t nm = hom_dim(n, m);
  if (mn.size() != nm) return false;
  if (hom_dim(m, m) != mn.size() || hom_dim(n, n) != mn.size()) return false;
  if (mn.empty()) return false;

  const Field& f = m.field();
  for (const auto& b : mn)
    if (is_invertible(b)) return true;
  std::mt19937_64 rng(opts.seed);
  for (std::size_t round = 0; round < opts.sweep_depth; ++round) {
    const long range = round < opts.sweep_depth / 2 ? 5 : 50;
    std::vector<Scalar> coeffs;
    for (std::size_t i = 0; i < mn.size(); ++i)
      coeffs.push_back(f.from_int(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range));
    if (is_invertible(linear_combination(mn, coeffs, m, n))) return true;
  }
  // Escalate: compare indecomposable summands.
  auto xs = decompose(m, opts);
  auto ys = decompose(n, opts);
  if (xs.size() != ys.size()) return false;
  std::vector<bool> used(ys.size(), false);
  for (const auto& x : xs) {
    bool matched = false;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (used[j] || !indecomposables_isomorphic(x, ys[j])) continue;
      used[j] = true;
      matched = true;
      break;
    }
    if (!matched) return false;
  }
  return true;
}

std::optional<std::size_t> find_isomorphic(const Representation& x, const std::vector<Representation>& coll) {
  for (std::size_t i = 0; i < coll.size(); ++i)
    if (indecomposables_isomorphic(x, coll[i])) return i;
  return std::nullopt;
}

Membership add_membership(const Representation& x, const std::vector<Representation>& coll,
                          const EngineOptions& opts) {
  if (x.is_zero()) return {};
  const Field& f = x.field();
  // Flattened composites X -> c -> X.
  std::vector<std::vector<Scalar>> span;
  for (const auto& c : coll) {
    require_same_algebra(x, c);
    bool fits = true;
    for (std::size_t v = 0; v < c.dims().size(); ++v)
      if (c.dim(v) > x.dim(v)) fits = false;
    if (!fits || c.is_zero()) continue;
    const auto to = hom_space(x, c);
    if (to.empty()) continue;
    const auto back = hom_space(c, x);
    for (const auto& a : to) {
      for (const auto& b : back) {
        ModuleMap comp = compose(b, a);
        std::vector<Scalar> flat;
        for (const auto& m : comp.components) flat.insert(flat.end(), m.values().begin(), m.values().end());
        span.push_back(std::move(flat));
      }
    }
  }
  std::vector<Scalar> id;
  for (const auto& m : identity_map(x).components) id.insert(id.end(), m.values().begin(), m.values().end());
  if (!span.empty()) {
    Mat basis(f, id.size(), span.size());
    for (std::size_t j = 0; j < span.size(); ++j)
      for (std::size_t i = 0; i < id.size(); ++i) basis(i, j) = span[j][i];
    if (solve(basis, Mat::column(f, id))) return {};
  }
  Membership out;
  out.member = false;
  for (auto& part : decompose(x, opts)) {
    if (!find_isomorphic(part, coll)) {
      out.missing = std::move(part);
      return out;
    }
  }
  throw InternalFault("identity does not factor through the collection but every summand matched a member");
}

}  // namespace quiverlab
