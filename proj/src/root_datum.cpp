#include "isokit/root_datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

namespace isokit {

// ------------------------------------------------------------- LeviSubset

LeviSubset::LeviSubset(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw Error(ErrorCode::BadSubset, "repeated simple root in Levi subset");
}

bool LeviSubset::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

LeviSubset LeviSubset::full(std::size_t simple_count) {
  std::vector<std::size_t> all(simple_count);
  for (std::size_t i = 0; i < simple_count; ++i) all[i] = i;
  return LeviSubset(std::move(all));
}

// --------------------------------------------------------- BasedRootDatum

BasedRootDatum::BasedRootDatum(std::string name, std::size_t rank, std::vector<IntVector> roots,
                               std::vector<IntVector> coroots, std::vector<std::size_t> base)
    : name_(std::move(name)),
      rank_(rank),
      roots_(std::move(roots)),
      coroots_(std::move(coroots)),
      base_(std::move(base)) {
  auto fail = [this](const std::string& why) { throw Error(ErrorCode::InvalidDatum, name_ + ": " + why); };
  if (roots_.size() != coroots_.size()) fail("roots and coroots differ in number");
  std::map<IntVector, std::size_t> root_index;
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    if (roots_[k].size() != rank_ || coroots_[k].size() != rank_) fail("vector of wrong length");
    if (dot(roots_[k], coroots_[k]) != 2) fail("<alpha, alpha^vee> != 2 for root " + format(roots_[k]));
    if (!root_index.emplace(roots_[k], k).second) fail("repeated root " + format(roots_[k]));
  }
  // Reflections permute the matched pairs.
  for (std::size_t a = 0; a < roots_.size(); ++a) {
    for (std::size_t b = 0; b < roots_.size(); ++b) {
      const Int p = dot(roots_[b], coroots_[a]);
      const IntVector image = roots_[b] - p * roots_[a];
      auto it = root_index.find(image);
      if (it == root_index.end()) fail("reflection does not permute roots");
      const Int q = dot(roots_[a], coroots_[b]);
      if (coroots_[b] - q * coroots_[a] != coroots_[it->second]) fail("reflection does not permute coroots");
    }
  }
  for (auto i : base_)
    if (i >= roots_.size()) fail("base index out of range");
  {
    std::vector<std::size_t> sorted = base_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("repeated simple root");
  }
  std::vector<RatVector> simple;
  for (auto i : base_) simple.push_back(to_rational(roots_[i]));
  if (isokit::rank(simple) != simple.size()) fail("simple roots are linearly dependent");
  coefficients_.reserve(roots_.size());
  for (const auto& r : roots_) {
    auto c = solve_in_span(to_rational(r), simple);
    if (!c) fail("root " + format(r) + " is not in the span of the base");
    auto ci = to_integral(*c);
    if (!ci) fail("root " + format(r) + " has non-integral base coefficients");
    bool pos = false, neg = false;
    for (const auto& x : *ci) {
      pos |= sgn(x) > 0;
      neg |= sgn(x) < 0;
    }
    if (pos && neg) fail("root " + format(r) + " has coefficients of both signs");
    coefficients_.push_back(std::move(*ci));
  }
}

IntMatrix BasedRootDatum::coroot_lattice() const {
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < simple_count(); ++i) cols.push_back(simple_coroot(i));
  return IntMatrix::from_columns(cols, rank_);
}

IntMatrix BasedRootDatum::simple_reflection(std::size_t i) const {
  IntMatrix s = IntMatrix::identity(rank_);
  const auto& a = simple_root(i);
  const auto& c = simple_coroot(i);
  for (std::size_t r = 0; r < rank_; ++r)
    for (std::size_t col = 0; col < rank_; ++col) s(r, col) -= c[r] * a[col];
  return s;
}

IntVector BasedRootDatum::reflect(std::size_t i, const IntVector& x) const {
  return x - dot(simple_root(i), x) * simple_coroot(i);
}

RatVector BasedRootDatum::reflect(std::size_t i, const RatVector& x) const {
  const Rat p = dot(simple_root(i), x);
  RatVector out = x;
  const auto& c = simple_coroot(i);
  for (std::size_t k = 0; k < rank_; ++k) out[k] -= p * c[k];
  return out;
}

bool BasedRootDatum::is_dominant(const RatVector& x) const {
  for (std::size_t i = 0; i < simple_count(); ++i)
    if (sgn(dot(simple_root(i), x)) < 0) return false;
  return true;
}

bool BasedRootDatum::is_dominant(const IntVector& x) const {
  for (std::size_t i = 0; i < simple_count(); ++i)
    if (sgn(dot(simple_root(i), x)) < 0) return false;
  return true;
}

BasedRootDatum BasedRootDatum::with_standard_weights(IntMatrix weights) const {
  if (weights.cols() != rank_) throw Error(ErrorCode::DimensionMismatch, "standard weights of wrong rank");
  BasedRootDatum copy = *this;
  copy.standard_weights_ = std::move(weights);
  return copy;
}

// ------------------------------------------------------------ WeylElement

WeylElement WeylElement::identity(std::size_t rank) { return {{}, IntMatrix::identity(rank)}; }

WeylElement WeylElement::from_word(const BasedRootDatum& rd, std::vector<std::size_t> word) {
  IntMatrix m = IntMatrix::identity(rd.rank());
  for (auto i : word) {
    if (i >= rd.simple_count()) throw Error(ErrorCode::BadInput, "simple reflection index out of range");
    m = m * rd.simple_reflection(i);
  }
  return {std::move(word), std::move(m)};
}

// ---------------------------------------------------------------- orbits

namespace {

template <class Vec>
std::pair<Vec, WeylElement> to_dominant(const BasedRootDatum& rd, Vec v) {
  std::vector<std::size_t> applied;
  for (;;) {
    std::size_t i = 0;
    while (i < rd.simple_count() && sgn(dot(rd.simple_root(i), v)) >= 0) ++i;
    if (i == rd.simple_count()) break;
    v = rd.reflect(i, v);
    applied.push_back(i);
  }
  std::reverse(applied.begin(), applied.end());
  return {std::move(v), WeylElement::from_word(rd, std::move(applied))};
}

}  // namespace

std::pair<RatVector, WeylElement> dominant_representative(const BasedRootDatum& rd, const RatVector& v) {
  if (v.size() != rd.rank()) throw Error(ErrorCode::DimensionMismatch, "vector rank differs from datum");
  return to_dominant(rd, v);
}

std::pair<IntVector, WeylElement> dominant_representative(const BasedRootDatum& rd, const IntVector& v) {
  if (v.size() != rd.rank()) throw Error(ErrorCode::DimensionMismatch, "vector rank differs from datum");
  return to_dominant(rd, v);
}

std::size_t orbit_cap() {
  if (const char* env = std::getenv("ISOKIT_ORBIT_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

std::vector<IntVector> weyl_orbit(const BasedRootDatum& rd, const IntVector& mu, std::optional<std::size_t> cap) {
  if (mu.size() != rd.rank()) throw Error(ErrorCode::DimensionMismatch, "cocharacter rank differs from datum");
  const std::size_t limit = cap.value_or(orbit_cap());
  std::set<IntVector> seen{mu};
  std::deque<IntVector> queue{mu};
  while (!queue.empty()) {
    IntVector x = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < rd.simple_count(); ++i) {
      if (sgn(dot(rd.simple_root(i), x)) == 0) continue;
      IntVector y = rd.reflect(i, x);
      if (seen.insert(y).second) {
        if (seen.size() > limit)
          throw Error(ErrorCode::OrbitTooLarge, "orbit of " + format(mu) + " exceeds " + std::to_string(limit));
        queue.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::size_t weyl_group_order(const BasedRootDatum& rd, std::size_t cap) {
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < rd.simple_count(); ++i) gens.push_back(rd.simple_reflection(i));
  std::set<IntMatrix> seen{IntMatrix::identity(rd.rank())};
  std::deque<IntMatrix> queue{IntMatrix::identity(rd.rank())};
  while (!queue.empty()) {
    IntMatrix m = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      IntMatrix n = g * m;
      if (seen.insert(n).second) {
        if (seen.size() > cap) throw Error(ErrorCode::OrbitTooLarge, "Weyl group exceeds cap");
        queue.push_back(std::move(n));
      }
    }
  }
  return seen.size();
}

FinAbGroup fundamental_group(const BasedRootDatum& rd) { return cokernel(rd.coroot_lattice()); }

bool is_minuscule(const BasedRootDatum& rd, const IntVector& mu) {
  const IntVector dom = dominant_representative(rd, mu).first;
  for (const auto& a : rd.roots()) {
    const Int p = dot(a, dom);
    if (p > 1 || p < -1) return false;
  }
  return true;
}

BasedRootDatum levi_datum(const BasedRootDatum& rd, const LeviSubset& j) {
  for (auto i : j.members())
    if (i >= rd.simple_count()) throw Error(ErrorCode::BadSubset, "index " + std::to_string(i) + " not in the base");
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;
  std::vector<std::size_t> base(j.size());
  for (std::size_t k = 0; k < rd.roots().size(); ++k) {
    const auto& c = rd.root_coefficients(k);
    bool supported = true;
    for (std::size_t i = 0; i < c.size() && supported; ++i)
      if (sgn(c[i]) != 0 && !j.contains(i)) supported = false;
    if (!supported) continue;
    for (std::size_t pos = 0; pos < j.size(); ++pos)
      if (rd.base()[j.members()[pos]] == k) base[pos] = roots.size();
    roots.push_back(rd.roots()[k]);
    coroots.push_back(rd.coroots()[k]);
  }
  std::string name = rd.name() + "_J{";
  for (std::size_t pos = 0; pos < j.size(); ++pos) name += (pos ? "," : "") + std::to_string(j.members()[pos]);
  name += "}";
  BasedRootDatum out(std::move(name), rd.rank(), std::move(roots), std::move(coroots), std::move(base));
  if (rd.standard_weights()) return out.with_standard_weights(*rd.standard_weights());
  return out;
}

LeviSubset centralizer_levi(const BasedRootDatum& rd, const RatVector& nu) {
  std::vector<std::size_t> j;
  for (std::size_t i = 0; i < rd.simple_count(); ++i) {
    const int s = sgn(dot(rd.simple_root(i), nu));
    if (s < 0) throw Error(ErrorCode::NotDominant, format(nu) + " is not dominant");
    if (s == 0) j.push_back(i);
  }
  return LeviSubset(std::move(j));
}

// ---------------------------------------------------------------- presets

namespace presets {

namespace {

IntVector unit(std::size_t n, std::size_t i) {
  IntVector v(n, Int(0));
  v[i] = 1;
  return v;
}

// Closure of the simple (root, coroot) pairs under simple reflections.
BasedRootDatum from_simple_pairs(std::string name, std::size_t rank, const std::vector<IntVector>& simple_roots,
                                 const std::vector<IntVector>& simple_coroots) {
  std::vector<IntVector> roots = simple_roots;
  std::vector<IntVector> coroots = simple_coroots;
  std::set<IntVector> seen(roots.begin(), roots.end());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    for (std::size_t i = 0; i < simple_roots.size(); ++i) {
      IntVector r = roots[k] - dot(roots[k], simple_coroots[i]) * simple_roots[i];
      if (!seen.insert(r).second) continue;
      IntVector c = coroots[k] - dot(simple_roots[i], coroots[k]) * simple_coroots[i];
      roots.push_back(std::move(r));
      coroots.push_back(std::move(c));
    }
  }
  std::vector<std::size_t> base(simple_roots.size());
  for (std::size_t i = 0; i < base.size(); ++i) base[i] = i;
  return BasedRootDatum(std::move(name), rank, std::move(roots), std::move(coroots), std::move(base));
}

std::vector<std::vector<long>> cartan_a(std::size_t l) {
  std::vector<std::vector<long>> a(l, std::vector<long>(l, 0));
  for (std::size_t i = 0; i < l; ++i) {
    a[i][i] = 2;
    if (i + 1 < l) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

}  // namespace

BasedRootDatum gl(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::BadParameter, "GL_n needs n >= 1");
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;
  std::vector<std::size_t> base;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      IntVector r = unit(n, i) - unit(n, j);
      if (j == i + 1) base.push_back(roots.size());
      roots.push_back(r);
      coroots.push_back(std::move(r));
    }
  return BasedRootDatum("GL" + std::to_string(n), n, std::move(roots), std::move(coroots), std::move(base))
      .with_standard_weights(IntMatrix::identity(n));
}

BasedRootDatum sl(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "SL_n needs n >= 2");
  const auto a = cartan_a(n - 1);
  std::vector<IntVector> sr, sc;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector row(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) row[j] = a[i][j];
    sr.push_back(std::move(row));
    sc.push_back(unit(n - 1, i));
  }
  return from_simple_pairs("SL" + std::to_string(n), n - 1, sr, sc);
}

BasedRootDatum pgl(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "PGL_n needs n >= 2");
  const auto a = cartan_a(n - 1);
  std::vector<IntVector> sr, sc;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    IntVector col(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) col[i] = a[i][j];
    sc.push_back(std::move(col));
    sr.push_back(unit(n - 1, j));
  }
  return from_simple_pairs("PGL" + std::to_string(n), n - 1, sr, sc);
}

BasedRootDatum gsp(std::size_t g) {
  if (g == 0) throw Error(ErrorCode::BadParameter, "GSp_2g needs g >= 1");
  const std::size_t d = g + 1;  // last coordinate is the similitude c
  std::vector<IntVector> sr, sc;
  for (std::size_t i = 0; i + 1 < g; ++i) {
    sr.push_back(unit(d, i) - unit(d, i + 1));
    sc.push_back(unit(d, i) - unit(d, i + 1));
  }
  sr.push_back(Int(2) * unit(d, g - 1) - unit(d, g));
  sc.push_back(unit(d, g - 1));
  std::vector<IntVector> weights;
  for (std::size_t i = 0; i < g; ++i) weights.push_back(unit(d, i));
  for (std::size_t i = g; i-- > 0;) weights.push_back(unit(d, g) - unit(d, i));
  return from_simple_pairs("GSp" + std::to_string(2 * g), d, sr, sc)
      .with_standard_weights(IntMatrix::from_rows(weights, d));
}

BasedRootDatum sp(std::size_t g) {
  if (g == 0) throw Error(ErrorCode::BadParameter, "Sp_2g needs g >= 1");
  std::vector<IntVector> sr, sc;
  for (std::size_t i = 0; i + 1 < g; ++i) {
    sr.push_back(unit(g, i) - unit(g, i + 1));
    sc.push_back(unit(g, i) - unit(g, i + 1));
  }
  sr.push_back(Int(2) * unit(g, g - 1));
  sc.push_back(unit(g, g - 1));
  std::vector<IntVector> weights;
  for (std::size_t i = 0; i < g; ++i) weights.push_back(unit(g, i));
  for (std::size_t i = g; i-- > 0;) weights.push_back(-unit(g, i));
  return from_simple_pairs("Sp" + std::to_string(2 * g), g, sr, sc)
      .with_standard_weights(IntMatrix::from_rows(weights, g));
}

BasedRootDatum torus(std::size_t rank) {
  return BasedRootDatum("T" + std::to_string(rank), rank, {}, {}, {});
}

BasedRootDatum product(const BasedRootDatum& a, const BasedRootDatum& b) {
  const std::size_t d = a.rank() + b.rank();
  auto embed = [d](const IntVector& v, std::size_t offset) {
    IntVector out(d, Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
  };
  std::vector<IntVector> roots, coroots;
  for (std::size_t k = 0; k < a.roots().size(); ++k) {
    roots.push_back(embed(a.roots()[k], 0));
    coroots.push_back(embed(a.coroots()[k], 0));
  }
  for (std::size_t k = 0; k < b.roots().size(); ++k) {
    roots.push_back(embed(b.roots()[k], a.rank()));
    coroots.push_back(embed(b.coroots()[k], a.rank()));
  }
  std::vector<std::size_t> base = a.base();
  for (auto i : b.base()) base.push_back(a.roots().size() + i);
  BasedRootDatum out(a.name() + "x" + b.name(), d, std::move(roots), std::move(coroots), std::move(base));
  if (a.standard_weights() && b.standard_weights()) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < a.standard_weights()->rows(); ++i) rows.push_back(embed(a.standard_weights()->row(i), 0));
    for (std::size_t i = 0; i < b.standard_weights()->rows(); ++i)
      rows.push_back(embed(b.standard_weights()->row(i), a.rank()));
    return out.with_standard_weights(IntMatrix::from_rows(rows, d));
  }
  return out;
}

BasedRootDatum preset(const std::string& name, std::size_t parameter) {
  if (name == "GL") return gl(parameter);
  if (name == "SL") return sl(parameter);
  if (name == "PGL") return pgl(parameter);
  if (name == "GSp" || name == "Sp") {
    if (parameter == 0 || parameter % 2 != 0) throw Error(ErrorCode::BadParameter, name + " needs an even size 2g >= 2");
    return name == "GSp" ? gsp(parameter / 2) : sp(parameter / 2);
  }
  if (name == "torus") return torus(parameter);
  throw Error(ErrorCode::UnknownPreset, "unknown preset '" + name + "'");
}

IntVector siegel_cocharacter(std::size_t g) { return IntVector(g + 1, Int(1)); }

IntVector gl_minuscule(std::size_t n, std::size_t d) {
  if (d > n) throw Error(ErrorCode::BadParameter, "degree exceeds n");
  IntVector v(n, Int(0));
  for (std::size_t i = 0; i < d; ++i) v[i] = 1;
  return v;
}

}  // namespace presets

}  // namespace isokit
