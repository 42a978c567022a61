#include "isokit/frobenius.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace isokit {

FrobeniusDatum::FrobeniusDatum(IntMatrix sigma) : sigma_(std::move(sigma)) {
  if (!sigma_.is_square()) throw Error(ErrorCode::BadInput, "Frobenius matrix must be square");
  const Int det = sigma_.determinant();
  if (det != 1 && det != -1) throw Error(ErrorCode::BadInput, "Frobenius matrix is not invertible over Z");
  const auto r = matrix_order(sigma_, 10000);
  if (!r) throw Error(ErrorCode::BadInput, "Frobenius matrix does not have finite order");
  order_ = *r;
}

FrobeniusDatum FrobeniusDatum::split(std::size_t rank) { return FrobeniusDatum(IntMatrix::identity(rank)); }

FrobeniusDatum FrobeniusDatum::permutation(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  IntMatrix m(n, n);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || hit[perm[i]]) throw Error(ErrorCode::BadInput, "not a permutation");
    hit[perm[i]] = true;
    m(perm[i], i) = 1;
  }
  return FrobeniusDatum(std::move(m));
}

IntMatrix FrobeniusDatum::dual() const {
  // sigma^{-1} = sigma^{r-1}
  return power(sigma_, order_ - 1).transpose();
}

std::optional<std::vector<std::size_t>> FrobeniusDatum::base_permutation(const BasedRootDatum& rd) const {
  if (rank() != rd.rank()) return std::nullopt;
  const IntMatrix dual_action = dual();
  std::map<IntVector, std::size_t> root_index;
  for (std::size_t k = 0; k < rd.roots().size(); ++k) root_index.emplace(rd.roots()[k], k);
  for (std::size_t k = 0; k < rd.roots().size(); ++k) {
    auto it = root_index.find(dual_action.apply(rd.roots()[k]));
    if (it == root_index.end()) return std::nullopt;
    if (sigma_.apply(rd.coroots()[k]) != rd.coroots()[it->second]) return std::nullopt;
  }
  std::vector<std::size_t> perm(rd.simple_count());
  for (std::size_t i = 0; i < rd.simple_count(); ++i) {
    const IntVector image = dual_action.apply(rd.simple_root(i));
    std::size_t j = 0;
    while (j < rd.simple_count() && rd.simple_root(j) != image) ++j;
    if (j == rd.simple_count()) return std::nullopt;
    perm[i] = j;
  }
  return perm;
}

std::vector<std::size_t> FrobeniusDatum::require_pinned(const BasedRootDatum& rd) const {
  auto perm = base_permutation(rd);
  if (!perm) throw Error(ErrorCode::NotPinned, "Frobenius does not preserve the base of " + rd.name());
  return *perm;
}

bool FrobeniusDatum::is_stable(const BasedRootDatum& rd, const LeviSubset& j) const {
  const auto perm = require_pinned(rd);
  for (auto i : j.members())
    if (!j.contains(perm[i])) return false;
  return true;
}

void LocalGaloisDatum::validate(std::size_t rank, std::size_t cap) const {
  for (const auto& g : generators)
    if (g.rows() != rank || g.cols() != rank)
      throw Error(ErrorCode::BadInput, "local Galois generator at " + place + " has wrong size");
  try {
    (void)matrix_group(generators, rank, cap);
  } catch (const Error& e) {
    throw Error(ErrorCode::BadInput, "local Galois group at " + place + " is not finite: " + e.what());
  }
}

std::vector<IntMatrix> matrix_group(std::span<const IntMatrix> generators, std::size_t rank, std::size_t cap) {
  for (const auto& g : generators) {
    const Int det = g.determinant();
    if (det != 1 && det != -1) throw Error(ErrorCode::BadInput, "generator is not in GL(Z)");
  }
  std::set<IntMatrix> seen{IntMatrix::identity(rank)};
  std::deque<IntMatrix> queue{IntMatrix::identity(rank)};
  while (!queue.empty()) {
    IntMatrix m = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      IntMatrix n = g * m;
      if (seen.insert(n).second) {
        if (seen.size() > cap) throw Error(ErrorCode::OrbitTooLarge, "matrix group exceeds cap");
        queue.push_back(std::move(n));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

RatVector galois_average(const FrobeniusDatum& fd, const BasedRootDatum& rd, const IntVector& mu) {
  fd.require_pinned(rd);
  const IntVector dom = dominant_representative(rd, mu).first;
  const IntVector sum = norm(fd, dom, fd.order());
  return Rat(1, static_cast<unsigned long>(fd.order())) * to_rational(sum);
}

IntVector norm(const IntMatrix& action, const IntVector& mu, std::size_t s) {
  IntVector sum(mu.size(), Int(0));
  IntVector term = mu;
  for (std::size_t i = 0; i < s; ++i) {
    sum = sum + term;
    term = action.apply(term);
  }
  return sum;
}

IntVector norm(const FrobeniusDatum& fd, const IntVector& mu, std::size_t s) { return norm(fd.sigma(), mu, s); }

FinAbGroup coinvariants(std::span<const IntMatrix> generators, const IntMatrix& relations) {
  IntMatrix m = relations;
  for (const auto& g : generators) {
    if (g.rows() != relations.rows()) throw Error(ErrorCode::DimensionMismatch, "generator rank");
    m = m.hconcat(g - IntMatrix::identity(g.rows()));
  }
  return cokernel(m);
}

FinAbGroup coinvariants(std::span<const IntMatrix> generators, std::size_t rank) {
  return coinvariants(generators, IntMatrix(rank, 0));
}

FinAbGroup pi1_coinvariants(const BasedRootDatum& rd, const FrobeniusDatum& fd, const LeviSubset& j) {
  if (!fd.is_stable(rd, j)) throw Error(ErrorCode::NotSigmaStable, "Levi subset is not sigma-stable");
  std::vector<IntVector> cols;
  for (auto i : j.members()) cols.push_back(rd.simple_coroot(i));
  const IntMatrix sigma[] = {fd.sigma()};
  return coinvariants(sigma, IntMatrix::from_columns(cols, rd.rank()));
}

FinAbGroup pi1_coinvariants(const BasedRootDatum& rd, const FrobeniusDatum& fd) {
  return pi1_coinvariants(rd, fd, LeviSubset::full(rd.simple_count()));
}

IntVector mu_natural(const BasedRootDatum& rd, const FrobeniusDatum& fd, const IntVector& mu) {
  return pi1_coinvariants(rd, fd).element(mu);
}

namespace presets {

FrobeniusDatum gl_flip(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(n - 1 - i, i) = -1;
  return FrobeniusDatum(std::move(m));
}

FrobeniusDatum a_type_flip(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "flip needs n >= 2");
  std::vector<std::size_t> perm(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) perm[i] = n - 2 - i;
  return FrobeniusDatum::permutation(perm);
}

std::pair<BasedRootDatum, FrobeniusDatum> restriction_of_scalars(const BasedRootDatum& rd,
                                                                 const FrobeniusDatum& fd, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::BadParameter, "restriction of scalars needs degree >= 1");
  if (fd.rank() != rd.rank()) throw Error(ErrorCode::DimensionMismatch, "Frobenius rank differs from datum");
  BasedRootDatum total = rd;
  for (std::size_t c = 1; c < k; ++c) total = product(total, rd);
  const std::size_t d = rd.rank();
  IntMatrix sigma(d * k, d * k);
  for (std::size_t c = 0; c + 1 < k; ++c)
    for (std::size_t i = 0; i < d; ++i) sigma((c + 1) * d + i, c * d + i) = 1;
  const std::size_t last = (k - 1) * d;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) sigma(i, last + j) = fd.sigma()(i, j);
  BasedRootDatum named(std::string("Res") + std::to_string(k) + "(" + rd.name() + ")", total.rank(), total.roots(),
                       total.coroots(), total.base());
  if (total.standard_weights()) named = named.with_standard_weights(*total.standard_weights());
  FrobeniusDatum frob(std::move(sigma));
  frob.require_pinned(named);
  return {std::move(named), std::move(frob)};
}

}  // namespace presets

}  // namespace isokit
