#include "isokit/kottwitz_set.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "isokit/adlv.hpp"
#include "isokit/kernels.hpp"

namespace isokit {

std::optional<std::size_t> StrataPoset::maximum() const {
  // In a finite poset with covering relation `hasse`, a unique maximum is the
  // only element with no upper cover.
  std::vector<bool> has_cover(classes.size(), false);
  for (auto [lo, hi] : hasse) has_cover[lo] = true;
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (has_cover[i]) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

std::optional<std::size_t> StrataPoset::minimum() const {
  std::vector<bool> has_lower(classes.size(), false);
  for (auto [lo, hi] : hasse) has_lower[hi] = true;
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (has_lower[i]) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

std::optional<RatVector> dominance_coefficients(const BasedRootDatum& rd, const RatVector& a, const RatVector& b) {
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < rd.simple_count(); ++i) gens.push_back(to_rational(rd.simple_coroot(i)));
  return cone_coefficients(b - a, gens);
}

bool dominance_leq(const BasedRootDatum& rd, const RatVector& a, const RatVector& b) {
  return dominance_coefficients(rd, a, b).has_value();
}

RatVector newton_of_basic(const BasedRootDatum& rd, const FrobeniusDatum& fd, const LeviSubset& j,
                          const IntVector& mu_rep) {
  if (!fd.is_stable(rd, j)) throw Error(ErrorCode::NotSigmaStable, "Levi subset is not sigma-stable");
  if (mu_rep.size() != rd.rank()) throw Error(ErrorCode::DimensionMismatch, "cocharacter rank differs from datum");

  // W_J-average: the unique y in mu_rep + span(alpha_k^vee, k in J) with
  // <alpha_i, y> = 0 for i in J.
  RatVector y = to_rational(mu_rep);
  if (!j.empty()) {
    std::vector<RatVector> cartan_cols;
    RatVector pairings;
    for (auto i : j.members()) pairings.push_back(Rat(dot(rd.simple_root(i), mu_rep)));
    for (auto k : j.members()) {
      RatVector col;
      for (auto i : j.members()) col.push_back(Rat(dot(rd.simple_root(i), rd.simple_coroot(k))));
      cartan_cols.push_back(std::move(col));
    }
    const auto c = solve_in_span(pairings, cartan_cols);
    for (std::size_t pos = 0; pos < j.size(); ++pos) {
      const auto& coroot = rd.simple_coroot(j.members()[pos]);
      for (std::size_t t = 0; t < rd.rank(); ++t) y[t] -= (*c)[pos] * coroot[t];
    }
  }

  RatVector sum(rd.rank(), Rat(0));
  RatVector term = y;
  for (std::size_t i = 0; i < fd.order(); ++i) {
    sum = sum + term;
    term = fd.apply(term);
  }
  return Rat(1, static_cast<unsigned long>(fd.order())) * sum;
}

std::vector<LeviSubset> stable_levi_subsets(const BasedRootDatum& rd, const FrobeniusDatum& fd) {
  const auto perm = fd.require_pinned(rd);
  const std::size_t n = rd.simple_count();
  if (n >= 8 * sizeof(unsigned long) - 1) throw Error(ErrorCode::BadInput, "too many simple roots");
  std::vector<LeviSubset> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    bool stable = true;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n && stable; ++i) {
      if (!(mask >> i & 1UL)) continue;
      if (!(mask >> perm[i] & 1UL)) stable = false;
      members.push_back(i);
    }
    if (stable) out.emplace_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<KottwitzClass> classes_for_levi(const BasedRootDatum& rd, const FrobeniusDatum& fd,
                                            const LeviSubset& j, const std::vector<IntVector>& candidates,
                                            const RatVector& mu_bar, const FinAbGroup& pi1_g) {
  const FinAbGroup pi1_m = pi1_coinvariants(rd, fd, j);
  std::map<IntVector, IntVector> first_rep;  // kappa -> smallest candidate
  for (const auto& c : candidates) first_rep.emplace(pi1_m.element(c), c);

  std::vector<KottwitzClass> out;
  for (const auto& [kappa, rep] : first_rep) {
    RatVector nu = newton_of_basic(rd, fd, j, rep);
    if (!rd.is_dominant(nu)) continue;
    if (centralizer_levi(rd, nu) != j) continue;
    if (!dominance_leq(rd, nu, mu_bar)) continue;
    out.push_back({j, kappa, pi1_g.element(rep), rep, std::move(nu)});
  }
  return out;
}

}  // namespace

StrataPoset enumerate(const BasedRootDatum& rd, const FrobeniusDatum& fd, const IntVector& mu,
                      const EnumerateOptions& options) {
  fd.require_pinned(rd);
  if (!options.generic && !is_minuscule(rd, mu))
    throw Error(ErrorCode::NotMinuscule, format(mu) + " is not minuscule (use generic mode)");

  const std::vector<IntVector> candidates =
      options.generic ? p_mu(rd, mu, options.execution).elements : weyl_orbit(rd, mu);
  const RatVector mu_bar = galois_average(fd, rd, mu);
  const FinAbGroup pi1_g = pi1_coinvariants(rd, fd);
  const std::vector<LeviSubset> subsets = stable_levi_subsets(rd, fd);

  const std::function<std::vector<KottwitzClass>(std::size_t)> task = [&](std::size_t k) {
    return classes_for_levi(rd, fd, subsets[k], candidates, mu_bar, pi1_g);
  };
  const auto per_levi = options.execution == Execution::serial
                            ? kernels::indexed_map_serial(subsets.size(), task)
                            : kernels::indexed_map_parallel(subsets.size(), task);

  StrataPoset poset;
  for (const auto& batch : per_levi)
    for (const auto& c : batch) poset.classes.push_back(c);
  std::sort(poset.classes.begin(), poset.classes.end(), [](const KottwitzClass& a, const KottwitzClass& b) {
    return std::tie(a.newton, a.kappa_g, a.levi) < std::tie(b.newton, b.kappa_g, b.levi);
  });
  poset.classes.erase(std::unique(poset.classes.begin(), poset.classes.end(),
                                  [](const KottwitzClass& a, const KottwitzClass& b) {
                                    return a.newton == b.newton && a.kappa_g == b.kappa_g;
                                  }),
                      poset.classes.end());

  const std::size_t n = poset.classes.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      leq[a][b] = a == b || dominance_leq(rd, poset.classes[a].newton, poset.classes[b].newton);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (c != a && c != b && leq[a][c] && leq[c][b]) covered = false;
      if (covered) poset.hasse.emplace_back(a, b);
    }
  return poset;
}

KottwitzClass mu_ordinary(const BasedRootDatum& rd, const FrobeniusDatum& fd, const IntVector& mu) {
  const RatVector mu_bar = galois_average(fd, rd, mu);
  const IntVector dom = dominant_representative(rd, mu).first;
  const LeviSubset j = centralizer_levi(rd, mu_bar);
  RatVector nu = newton_of_basic(rd, fd, j, dom);
  if (nu != mu_bar) throw Error(ErrorCode::BadInput, "mu-ordinary Newton point mismatch");
  return {j, pi1_coinvariants(rd, fd, j).element(dom), mu_natural(rd, fd, mu), dom, std::move(nu)};
}

KottwitzClass basic_class(const BasedRootDatum& rd, const FrobeniusDatum& fd, const IntVector& mu) {
  const LeviSubset j = LeviSubset::full(rd.simple_count());
  RatVector nu = newton_of_basic(rd, fd, j, mu);
  const IntVector kappa = pi1_coinvariants(rd, fd).element(mu);
  return {j, kappa, kappa, mu, std::move(nu)};
}

bool is_ordinary_nonempty(const BasedRootDatum& rd, const FrobeniusDatum& fd, const IntVector& mu) {
  fd.require_pinned(rd);
  const IntVector dom = dominant_representative(rd, mu).first;
  return fd.apply(dom) == dom;
}

}  // namespace isokit
