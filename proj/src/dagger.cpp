#include "isokit/dagger.hpp"

#include <algorithm>
#include <functional>

#include "isokit/kernels.hpp"

namespace isokit {

WeylElement twisted_coxeter(const BasedRootDatum& rd_m, const FrobeniusDatum& fd) {
  const auto perm = fd.require_pinned(rd_m);
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::size_t> word;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    word.push_back(i);
    for (std::size_t k = i; !seen[k]; k = perm[k]) seen[k] = true;
  }
  return WeylElement::from_word(rd_m, std::move(word));
}

bool is_elliptic_on(const BasedRootDatum& rd, const LeviSubset& j, const IntMatrix& action) {
  if (j.empty()) return true;
  std::vector<IntVector> cols;
  for (auto i : j.members()) cols.push_back(rd.simple_coroot(i));
  const IntMatrix coroots = IntMatrix::from_columns(cols, rd.rank());
  return rank((action - IntMatrix::identity(rd.rank())) * coroots) == j.size();
}

TwistedTorus elliptic_torus(const BasedRootDatum& rd, const FrobeniusDatum& fd, const LeviSubset& j) {
  if (!fd.is_stable(rd, j)) throw Error(ErrorCode::NotSigmaStable, "Levi subset is not sigma-stable");
  const BasedRootDatum rd_m = levi_datum(rd, j);
  const WeylElement local = twisted_coxeter(rd_m, fd);
  std::vector<std::size_t> word;
  for (auto pos : local.word) word.push_back(j.members()[pos]);
  WeylElement twist = WeylElement::from_word(rd, std::move(word));
  IntMatrix action = twist.matrix * fd.sigma();
  if (!is_elliptic_on(rd, j, action))
    throw Error(ErrorCode::NotElliptic, "twisted Coxeter element of " + rd_m.name() + " is not elliptic");
  const auto order = matrix_order(action, 1'000'000);
  if (!order) throw Error(ErrorCode::NotElliptic, "twisted action has no finite order");
  return {j, std::move(twist), std::move(action), *order};
}

DaggerWitness find_witness(const BasedRootDatum& rd, const FrobeniusDatum& fd, const IntVector& mu,
                           const KottwitzClass& cls, Execution execution) {
  const FinAbGroup group = pi1_coinvariants(rd, fd, cls.levi);
  std::vector<IntVector> orbit = weyl_orbit(rd, mu);
  std::reverse(orbit.begin(), orbit.end());
  const std::function<bool(std::size_t)> matches = [&](std::size_t i) {
    return group.element(orbit[i]) == cls.kappa;
  };
  const auto index = execution == Execution::serial ? kernels::first_match_serial(orbit.size(), matches)
                                                    : kernels::first_match_parallel(orbit.size(), matches);
  if (!index) throw Error(ErrorCode::NoWitness, "no element of W." + format(mu) + " has the required Kottwitz point");

  TwistedTorus torus = elliptic_torus(rd, fd, cls.levi);
  const IntVector& mu_prime = orbit[*index];
  const IntVector total = norm(torus.action, mu_prime, torus.split_degree);
  const RatVector average = Rat(1, static_cast<unsigned long>(torus.split_degree)) * to_rational(total);
  RatVector newton_check = dominant_representative(rd, average).first;
  if (newton_check != cls.newton)
    throw Error(ErrorCode::NoWitness, "Newton relation fails for " + format(mu_prime) + ": got " +
                                          format(newton_check) + ", expected " + format(cls.newton));
  return {cls.levi, std::move(torus), mu_prime, cls.kappa, std::move(newton_check)};
}

}  // namespace isokit
