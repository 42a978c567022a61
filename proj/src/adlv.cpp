#include "isokit/adlv.hpp"

#include <algorithm>
#include <set>

namespace isokit {

PmuSet p_mu(const BasedRootDatum& rd, const IntVector& mu, Execution execution) {
  if (mu.size() != rd.rank()) throw Error(ErrorCode::DimensionMismatch, "cocharacter rank differs from datum");
  const std::vector<IntVector> orbit = weyl_orbit(rd, mu);
  const FinAbGroup pi1 = fundamental_group(rd);
  const IntVector target = pi1.element(mu);
  PmuSet out{mu, {}};
  for (auto& p : lattice_points_in_hull(orbit, execution))
    if (pi1.element(p) == target) out.elements.push_back(std::move(p));
  return out;
}

std::vector<IntVector> p_mu_levi(const BasedRootDatum& rd, const FrobeniusDatum& fd, const LeviSubset& j,
                                 const IntVector& mu, Execution execution) {
  const FinAbGroup group = pi1_coinvariants(rd, fd, j);
  std::set<IntVector> image;
  for (const auto& p : p_mu(rd, mu, execution).elements) image.insert(group.element(p));
  return {image.begin(), image.end()};
}

bool adlv_nonempty(const BasedRootDatum& rd, const FrobeniusDatum& fd, const LeviSubset& j,
                   const IntVector& kappa, const IntVector& mu, Execution execution) {
  const FinAbGroup group = pi1_coinvariants(rd, fd, j);
  if (kappa.size() != group.invariant_factors().size())
    throw Error(ErrorCode::DimensionMismatch, "kappa has the wrong number of coordinates");
  if (group.reduce(kappa) != kappa) throw Error(ErrorCode::BadInput, "kappa is not in canonical form");
  const auto image = p_mu_levi(rd, fd, j, mu, execution);
  return std::binary_search(image.begin(), image.end(), kappa);
}

bool minuscule_hull_identity(const BasedRootDatum& rd, const IntVector& mu) {
  return p_mu(rd, mu).elements == weyl_orbit(rd, mu);
}

}  // namespace isokit
