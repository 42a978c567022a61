#pragma once

// Nonemptiness of affine Deligne-Lusztig varieties through the set P_mu of
// lattice points in the convex hull of W.mu that have the class of mu in
// pi_1(G).

#include <vector>

#include "isokit/execution.hpp"
#include "isokit/frobenius.hpp"
#include "isokit/lattice.hpp"
#include "isokit/root_datum.hpp"

namespace isokit {

struct PmuSet {
  IntVector mu;
  /// Sorted lexicographically.
  std::vector<IntVector> elements;
};

PmuSet p_mu(const BasedRootDatum& rd, const IntVector& mu, Execution execution = Execution::parallel);

/// Image of P_mu in pi_1(M_J)_Gamma, as sorted canonical coordinates.
std::vector<IntVector> p_mu_levi(const BasedRootDatum& rd, const FrobeniusDatum& fd, const LeviSubset& j,
                                 const IntVector& mu, Execution execution = Execution::parallel);

/// X_mu(b) is nonempty for the basic class kappa of M_J (canonical
/// coordinates in pi1_coinvariants(rd, fd, j)) iff kappa lies in the image of P_mu.
bool adlv_nonempty(const BasedRootDatum& rd, const FrobeniusDatum& fd, const LeviSubset& j,
                   const IntVector& kappa, const IntVector& mu, Execution execution = Execution::parallel);

/// For minuscule mu, P_mu is exactly the Weyl orbit of mu.
bool minuscule_hull_identity(const BasedRootDatum& rd, const IntVector& mu);

}  // namespace isokit
