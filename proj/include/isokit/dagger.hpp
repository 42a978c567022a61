#pragma once

// Witnesses (M_J, b, T, mu') for a class of B(G, mu): an elliptic unramified
// maximal torus of M_J, modelled by the twisted action w.sigma on X_*, and a
// cocharacter mu' in the Weyl orbit of mu with [mu']_{M_J} = kappa.

#include <cstddef>

#include "isokit/execution.hpp"
#include "isokit/frobenius.hpp"
#include "isokit/kottwitz_set.hpp"
#include "isokit/lattice.hpp"
#include "isokit/root_datum.hpp"

namespace isokit {

struct TwistedTorus {
  LeviSubset host_levi;
  /// Twisted Coxeter element of M_J, as a word in the simple reflections of G.
  WeylElement twist;
  /// twist.matrix * sigma.
  IntMatrix action;
  /// Order of `action`.
  std::size_t split_degree = 1;
};

struct DaggerWitness {
  LeviSubset levi;
  TwistedTorus torus;
  IntVector mu_prime;
  IntVector kappa;
  RatVector newton_check;
};

/// One simple reflection per sigma-orbit on the base of rd_m (the smallest
/// index of each orbit), multiplied in ascending order. The word refers to
/// positions in rd_m's base.
WeylElement twisted_coxeter(const BasedRootDatum& rd_m, const FrobeniusDatum& fd);

/// No nonzero vector in the span of the coroots of J is fixed by `action`.
bool is_elliptic_on(const BasedRootDatum& rd, const LeviSubset& j, const IntMatrix& action);

/// Throws NotSigmaStable, or NotElliptic if the twisted Coxeter element fails
/// to be elliptic on the derived part of M_J.
TwistedTorus elliptic_torus(const BasedRootDatum& rd, const FrobeniusDatum& fd, const LeviSubset& j);

/// First mu' with the Kottwitz point of `cls` in the Weyl orbit of mu,
/// scanned in decreasing lexicographic order, after checking the Newton
/// relation under the twisted action. Throws NoWitness.
DaggerWitness find_witness(const BasedRootDatum& rd, const FrobeniusDatum& fd, const IntVector& mu,
                           const KottwitzClass& cls, Execution execution = Execution::parallel);

}  // namespace isokit
