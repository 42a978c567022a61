#pragma once

// Lattice-level model of the Kottwitz triple (gamma_0; gamma, delta) attached
// to a witness torus T. delta is recorded by its valuation in X_*(T), gamma_0
// by the valuation of its norm, gamma_l by a class in X_*(T)_{Gamma_l}.
// The Kottwitz invariant is a character of
//   K = (cap_v Z(T^)^{Gamma_v} Z(G^)) / Z(G^),
// computed dually: K^D = Q^vee / sum_v ((sum_{g in Gamma_v} (g - 1) X) cap Q^vee).

#include <cstddef>
#include <string>
#include <vector>

#include "isokit/dagger.hpp"
#include "isokit/frobenius.hpp"
#include "isokit/lattice.hpp"
#include "isokit/root_datum.hpp"

namespace isokit {

struct DeltaModel {
  IntVector valuation;
  std::size_t degree = 1;
};

struct GlobalTorusDatum {
  std::size_t rank = 0;
  std::vector<IntMatrix> global_generators;
  LocalGaloisDatum infinity{"inf", {}};
  LocalGaloisDatum p{"p", {}};
  LocalGaloisDatum l{"l", {}};
  /// Generators (columns) of the coroot lattice Q^vee of the ambient group.
  IntMatrix coroot_lattice;

  /// Throws BadInput for malformed data and InconsistentLocalData when a
  /// local group is not inside the global one or Q^vee is not stable.
  void validate() const;
};

struct GammaLClass {
  FinAbGroup group;
  IntVector element;
  bool torsion = false;
  /// -(mu_h + mu) lies in Q^vee, so it maps to zero in pi_1(G).
  bool in_coroot_lattice = false;
};

struct InvariantReport {
  /// Invariant factors of K^D (empty when K is trivial; 0 marks a free part).
  std::vector<Int> invariant_factors;
  /// beta_p + beta_inf + beta_l in X_*(T).
  IntVector character;
  /// The character lies in Q^vee, so it descends to K at all.
  bool well_defined = false;
  /// Image of the character in K^D.
  IntVector image;
  bool vanishes = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TripleCertificate {
  DeltaModel delta;
  IntVector gamma0_valuation;
  IntVector gamma_l_class;
  InvariantReport invariant;
  std::vector<CheckResult> checks;
  bool accepted = false;
};

/// Deliberate corruptions used to confirm that each check can fail.
struct Tampering {
  /// Added to delta's valuation.
  IntVector delta_shift;
  /// Added to beta_l.
  IntVector beta_l_offset;
};

/// Valuation of gamma_0 = Nm_r(delta) under `action`.
IntVector gamma0_of_delta(const IntMatrix& action, const DeltaModel& delta);
IntVector gamma0_of_delta(const FrobeniusDatum& fd, const DeltaModel& delta);

/// The class of delta's valuation in pi_1(G)_{Gamma(p)} equals mu^natural.
/// `action` generates Gamma(p); it only needs to preserve the coroot lattice.
bool check_star_delta(const BasedRootDatum& rd, const IntMatrix& action, const DeltaModel& delta, const IntVector& mu);
bool check_star_delta(const BasedRootDatum& rd, const FrobeniusDatum& fd, const DeltaModel& delta,
                      const IntVector& mu);

/// lambda_T(gamma_0) = Nm_r(mu) as vectors of X_*(T).
bool check_star_gamma0(const IntMatrix& action, const DeltaModel& delta, const IntVector& mu);
bool check_star_gamma0(const FrobeniusDatum& fd, const DeltaModel& delta, const IntVector& mu);

/// Class of -(mu_h + mu) in X_*(T)_{Gamma_l}. Throws NotInCorootLattice.
GammaLClass gamma_l_class(const GlobalTorusDatum& gtd, const IntVector& mu_h, const IntVector& mu);

/// Kottwitz invariant of the character (beta_p, beta_inf, beta_l) =
/// (mu, mu_h, -(mu_h + mu) + beta_l_offset). Throws InconsistentLocalData.
InvariantReport kottwitz_invariant(const GlobalTorusDatum& gtd, const IntVector& mu_h, const IntVector& mu,
                                   const IntVector& beta_l_offset = {});

/// Global datum generated by the witness torus at p, by (c * sigma) at l
/// with c the twisted Coxeter element of G, and trivial at infinity.
GlobalTorusDatum default_global_datum(const BasedRootDatum& rd, const FrobeniusDatum& fd,
                                      const DaggerWitness& witness);
/// mu_h = -c(mu'), so that -(mu_h + mu') = c(mu') - mu' lies in Q^vee.
IntVector default_mu_h(const BasedRootDatum& rd, const FrobeniusDatum& fd, const DaggerWitness& witness);

/// Runs every check; the certificate is accepted iff all of them pass.
/// Throws UnsupportedCentralizer unless `centralizer` is "torus", and
/// InconsistentLocalData if the p-adic datum is not generated by the witness action.
TripleCertificate assemble_certificate(const BasedRootDatum& rd, const FrobeniusDatum& fd,
                                       const GlobalTorusDatum& gtd, const DaggerWitness& witness,
                                       const IntVector& mu, const IntVector& mu_h,
                                       const std::string& centralizer = "torus", const Tampering& tampering = {});

}  // namespace isokit
