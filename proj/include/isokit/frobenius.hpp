#pragma once

// Frobenius (and finite local Galois) actions on X_*. Only pinned actions are
// modelled: sigma preserves the base, so the canonical Galois action on the
// dominant chamber is the naive lattice action.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isokit/lattice.hpp"
#include "isokit/root_datum.hpp"

namespace isokit {

class FrobeniusDatum {
 public:
  /// sigma must be a finite-order automorphism of X_*; r is its order.
  explicit FrobeniusDatum(IntMatrix sigma);

  static FrobeniusDatum split(std::size_t rank);
  /// sigma(e_i) = e_{perm[i]}.
  static FrobeniusDatum permutation(const std::vector<std::size_t>& perm);

  const IntMatrix& sigma() const { return sigma_; }
  std::size_t order() const { return order_; }
  std::size_t rank() const { return sigma_.rows(); }

  IntVector apply(const IntVector& x) const { return sigma_.apply(x); }
  RatVector apply(const RatVector& x) const { return sigma_.apply(x); }
  /// Action on X^*: inverse transpose, so pairings are preserved.
  IntMatrix dual() const;

  /// Positions of sigma(alpha_i^vee) in the base, when sigma permutes the
  /// simple coroots and simple roots compatibly and permutes all roots.
  std::optional<std::vector<std::size_t>> base_permutation(const BasedRootDatum& rd) const;
  bool is_pinned_for(const BasedRootDatum& rd) const { return base_permutation(rd).has_value(); }
  /// Throws NotPinned.
  std::vector<std::size_t> require_pinned(const BasedRootDatum& rd) const;
  bool is_stable(const BasedRootDatum& rd, const LeviSubset& j) const;

 private:
  IntMatrix sigma_;
  std::size_t order_ = 1;
};

/// Finite group of lattice automorphisms attached to a place (inf, p, or a
/// finite prime l).
struct LocalGaloisDatum {
  std::string place;
  std::vector<IntMatrix> generators;

  /// Throws BadInput unless the generators are square of rank `rank` and
  /// generate a finite group of order <= cap.
  void validate(std::size_t rank, std::size_t cap = 1'000'000) const;
};

/// All elements of the group generated by `generators`, sorted. Throws
/// OrbitTooLarge past `cap`.
std::vector<IntMatrix> matrix_group(std::span<const IntMatrix> generators, std::size_t rank,
                                    std::size_t cap = 1'000'000);

/// (1/r) sum_{i<r} sigma^i(mu_dom): the Galois average of the dominant
/// representative. Throws NotPinned.
RatVector galois_average(const FrobeniusDatum& fd, const BasedRootDatum& rd, const IntVector& mu);

/// sum_{i<s} sigma^i(mu).
IntVector norm(const FrobeniusDatum& fd, const IntVector& mu, std::size_t s);
/// Same sum for an arbitrary lattice automorphism.
IntVector norm(const IntMatrix& action, const IntVector& mu, std::size_t s);

/// Z^d / (columns of `relations` + sum_g (g - 1) Z^d).
FinAbGroup coinvariants(std::span<const IntMatrix> generators, const IntMatrix& relations);
FinAbGroup coinvariants(std::span<const IntMatrix> generators, std::size_t rank);

/// pi_1(M_J)_Gamma = X_* / (coroots of J + (sigma - 1) X_*).
FinAbGroup pi1_coinvariants(const BasedRootDatum& rd, const FrobeniusDatum& fd, const LeviSubset& j);
/// pi_1(G)_Gamma.
FinAbGroup pi1_coinvariants(const BasedRootDatum& rd, const FrobeniusDatum& fd);

/// mu^natural: the class of mu in pi_1(G)_Gamma (coordinates of pi1_coinvariants(rd, fd)).
IntVector mu_natural(const BasedRootDatum& rd, const FrobeniusDatum& fd, const IntVector& mu);

namespace presets {

/// Pinned outer automorphism of GL_n: x -> -w_0 x.
FrobeniusDatum gl_flip(std::size_t n);
/// Diagram flip alpha_i <-> alpha_{n-i} for the SL_n / PGL_n presets (both
/// use a basis permuted by the flip).
FrobeniusDatum a_type_flip(std::size_t n);

/// Restriction of scalars along an unramified extension of degree k: k
/// copies of the datum, sigma(x_0, ..., x_{k-1}) = (s x_{k-1}, x_0, ..., x_{k-2})
/// with s the Frobenius of the base datum.
std::pair<BasedRootDatum, FrobeniusDatum> restriction_of_scalars(const BasedRootDatum& rd,
                                                                 const FrobeniusDatum& fd, std::size_t k);

}  // namespace presets

}  // namespace isokit
