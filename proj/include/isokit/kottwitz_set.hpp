#pragma once

// B(G, mu) as classes (J, kappa, nu): J a sigma-stable set of simple roots,
// kappa the class of a basic element of M_J in pi_1(M_J)_Gamma, nu its
// Newton point (G-dominant, sigma-invariant, with centralizer exactly M_J).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "isokit/execution.hpp"
#include "isokit/frobenius.hpp"
#include "isokit/lattice.hpp"
#include "isokit/root_datum.hpp"

namespace isokit {

struct KottwitzClass {
  LeviSubset levi;
  /// Coordinates in pi1_coinvariants(rd, fd, levi).
  IntVector kappa;
  /// Image of kappa in pi_1(G)_Gamma (coordinates of pi1_coinvariants(rd, fd)).
  IntVector kappa_g;
  /// A cocharacter mu' with [mu']_{M_J} = kappa.
  IntVector representative;
  RatVector newton;
};

/// Classes sorted by (newton, kappa_g) with the covering relation of the
/// dominance order on Newton points.
struct StrataPoset {
  std::vector<KottwitzClass> classes;
  /// (lower, upper) index pairs with lower strictly below upper and nothing between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;

  /// Index of the unique maximal class, if the poset has one.
  std::optional<std::size_t> maximum() const;
  std::optional<std::size_t> minimum() const;
};

struct EnumerateOptions {
  /// Allow non-minuscule mu, drawing candidates from P_mu instead of the Weyl orbit.
  bool generic = false;
  Execution execution = Execution::parallel;
};

/// b - a is a nonnegative rational combination of simple coroots; returns the coefficients.
std::optional<RatVector> dominance_coefficients(const BasedRootDatum& rd, const RatVector& a, const RatVector& b);
bool dominance_leq(const BasedRootDatum& rd, const RatVector& a, const RatVector& b);

/// Newton point of the basic class of M_J whose Kottwitz point is [mu_rep]:
/// the W_J-average of mu_rep followed by the sigma-average.
RatVector newton_of_basic(const BasedRootDatum& rd, const FrobeniusDatum& fd, const LeviSubset& j,
                          const IntVector& mu_rep);

/// All sigma-stable subsets of the base, in lexicographic order of members.
std::vector<LeviSubset> stable_levi_subsets(const BasedRootDatum& rd, const FrobeniusDatum& fd);

StrataPoset enumerate(const BasedRootDatum& rd, const FrobeniusDatum& fd, const IntVector& mu,
                      const EnumerateOptions& options = {});

KottwitzClass mu_ordinary(const BasedRootDatum& rd, const FrobeniusDatum& fd, const IntVector& mu);
KottwitzClass basic_class(const BasedRootDatum& rd, const FrobeniusDatum& fd, const IntVector& mu);

/// sigma fixes the dominant representative of mu.
bool is_ordinary_nonempty(const BasedRootDatum& rd, const FrobeniusDatum& fd, const IntVector& mu);

}  // namespace isokit
