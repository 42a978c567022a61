#pragma once

// Based root data stored as explicit vector lists: roots in X^* = Z^d,
// coroots in X_* = Z^d, the pairing is the dot product. Cocharacters (and
// Newton points) live in X_*; the Weyl group acts there by
// s_a(x) = x - <a, x> a^vee.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isokit/lattice.hpp"

namespace isokit {

/// A subset J of the simple roots, given by positions 0..|base|-1.
class LeviSubset {
 public:
  LeviSubset() = default;
  explicit LeviSubset(std::vector<std::size_t> members);

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::size_t i) const;

  static LeviSubset full(std::size_t simple_count);

  friend auto operator<=>(const LeviSubset&, const LeviSubset&) = default;

 private:
  std::vector<std::size_t> members_;
};

class BasedRootDatum {
 public:
  /// Validates every root-datum axiom; throws InvalidDatum otherwise.
  /// `base` indexes into `roots`.
  BasedRootDatum(std::string name, std::size_t rank, std::vector<IntVector> roots,
                 std::vector<IntVector> coroots, std::vector<std::size_t> base);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  const std::vector<IntVector>& roots() const { return roots_; }
  const std::vector<IntVector>& coroots() const { return coroots_; }
  const std::vector<std::size_t>& base() const { return base_; }
  std::size_t simple_count() const { return base_.size(); }

  const IntVector& simple_root(std::size_t i) const { return roots_[base_[i]]; }
  const IntVector& simple_coroot(std::size_t i) const { return coroots_[base_[i]]; }
  /// Coefficients of root k in the simple roots (all >= 0 or all <= 0).
  const IntVector& root_coefficients(std::size_t k) const { return coefficients_[k]; }

  /// Simple coroots as columns: generators of the coroot lattice.
  IntMatrix coroot_lattice() const;
  /// Reflection s_i on X_* as a matrix.
  IntMatrix simple_reflection(std::size_t i) const;
  IntVector reflect(std::size_t i, const IntVector& x) const;
  RatVector reflect(std::size_t i, const RatVector& x) const;

  bool is_dominant(const RatVector& x) const;
  bool is_dominant(const IntVector& x) const;

  /// Weights of a faithful "standard" representation as rows in X^*, when
  /// the datum has one (GL_n, GSp_2g); used to read off slopes.
  const std::optional<IntMatrix>& standard_weights() const { return standard_weights_; }
  BasedRootDatum with_standard_weights(IntMatrix weights) const;

 private:
  std::string name_;
  std::size_t rank_;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  std::vector<std::size_t> base_;
  std::vector<IntVector> coefficients_;
  std::optional<IntMatrix> standard_weights_;
};

/// Element of the Weyl group: a word in simple reflections together with its
/// matrix on X_*. The matrix is s_{word[0]} * s_{word[1]} * ...; equality is
/// matrix equality.
struct WeylElement {
  std::vector<std::size_t> word;
  IntMatrix matrix;

  static WeylElement identity(std::size_t rank);
  static WeylElement from_word(const BasedRootDatum& rd, std::vector<std::size_t> word);

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

/// Moves `v` into the closed dominant chamber by repeatedly applying the
/// first simple reflection with negative pairing. Returns the image and the
/// element w with w(v) = image.
std::pair<RatVector, WeylElement> dominant_representative(const BasedRootDatum& rd, const RatVector& v);
std::pair<IntVector, WeylElement> dominant_representative(const BasedRootDatum& rd, const IntVector& v);

/// Orbit-size cap: ISOKIT_ORBIT_CAP if set, else 10^7.
std::size_t orbit_cap();

/// Closure of {mu} under simple reflections, sorted lexicographically.
/// Throws OrbitTooLarge past `cap`.
std::vector<IntVector> weyl_orbit(const BasedRootDatum& rd, const IntVector& mu,
                                  std::optional<std::size_t> cap = std::nullopt);

/// |W| by closure of the simple reflection matrices.
std::size_t weyl_group_order(const BasedRootDatum& rd, std::size_t cap = 10'000'000);

/// pi_1 = X_* / (coroot lattice).
FinAbGroup fundamental_group(const BasedRootDatum& rd);

/// All root pairings of the dominant representative lie in {-1, 0, 1}.
bool is_minuscule(const BasedRootDatum& rd, const IntVector& mu);

/// Datum of the standard Levi M_J: same lattices, roots supported on J.
BasedRootDatum levi_datum(const BasedRootDatum& rd, const LeviSubset& j);

/// {i : <alpha_i, nu> = 0} for dominant nu; throws NotDominant otherwise.
LeviSubset centralizer_levi(const BasedRootDatum& rd, const RatVector& nu);

namespace presets {

/// GL_n: X_* = Z^n, roots e_i - e_j, base e_i - e_{i+1}. Dominant means
/// nonincreasing coordinates.
BasedRootDatum gl(std::size_t n);
/// SL_n, simply connected: X_* is the coroot lattice with basis the simple
/// coroots.
BasedRootDatum sl(std::size_t n);
/// PGL_n, adjoint: X^* is the root lattice with basis the simple roots.
BasedRootDatum pgl(std::size_t n);
/// GSp_{2g}: X_* = Z^{g+1}, (x_1..x_g; c) acting with weights x_i and c - x_i.
/// Base e_i - e_{i+1} and 2e_g - e_0. Dominant: x_1 >= ... >= x_g >= c/2.
BasedRootDatum gsp(std::size_t g);
/// Sp_{2g}: X_* = Z^g.
BasedRootDatum sp(std::size_t g);
BasedRootDatum torus(std::size_t rank);
/// Product datum on X_*(a) + X_*(b).
BasedRootDatum product(const BasedRootDatum& a, const BasedRootDatum& b);

/// Dispatch by tag ("GL", "SL", "PGL", "GSp", "Sp", "torus"). GSp and Sp take
/// the matrix size 2g. Throws UnknownPreset or BadParameter.
BasedRootDatum preset(const std::string& name, std::size_t parameter);

/// Siegel cocharacter (1,...,1;1) of GSp_{2g}: weights 1 and 0, each g times.
IntVector siegel_cocharacter(std::size_t g);
/// (1^d, 0^{n-d}) in X_*(GL_n).
IntVector gl_minuscule(std::size_t n, std::size_t d);

}  // namespace presets

}  // namespace isokit
