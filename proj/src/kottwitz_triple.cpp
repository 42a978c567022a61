#include "isokit/kottwitz_triple.hpp"

#include <algorithm>
#include <optional>

namespace isokit {

namespace {

void require_lattice_stable(const IntMatrix& action, const IntMatrix& lattice, ErrorCode code, const std::string& what) {
  for (std::size_t c = 0; c < lattice.cols(); ++c)
    if (!in_lattice(lattice, action.apply(lattice.column(c))))
      throw Error(code, what + " does not preserve the coroot lattice");
}

/// Generators of sum_{g in <gens>} (g - 1) X; the sum over a generating set suffices.
IntMatrix augmentation_image(const std::vector<IntMatrix>& gens, std::size_t rank) {
  IntMatrix out(rank, 0);
  for (const auto& g : gens) out = out.hconcat(g - IntMatrix::identity(rank));
  return out;
}

std::string describe(const IntVector& v) { return format(v); }

}  // namespace

void GlobalTorusDatum::validate() const {
  if (coroot_lattice.rows() != rank) throw Error(ErrorCode::BadInput, "coroot lattice has the wrong rank");
  for (const auto& g : global_generators) {
    if (g.rows() != rank || g.cols() != rank) throw Error(ErrorCode::BadInput, "global generator has the wrong size");
    if (!matrix_order(g)) throw Error(ErrorCode::BadInput, "global generator has infinite order");
  }
  for (const auto* local : {&infinity, &p, &l}) local->validate(rank);
  // The closure of the global group is only needed for local generators that
  // are not already global generators.
  std::optional<std::vector<IntMatrix>> global;
  for (const auto* local : {&infinity, &p, &l})
    for (const auto& g : local->generators) {
      if (g.is_identity() || std::find(global_generators.begin(), global_generators.end(), g) != global_generators.end())
        continue;
      if (!global) global = matrix_group(global_generators, rank);
      if (!std::binary_search(global->begin(), global->end(), g))
        throw Error(ErrorCode::InconsistentLocalData,
                    "local Galois group at " + local->place + " is not contained in the global group");
    }
  for (const auto& g : global_generators)
    require_lattice_stable(g, coroot_lattice, ErrorCode::InconsistentLocalData, "global Galois action");
}

IntVector gamma0_of_delta(const IntMatrix& action, const DeltaModel& delta) {
  return norm(action, delta.valuation, delta.degree);
}

IntVector gamma0_of_delta(const FrobeniusDatum& fd, const DeltaModel& delta) { return gamma0_of_delta(fd.sigma(), delta); }

bool check_star_delta(const BasedRootDatum& rd, const IntMatrix& action, const DeltaModel& delta, const IntVector& mu) {
  if (delta.valuation.size() != rd.rank() || mu.size() != rd.rank())
    throw Error(ErrorCode::DimensionMismatch, "delta and mu must live in X_*(T)");
  const IntMatrix q = rd.coroot_lattice();
  require_lattice_stable(action, q, ErrorCode::BadInput, "Galois action at p");
  const IntMatrix gens[] = {action};
  const FinAbGroup pi1 = coinvariants(gens, q);
  return pi1.element(delta.valuation) == pi1.element(mu);
}

bool check_star_delta(const BasedRootDatum& rd, const FrobeniusDatum& fd, const DeltaModel& delta,
                      const IntVector& mu) {
  return check_star_delta(rd, fd.sigma(), delta, mu);
}

bool check_star_gamma0(const IntMatrix& action, const DeltaModel& delta, const IntVector& mu) {
  return gamma0_of_delta(action, delta) == norm(action, mu, delta.degree);
}

bool check_star_gamma0(const FrobeniusDatum& fd, const DeltaModel& delta, const IntVector& mu) {
  return check_star_gamma0(fd.sigma(), delta, mu);
}

GammaLClass gamma_l_class(const GlobalTorusDatum& gtd, const IntVector& mu_h, const IntVector& mu) {
  if (mu_h.size() != gtd.rank || mu.size() != gtd.rank)
    throw Error(ErrorCode::DimensionMismatch, "mu and mu_h must live in X_*(T)");
  const IntVector alpha = -(mu_h + mu);
  if (!in_lattice(gtd.coroot_lattice, alpha))
    throw Error(ErrorCode::NotInCorootLattice, "-(mu_h + mu) = " + describe(alpha) + " is not in the coroot lattice");
  GammaLClass out;
  out.group = coinvariants(gtd.l.generators, gtd.rank);
  out.element = out.group.element(alpha);
  out.torsion = out.group.is_torsion(out.element);
  out.in_coroot_lattice = true;
  return out;
}

InvariantReport kottwitz_invariant(const GlobalTorusDatum& gtd, const IntVector& mu_h, const IntVector& mu,
                                   const IntVector& beta_l_offset) {
  gtd.validate();
  if (mu_h.size() != gtd.rank || mu.size() != gtd.rank)
    throw Error(ErrorCode::DimensionMismatch, "mu and mu_h must live in X_*(T)");
  if (!beta_l_offset.empty() && beta_l_offset.size() != gtd.rank)
    throw Error(ErrorCode::DimensionMismatch, "beta_l offset has the wrong length");

  const IntMatrix q = lattice_basis(gtd.coroot_lattice);
  IntMatrix killed(gtd.rank, 0);
  for (const auto* local : {&gtd.infinity, &gtd.p, &gtd.l})
    killed = killed.hconcat(lattice_intersection(augmentation_image(local->generators, gtd.rank), q));

  InvariantReport report;
  IntVector beta_l = -(mu_h + mu);
  if (!beta_l_offset.empty()) beta_l = beta_l + beta_l_offset;
  report.character = mu + mu_h + beta_l;

  const std::size_t k = q.cols();
  const auto coords = lattice_coordinates(q, report.character);
  report.well_defined = coords.has_value();
  if (k == 0) {
    report.vanishes = report.well_defined;
    return report;
  }
  std::vector<IntVector> relation_cols;
  for (std::size_t c = 0; c < killed.cols(); ++c) relation_cols.push_back(*lattice_coordinates(q, killed.column(c)));
  const FinAbGroup dual = cokernel(IntMatrix::from_columns(relation_cols, k));
  report.invariant_factors = dual.invariant_factors();
  if (report.well_defined) {
    report.image = dual.element(*coords);
    report.vanishes = is_zero(report.image);
  }
  return report;
}

GlobalTorusDatum default_global_datum(const BasedRootDatum& rd, const FrobeniusDatum& fd,
                                      const DaggerWitness& witness) {
  const IntMatrix l_action = twisted_coxeter(rd, fd).matrix * fd.sigma();
  GlobalTorusDatum gtd;
  gtd.rank = rd.rank();
  gtd.global_generators = {witness.torus.action, l_action};
  gtd.p.generators = {witness.torus.action};
  gtd.l.generators = {l_action};
  gtd.coroot_lattice = rd.coroot_lattice();
  return gtd;
}

IntVector default_mu_h(const BasedRootDatum& rd, const FrobeniusDatum& fd, const DaggerWitness& witness) {
  return -twisted_coxeter(rd, fd).matrix.apply(witness.mu_prime);
}

TripleCertificate assemble_certificate(const BasedRootDatum& rd, const FrobeniusDatum& fd,
                                       const GlobalTorusDatum& gtd, const DaggerWitness& witness,
                                       const IntVector& mu, const IntVector& mu_h, const std::string& centralizer,
                                       const Tampering& tampering) {
  if (centralizer != "torus")
    throw Error(ErrorCode::UnsupportedCentralizer,
                "only a maximal torus is supported as the centralizer of gamma_0, got '" + centralizer + "'");
  gtd.validate();
  if (gtd.rank != rd.rank()) throw Error(ErrorCode::DimensionMismatch, "global datum rank differs from the group");
  const IntMatrix& action = witness.torus.action;
  const IntMatrix witness_gen[] = {action};
  if (matrix_group(gtd.p.generators, gtd.rank) != matrix_group(witness_gen, gtd.rank))
    throw Error(ErrorCode::InconsistentLocalData, "Galois group at p is not generated by the witness torus action");

  TripleCertificate cert;
  cert.delta = {witness.mu_prime, witness.torus.split_degree};
  if (!tampering.delta_shift.empty()) {
    if (tampering.delta_shift.size() != rd.rank()) throw Error(ErrorCode::DimensionMismatch, "delta shift length");
    cert.delta.valuation = cert.delta.valuation + tampering.delta_shift;
  }
  cert.gamma0_valuation = gamma0_of_delta(action, cert.delta);

  const bool rational = action.apply(cert.gamma0_valuation) == cert.gamma0_valuation;
  cert.checks.push_back({"gamma0_rational", rational, "valuation of gamma_0 = " + describe(cert.gamma0_valuation)});

  const bool star_delta = check_star_delta(rd, fd, cert.delta, mu);
  cert.checks.push_back({"star_delta", star_delta,
                         "kappa(delta) = " + describe(pi1_coinvariants(rd, fd).element(cert.delta.valuation)) +
                             ", mu_natural = " + describe(mu_natural(rd, fd, mu))});

  const IntVector expected_norm = norm(action, witness.mu_prime, cert.delta.degree);
  const bool star_gamma0 = check_star_gamma0(action, cert.delta, witness.mu_prime);
  cert.checks.push_back({"star_gamma0", star_gamma0,
                         "Nm(delta) = " + describe(cert.gamma0_valuation) + ", Nm(mu') = " + describe(expected_norm)});

  try {
    const GammaLClass cls = gamma_l_class(gtd, mu_h, witness.mu_prime);
    cert.gamma_l_class = cls.element;
    cert.checks.push_back({"gamma_l", cls.torsion && cls.in_coroot_lattice,
                           std::string("class ") + describe(cls.element) + (cls.torsion ? " (torsion)" : " (not torsion)")});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInCorootLattice) throw;
    cert.checks.push_back({"gamma_l", false, e.what()});
  }

  cert.invariant = kottwitz_invariant(gtd, mu_h, witness.mu_prime, tampering.beta_l_offset);
  std::string detail = "character " + describe(cert.invariant.character);
  if (!cert.invariant.well_defined) detail += " is not in the coroot lattice";
  else detail += " maps to " + describe(cert.invariant.image);
  cert.checks.push_back({"kottwitz_invariant", cert.invariant.vanishes, detail});

  cert.accepted = std::all_of(cert.checks.begin(), cert.checks.end(), [](const CheckResult& c) { return c.passed; });
  return cert;
}

}  // namespace isokit
