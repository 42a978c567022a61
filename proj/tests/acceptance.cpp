// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails. Time limits are wall-clock seconds for the whole criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "isokit/adlv.hpp"
#include "isokit/dagger.hpp"
#include "isokit/kottwitz_set.hpp"
#include "isokit/kottwitz_triple.hpp"
#include "isokit/newton_polygon.hpp"
#include "oracles.hpp"

using namespace isokit;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> body;
};

struct Instance {
  std::string label;
  BasedRootDatum rd;
  FrobeniusDatum fd;
  IntVector mu;
  bool generic = false;
};

std::string label_of(const BasedRootDatum& rd, const IntVector& mu, const std::string& twist) {
  return rd.name() + (twist.empty() ? "" : "/" + twist) + " mu=" + format(mu);
}

/// GL_n (n <= 8), GSp_2g (g <= 4), SL_n (n <= 6) and restriction-of-scalars
/// twists, plus the quasi-split unitary flips.
std::vector<Instance> preset_matrix() {
  std::vector<Instance> out;
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t d = 0; d <= n; ++d) {
      const auto rd = presets::gl(n);
      const auto mu = presets::gl_minuscule(n, d);
      out.push_back({label_of(rd, mu, ""), rd, FrobeniusDatum::split(n), mu});
    }
  for (std::size_t g = 1; g <= 4; ++g) {
    const auto rd = presets::gsp(g);
    const auto mu = presets::siegel_cocharacter(g);
    out.push_back({label_of(rd, mu, ""), rd, FrobeniusDatum::split(g + 1), mu});
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    // Only mu = 0 is minuscule in the simply connected datum; the first
    // simple coroot exercises the P_mu candidate path.
    const auto rd = presets::sl(n);
    const IntVector zero(n - 1, Int(0));
    out.push_back({label_of(rd, zero, ""), rd, FrobeniusDatum::split(n - 1), zero});
    IntVector coroot = zero;
    coroot[0] = 1;
    out.push_back({label_of(rd, coroot, "") + " generic", rd, FrobeniusDatum::split(n - 1), coroot, true});
    if (n >= 3) out.push_back({label_of(rd, coroot, "flip") + " generic", rd, presets::a_type_flip(n), coroot, true});
  }
  {
    auto [rd, fd] = presets::restriction_of_scalars(presets::gl(2), FrobeniusDatum::split(2), 2);
    out.push_back({label_of(rd, int_vector({1, 0, 0, 0}), "Res2"), rd, fd, int_vector({1, 0, 0, 0})});
    out.push_back({label_of(rd, int_vector({1, 0, 1, 0}), "Res2"), rd, fd, int_vector({1, 0, 1, 0})});
  }
  {
    auto [rd, fd] = presets::restriction_of_scalars(presets::gsp(2), FrobeniusDatum::split(3), 2);
    const IntVector mu = int_vector({1, 1, 1, 0, 0, 0});
    out.push_back({label_of(rd, mu, "Res2"), rd, fd, mu});
  }
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto rd = presets::gl(n);
    const auto mu = presets::gl_minuscule(n, 1);
    out.push_back({label_of(rd, mu, "flip"), rd, presets::gl_flip(n), mu});
  }
  return out;
}

StrataPoset strata(const Instance& inst) {
  EnumerateOptions opts;
  opts.generic = inst.generic;
  return enumerate(inst.rd, inst.fd, inst.mu, opts);
}

std::vector<NewtonPolygon> polygons_of(const BasedRootDatum& rd, const StrataPoset& poset) {
  std::vector<NewtonPolygon> out;
  for (const auto& c : poset.classes) out.push_back(polygon_of(rd, c.newton));
  std::sort(out.begin(), out.end());
  return out;
}

Outcome siegel_cross_check() {
  Outcome o;
  std::ostringstream counts;
  for (std::size_t g = 1; g <= 4; ++g) {
    const auto rd = presets::gsp(g);
    const auto poset = enumerate(rd, FrobeniusDatum::split(g + 1), presets::siegel_cocharacter(g));
    const auto mine = polygons_of(rd, poset);
    const auto oracle = enumerate_gsp(g);
    o.expect(mine == oracle, "GSp" + std::to_string(2 * g) + " polygon sets differ");
    counts << (g > 1 ? "," : "") << oracle.size();
  }
  o.detail = "strata counts g=1..4: " + counts.str();
  return o;
}

Outcome linear_cross_check() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t d = 0; d <= n; ++d) {
      const auto rd = presets::gl(n);
      const auto mu = presets::gl_minuscule(n, d);
      const auto mine = polygons_of(rd, enumerate(rd, FrobeniusDatum::split(n), mu));
      const auto bound = polygon_of(rd, to_rational(mu));
      const auto oracle = on_or_above(enumerate_gl(n, d), bound);
      o.expect(mine == oracle, "GL" + std::to_string(n) + " d=" + std::to_string(d));
      ++cases;
    }
  o.detail = std::to_string(cases) + " (n, d) cases";
  return o;
}

Outcome poset_extremes(const std::vector<Instance>& matrix) {
  Outcome o;
  std::size_t classes = 0;
  for (const auto& inst : matrix) {
    const auto poset = strata(inst);
    classes += poset.classes.size();
    const auto top = poset.maximum();
    const auto bottom = poset.minimum();
    // Uniqueness: exactly one class without upper covers and one without lower covers.
    std::vector<bool> has_upper(poset.classes.size()), has_lower(poset.classes.size());
    for (auto [lo, hi] : poset.hasse) has_upper[lo] = has_lower[hi] = true;
    const auto maximal = std::count(has_upper.begin(), has_upper.end(), false);
    const auto minimal = std::count(has_lower.begin(), has_lower.end(), false);
    o.expect(maximal == 1 && minimal == 1 && top && bottom, inst.label + ": extremes not unique");
    if (!top || !bottom) continue;
    o.expect(poset.classes[*top].newton == galois_average(inst.fd, inst.rd, inst.mu), inst.label + ": max is not mu-bar");
    o.expect(poset.classes[*bottom].levi == LeviSubset::full(inst.rd.simple_count()), inst.label + ": min is not basic");
    if (!inst.generic) {
      o.expect(mu_ordinary(inst.rd, inst.fd, inst.mu).newton == poset.classes[*top].newton, inst.label + ": mu_ordinary");
      o.expect(basic_class(inst.rd, inst.fd, inst.mu).newton == poset.classes[*bottom].newton, inst.label + ": basic_class");
    }
  }
  o.detail = std::to_string(matrix.size()) + " posets, " + std::to_string(classes) + " classes";
  return o;
}

/// All vectors with entries in {-1, 0, 1}.
std::vector<IntVector> unit_box(std::size_t d) {
  std::vector<IntVector> out;
  std::vector<long> digits(d, -1);
  while (true) {
    out.emplace_back(digits.begin(), digits.end());
    std::size_t i = 0;
    while (i < d && digits[i] == 1) digits[i++] = -1;
    if (i == d) return out;
    ++digits[i];
  }
}

Outcome hull_identity() {
  Outcome o;
  std::size_t checked = 0;
  std::vector<BasedRootDatum> sc_derived;
  for (std::size_t n = 2; n <= 6; ++n) sc_derived.push_back(presets::sl(n));
  for (std::size_t g = 1; g <= 3; ++g) {
    sc_derived.push_back(presets::sp(g));
    sc_derived.push_back(presets::gsp(g));
  }
  for (std::size_t n = 1; n <= 5; ++n) sc_derived.push_back(presets::gl(n));
  for (const auto& rd : sc_derived)
    for (const auto& mu : unit_box(rd.rank())) {
      if (!is_minuscule(rd, mu)) continue;
      o.expect(minuscule_hull_identity(rd, mu), rd.name() + " mu=" + format(mu));
      ++checked;
    }
  // Hypercube route for GL_n: 0/1 vectors are vertices of the unit cube, so
  // the only lattice points of their orbit hull are orbit points.
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t d = 0; d <= n; ++d) {
      const auto rd = presets::gl(n);
      const auto mu = presets::gl_minuscule(n, d);
      o.expect(minuscule_hull_identity(rd, mu), rd.name() + " mu=" + format(mu));
      ++checked;
    }
  const bool control = minuscule_hull_identity(presets::gl(2), int_vector({2, 0}));
  o.expect(!control, "control GL2 mu=(2,0) reported true");
  o.detail = std::to_string(checked) + " minuscule cocharacters, control false";
  return o;
}

Outcome dagger_universality(const std::vector<Instance>& matrix) {
  Outcome o;
  std::size_t witnesses = 0;
  for (const auto& inst : matrix) {
    for (const auto& cls : strata(inst).classes) {
      try {
        const auto w = find_witness(inst.rd, inst.fd, inst.mu, cls);
        o.expect(pi1_coinvariants(inst.rd, inst.fd, cls.levi).element(w.mu_prime) == cls.kappa,
                 inst.label + ": kappa mismatch");
        o.expect(is_elliptic_on(inst.rd, cls.levi, w.torus.action), inst.label + ": not elliptic");
        // Newton relation: r' nu = Nm(mu') up to the Weyl group.
        const IntVector nm = norm(w.torus.action, w.mu_prime, w.torus.split_degree);
        const RatVector scaled = Rat(static_cast<long>(w.torus.split_degree)) * cls.newton;
        o.expect(dominant_representative(inst.rd, to_rational(nm)).first == scaled, inst.label + ": Newton relation");
        ++witnesses;
      } catch (const Error& e) {
        o.expect(false, inst.label + ": " + e.what());
      }
    }
  }
  o.detail = std::to_string(witnesses) + " witnesses";
  return o;
}

Outcome triple_acceptance(const std::vector<Instance>& matrix) {
  Outcome o;
  std::size_t accepted = 0;
  for (const auto& inst : matrix) {
    for (const auto& cls : strata(inst).classes) {
      try {
        const auto w = find_witness(inst.rd, inst.fd, inst.mu, cls);
        const auto cert = assemble_certificate(inst.rd, inst.fd, default_global_datum(inst.rd, inst.fd, w), w, inst.mu,
                                               default_mu_h(inst.rd, inst.fd, w));
        std::string failing;
        for (const auto& c : cert.checks)
          if (!c.passed) failing += " " + c.name;
        o.expect(cert.accepted, inst.label + ": rejected by" + failing);
        if (cert.accepted) ++accepted;
      } catch (const Error& e) {
        o.expect(false, inst.label + ": " + e.what());
      }
    }
  }

  const auto failed = [](const TripleCertificate& cert, const std::string& name) {
    for (const auto& c : cert.checks)
      if (c.name == name) return !c.passed;
    return false;
  };
  // Tampering 1: delta shifted by a vector with nonzero norm.
  {
    const auto rd = presets::gl(2);
    const auto fd = FrobeniusDatum::split(2);
    const IntVector mu = int_vector({1, 0});
    const auto w = find_witness(rd, fd, mu, basic_class(rd, fd, mu));
    Tampering t;
    t.delta_shift = int_vector({1, 0});
    const auto cert =
        assemble_certificate(rd, fd, default_global_datum(rd, fd, w), w, mu, default_mu_h(rd, fd, w), "torus", t);
    o.expect(!cert.accepted && failed(cert, "star_gamma0"), "non-norm delta shift accepted");
  }
  // Tampering 2: odd parity of beta_l in the Z/2 setting of SL_2.
  {
    const auto rd = presets::sl(2);
    const auto fd = FrobeniusDatum::split(1);
    const IntVector mu = int_vector({0});
    const auto w = find_witness(rd, fd, mu, basic_class(rd, fd, mu));
    Tampering t;
    t.beta_l_offset = rd.simple_coroot(0);
    const auto cert =
        assemble_certificate(rd, fd, default_global_datum(rd, fd, w), w, mu, default_mu_h(rd, fd, w), "torus", t);
    o.expect(!cert.accepted && failed(cert, "kottwitz_invariant"), "odd-parity beta_l accepted");
  }
  // Tampering 3: a GSp_4 witness checked against a cocharacter with another mu-natural.
  {
    const auto rd = presets::gsp(2);
    const auto fd = FrobeniusDatum::split(3);
    const IntVector mu = presets::siegel_cocharacter(2);
    const auto w = find_witness(rd, fd, mu, basic_class(rd, fd, mu));
    const IntVector wrong = int_vector({1, 1, 2});
    const auto cert = assemble_certificate(rd, fd, default_global_datum(rd, fd, w), w, wrong, default_mu_h(rd, fd, w));
    o.expect(!cert.accepted && failed(cert, "star_delta"), "wrong mu-natural accepted");
  }
  o.detail = std::to_string(accepted) + " certificates accepted, 3 tamperings rejected";
  return o;
}

struct OrdinaryCase {
  std::string toml;
};

/// sigma fixes the dominant representative, computed by brute force: the
/// orbit under the root reflections, the unique member pairing
/// nonnegatively with every simple root.
bool sigma_fixes_dominant(const BasedRootDatum& rd, const FrobeniusDatum& fd, const IntVector& mu) {
  for (const auto& v : oracle::matrix_orbit(oracle::root_reflections(rd), to_rational(mu))) {
    bool dominant = true;
    for (std::size_t i = 0; i < rd.simple_count(); ++i) dominant = dominant && dot(rd.simple_root(i), v) >= 0;
    if (dominant) return fd.apply(v) == v;
  }
  return false;
}

Outcome ordinary_table() {
  const std::vector<std::string> specs = {
      // split
      "mu = [1, 0]\n[group]\npreset = \"GL\"\nn = 2\n",
      "mu = [0, 1, 1]\n[group]\npreset = \"GL\"\nn = 3\n",
      "mu = [1, 1, 1]\n[group]\npreset = \"GSp\"\nn = 4\n",
      "mu = [0, 1, 1, 1]\n[group]\npreset = \"GSp\"\nn = 6\n",
      "mu = [0, 0]\n[group]\npreset = \"torus\"\nn = 2\n",
      "mu = [1, 0, 0]\n[group]\npreset = \"PGL\"\nn = 4\n",
      "mu = [0, 0, 0, 0]\n[group]\npreset = \"SL\"\nn = 5\n",
      "mu = [2, -1]\n[group]\npreset = \"torus\"\nn = 2\n",
      // restriction of scalars
      "mu = [1, 0]\n[group]\npreset = \"torus\"\nn = 2\n[frobenius]\nkind = \"permutation\"\npermutation = [1, 0]\n",
      "mu = [1, 1]\n[group]\npreset = \"torus\"\nn = 2\n[frobenius]\nkind = \"permutation\"\npermutation = [1, 0]\n",
      "mu = [0, 0]\n[group]\npreset = \"torus\"\nn = 2\n[frobenius]\nkind = \"permutation\"\npermutation = [1, 0]\n",
      "mu = [1, 0, 0, 0]\n[group]\npreset = \"GL\"\nn = 2\n[frobenius]\nres_degree = 2\n",
      "mu = [1, 0, 1, 0]\n[group]\npreset = \"GL\"\nn = 2\n[frobenius]\nres_degree = 2\n",
      "mu = [0, 1, 1, 0]\n[group]\npreset = \"GL\"\nn = 2\n[frobenius]\nres_degree = 2\n",
      "mu = [1, 0, 0, 0, 0, 0]\n[group]\npreset = \"GL\"\nn = 2\n[frobenius]\nres_degree = 3\n",
      "mu = [1, 0, 1, 0, 1, 0]\n[group]\npreset = \"GL\"\nn = 2\n[frobenius]\nres_degree = 3\n",
      "mu = [1, 1, 1, 0, 0, 0]\n[group]\npreset = \"GSp\"\nn = 4\n[frobenius]\nres_degree = 2\n",
      "mu = [1, 1, 1, 1, 1, 1]\n[group]\npreset = \"GSp\"\nn = 4\n[frobenius]\nres_degree = 2\n",
      // quasi-split unitary shapes
      "mu = [1, 0, 0]\n[group]\npreset = \"GL\"\nn = 3\n[frobenius]\nkind = \"flip\"\n",
      "mu = [1, 0, 0, -1]\n[group]\npreset = \"GL\"\nn = 4\n[frobenius]\nkind = \"flip\"\n",
  };
  Outcome o;
  std::size_t trues = 0;
  for (const auto& text : specs) {
    const auto spec = cli::parse_spec(text);
    const auto result = cli::run_command("ordinary", spec, {});
    const bool expected = sigma_fixes_dominant(spec.datum, spec.frobenius, spec.mu);
    const bool got = result.exit_code == 0 && result.report["ordinary_nonempty"].get<bool>();
    o.expect(result.exit_code == 0 && got == expected, "case " + text.substr(0, text.find('\n')));
    if (expected) ++trues;
  }
  o.detail = std::to_string(specs.size()) + " cases, " + std::to_string(trues) + " expected true";
  return o;
}

Outcome foundation_oracles() {
  constexpr int kInstances = 10'000;
  Outcome o;
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::size_t> size(1, 3);

  int snf = 0;
  for (int i = 0; i < kInstances; ++i) {
    const IntMatrix m = oracle::random_matrix(rng, size(rng), size(rng), 6);
    const auto sf = smith_normal_form(m);
    std::vector<Int> diag;
    for (std::size_t k = 0; k < std::min(m.rows(), m.cols()); ++k)
      if (sf.diagonal(k, k) != 0) diag.push_back(sf.diagonal(k, k));
    const bool ok = diag == oracle::determinantal_invariant_factors(m) && sf.left * m * sf.right == sf.diagonal &&
                    (sf.left.determinant() == 1 || sf.left.determinant() == -1) &&
                    (sf.right.determinant() == 1 || sf.right.determinant() == -1);
    o.expect(ok, "SNF of " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    snf += ok;
  }

  int coker = 0;
  for (int i = 0; i < kInstances; ++i) {
    const IntMatrix m = oracle::random_matrix(rng, size(rng), size(rng), 4);
    const bool ok = cokernel(m).invariant_factors() == oracle::cokernel_factors(m);
    o.expect(ok, "cokernel");
    coker += ok;
  }

  int hull = 0;
  std::uniform_int_distribution<std::size_t> count(1, 4);
  std::uniform_int_distribution<long> coord(-1, 2);
  for (int i = 0; i < kInstances; ++i) {
    const std::size_t d = size(rng);
    std::vector<IntVector> verts;
    for (std::size_t k = count(rng); k > 0; --k) {
      IntVector v(d);
      for (auto& x : v) x = coord(rng);
      verts.push_back(std::move(v));
    }
    const bool ok = lattice_points_in_hull(verts, Execution::serial) == oracle::hull_points_brute_force(verts);
    o.expect(ok, "hull points");
    hull += ok;
  }
  o.detail = "agreement SNF " + std::to_string(snf) + "/" + std::to_string(kInstances) + ", cokernel " +
             std::to_string(coker) + "/" + std::to_string(kInstances) + ", hull " + std::to_string(hull) + "/" +
             std::to_string(kInstances);
  return o;
}

}  // namespace

int main() {
  const auto matrix = preset_matrix();
  const std::vector<Criterion> criteria = {
      {1, "Siegel cross-check", 10, siegel_cross_check},
      {2, "linear cross-check", 60, linear_cross_check},
      {3, "poset extremes", 0, [&] { return poset_extremes(matrix); }},
      {4, "convex hull identity", 0, hull_identity},
      {5, "dagger universality", 120, [&] { return dagger_universality(matrix); }},
      {6, "triple acceptance", 0, [&] { return triple_acceptance(matrix); }},
      {7, "ordinary criterion", 0, ordinary_table},
      {8, "foundation oracles", 60, foundation_oracles},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.passed = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
    const bool pass = o.passed && in_time;
    all = all && pass;
    std::printf("criterion %d %-22s %s  %s [%.2fs", c.number, c.name.c_str(), pass ? "PASS" : "FAIL", o.detail.c_str(),
                seconds);
    if (c.limit_seconds > 0) std::printf(" / limit %.0fs", c.limit_seconds);
    std::printf("]\n");
    if (!in_time) std::printf("    time limit exceeded\n");
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
  }
  return all ? 0 : 1;
}
