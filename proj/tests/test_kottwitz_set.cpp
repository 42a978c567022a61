#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "isokit/adlv.hpp"
#include "isokit/kottwitz_set.hpp"
#include "isokit/newton_polygon.hpp"
#include "oracles.hpp"

using namespace isokit;

namespace {

RatVector as_rat(std::initializer_list<long> v) { return to_rational(int_vector(v)); }

std::vector<RatVector> newton_points(const StrataPoset& poset) {
  std::vector<RatVector> out;
  for (const auto& c : poset.classes) out.push_back(c.newton);
  std::sort(out.begin(), out.end());
  return out;
}

struct Instance {
  BasedRootDatum rd;
  FrobeniusDatum fd;
  IntVector mu;
  bool generic = false;
};

std::vector<Instance> instances() {
  std::vector<Instance> out;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t d = 0; d <= n; ++d) out.push_back({presets::gl(n), FrobeniusDatum::split(n), presets::gl_minuscule(n, d)});
  for (std::size_t n = 2; n <= 5; ++n)
    out.push_back({presets::gl(n), presets::gl_flip(n), presets::gl_minuscule(n, 1)});
  for (std::size_t g = 1; g <= 3; ++g)
    out.push_back({presets::gsp(g), FrobeniusDatum::split(g + 1), presets::siegel_cocharacter(g)});
  auto [res, fd] = presets::restriction_of_scalars(presets::gl(2), FrobeniusDatum::split(2), 2);
  out.push_back({res, fd, int_vector({1, 0, 0, 0})});
  out.push_back({res, fd, int_vector({1, 0, 1, 0})});
  out.push_back({presets::gl(3), FrobeniusDatum::split(3), int_vector({2, 0, 0}), true});
  out.push_back({presets::sl(3), presets::a_type_flip(3), int_vector({1, 1}), true});
  return out;
}

}  // namespace

TEST_CASE("dominance examples") {
  const auto gl2 = presets::gl(2);
  const auto coeff = dominance_coefficients(gl2, rat_vector({{1, 2}, {1, 2}}), as_rat({1, 0}));
  REQUIRE(coeff);
  CHECK(*coeff == RatVector{Rat(1, 2)});
  CHECK_FALSE(dominance_leq(gl2, as_rat({1, 0}), rat_vector({{1, 2}, {1, 2}})));
  CHECK(dominance_leq(gl2, as_rat({1, 0}), as_rat({1, 0})));
  // Different central parts are incomparable.
  CHECK_FALSE(dominance_leq(gl2, as_rat({0, 0}), as_rat({1, 0})));
}

TEST_CASE("dominance on GL_n is majorization") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 3);
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto rd = presets::gl(n);
    for (int trial = 0; trial < 200; ++trial) {
      RatVector a(n), b(n);
      for (auto& x : a) x = Rat(num(rng), den(rng)), x.canonicalize();
      for (auto& x : b) x = Rat(num(rng), den(rng)), x.canonicalize();
      std::sort(a.rbegin(), a.rend());
      std::sort(b.rbegin(), b.rend());
      // Force equal sums half the time so that comparable pairs occur.
      if (trial % 2 == 0) {
        Rat diff = 0;
        for (std::size_t i = 0; i < n; ++i) diff += a[i] - b[i];
        b[0] += diff;
        std::sort(b.rbegin(), b.rend());
      }
      CHECK(dominance_leq(rd, a, b) == oracle::majorizes(a, b));
    }
  }
}

TEST_CASE("rational cone membership agrees with a grid search") {
  const auto rd = presets::gsp(2);
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < rd.simple_count(); ++i) gens.push_back(to_rational(rd.simple_coroot(i)));
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    // Differences built from random coefficients k/2 in [0, 2], sometimes negated.
    RatVector diff(rd.rank(), Rat(0));
    for (const auto& g : gens) diff = diff + Rat(c(rng), 2) * g;
    if (trial % 3 == 0) diff = Rat(-1) * diff;
    const RatVector a = to_rational(int_vector({1, 0, 1}));
    const RatVector b = a + diff;
    for (auto& x : diff) x.canonicalize();
    CHECK(dominance_leq(rd, a, b) == oracle::grid_cone_search(diff, gens, 2, 2));
  }
}

TEST_CASE("dominance is a partial order on random dominant vectors") {
  std::mt19937_64 rng(99);
  const auto rd = presets::gl(4);
  std::vector<RatVector> pts;
  for (int i = 0; i < 30; ++i) {
    auto v = to_rational(oracle::random_vector(rng, 4, 2));
    v[3] -= v[0] + v[1] + v[2] + v[3];  // common total 0 for comparability
    pts.push_back(dominant_representative(rd, v).first);
  }
  for (const auto& a : pts) {
    CHECK(dominance_leq(rd, a, a));
    for (const auto& b : pts) {
      if (dominance_leq(rd, a, b) && dominance_leq(rd, b, a)) CHECK(a == b);
      for (const auto& c : pts)
        if (dominance_leq(rd, a, b) && dominance_leq(rd, b, c)) CHECK(dominance_leq(rd, a, c));
    }
  }
}

TEST_CASE("Newton point of a basic class") {
  const auto gl2 = presets::gl(2);
  const auto split2 = FrobeniusDatum::split(2);
  CHECK(newton_of_basic(gl2, split2, LeviSubset::full(1), int_vector({1, 0})) == rat_vector({{1, 2}, {1, 2}}));
  CHECK(newton_of_basic(gl2, split2, LeviSubset{}, int_vector({0, 1})) == as_rat({0, 1}));
  CHECK(is_zero(newton_of_basic(gl2, split2, LeviSubset::full(1), int_vector({0, 0}))));
  try {
    newton_of_basic(presets::gl(3), presets::gl_flip(3), LeviSubset({0}), int_vector({1, 0, 0}));
    FAIL("expected NotSigmaStable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSigmaStable);
  }
}

TEST_CASE("Newton point of a basic class agrees with literal orbit averaging") {
  std::mt19937_64 rng(4);
  for (const auto& inst : instances()) {
    for (const auto& j : stable_levi_subsets(inst.rd, inst.fd)) {
      for (int trial = 0; trial < 3; ++trial) {
        const auto mu = oracle::random_vector(rng, inst.rd.rank(), 2);
        CAPTURE(inst.rd.name());
        CHECK(newton_of_basic(inst.rd, inst.fd, j, mu) == oracle::averaged_newton(inst.rd, inst.fd.sigma(), j.members(), mu));
      }
    }
  }
}

TEST_CASE("stable Levi subsets") {
  CHECK(stable_levi_subsets(presets::gl(3), FrobeniusDatum::split(3)).size() == 4);
  const auto flipped = stable_levi_subsets(presets::gl(4), presets::gl_flip(4));
  // Orbits {0,2} and {1}: four unions.
  CHECK(flipped.size() == 4);
  for (const auto& j : flipped) CHECK(presets::gl_flip(4).is_stable(presets::gl(4), j));
}

TEST_CASE("GL2 has an ordinary and a basic class") {
  const auto poset = enumerate(presets::gl(2), FrobeniusDatum::split(2), int_vector({1, 0}));
  REQUIRE(poset.classes.size() == 2);
  CHECK(newton_points(poset) == std::vector<RatVector>{rat_vector({{1, 2}, {1, 2}}), as_rat({1, 0})});
  CHECK(poset.hasse.size() == 1);
  // Oracle: the GL polygons from (0,0) to (2,1).
  std::vector<NewtonPolygon> from_classes;
  for (const auto& c : poset.classes) from_classes.push_back(polygon_of(presets::gl(2), c.newton));
  std::sort(from_classes.begin(), from_classes.end());
  CHECK(from_classes == enumerate_gl(2, 1));
}

TEST_CASE("mu = 0 gives a single class") {
  for (const auto& inst : instances()) {
    const IntVector zero(inst.rd.rank(), Int(0));
    const auto poset = enumerate(inst.rd, inst.fd, zero);
    REQUIRE(poset.classes.size() == 1);
    CHECK(is_zero(poset.classes[0].newton));
    CHECK(poset.classes[0].levi == LeviSubset::full(inst.rd.simple_count()));
  }
}

TEST_CASE("GL3 basic class") {
  const auto rd = presets::gl(3);
  const auto b = basic_class(rd, FrobeniusDatum::split(3), int_vector({1, 0, 0}));
  CHECK(b.newton == rat_vector({{1, 3}, {1, 3}, {1, 3}}));
  CHECK(b.newton == oracle::averaged_newton(rd, IntMatrix::identity(3), {0, 1}, int_vector({1, 0, 0})));
}

TEST_CASE("GSp4 Siegel classes match the symmetric polygon oracle") {
  const auto rd = presets::gsp(2);
  const auto poset = enumerate(rd, FrobeniusDatum::split(3), presets::siegel_cocharacter(2));
  std::vector<NewtonPolygon> polys;
  for (const auto& c : poset.classes) polys.push_back(polygon_of(rd, c.newton));
  std::sort(polys.begin(), polys.end());
  CHECK(polys == enumerate_gsp(2));
  CHECK(poset.classes.size() == 3);
}

TEST_CASE("class invariants") {
  for (const auto& inst : instances()) {
    CAPTURE(inst.rd.name());
    EnumerateOptions opts;
    opts.generic = inst.generic;
    const auto poset = enumerate(inst.rd, inst.fd, inst.mu, opts);
    const auto nat = mu_natural(inst.rd, inst.fd, inst.mu);
    const auto bar = galois_average(inst.fd, inst.rd, inst.mu);
    std::set<std::pair<RatVector, IntVector>> keys;
    for (const auto& c : poset.classes) {
      CHECK(c.kappa_g == nat);
      CHECK(inst.rd.is_dominant(c.newton));
      CHECK(inst.fd.apply(c.newton) == c.newton);
      CHECK(centralizer_levi(inst.rd, c.newton) == c.levi);
      CHECK(dominance_leq(inst.rd, c.newton, bar));
      CHECK(pi1_coinvariants(inst.rd, inst.fd, c.levi).element(c.representative) == c.kappa);
      CHECK(adlv_nonempty(inst.rd, inst.fd, c.levi, c.kappa, inst.mu));
      CHECK(keys.insert({c.newton, c.kappa_g}).second);
    }
    // Hasse edges are strict covers.
    for (auto [lo, hi] : poset.hasse) {
      CHECK(dominance_leq(inst.rd, poset.classes[lo].newton, poset.classes[hi].newton));
      CHECK(poset.classes[lo].newton != poset.classes[hi].newton);
      for (std::size_t k = 0; k < poset.classes.size(); ++k) {
        if (k == lo || k == hi) continue;
        const bool between = dominance_leq(inst.rd, poset.classes[lo].newton, poset.classes[k].newton) &&
                             dominance_leq(inst.rd, poset.classes[k].newton, poset.classes[hi].newton);
        CHECK_FALSE(between);
      }
    }
  }
}

TEST_CASE("enumeration is complete with respect to the nonemptiness criterion") {
  for (const auto& inst : instances()) {
    if (inst.generic) continue;
    const auto poset = enumerate(inst.rd, inst.fd, inst.mu);
    const auto bar = galois_average(inst.fd, inst.rd, inst.mu);
    std::size_t expected = 0;
    for (const auto& j : stable_levi_subsets(inst.rd, inst.fd)) {
      for (const auto& kappa : p_mu_levi(inst.rd, inst.fd, j, inst.mu)) {
        // Representative: any P_mu element with this image.
        const auto group = pi1_coinvariants(inst.rd, inst.fd, j);
        for (const auto& x : p_mu(inst.rd, inst.mu).elements) {
          if (group.element(x) != kappa) continue;
          const auto nu = newton_of_basic(inst.rd, inst.fd, j, x);
          if (inst.rd.is_dominant(nu) && centralizer_levi(inst.rd, nu) == j && dominance_leq(inst.rd, nu, bar)) ++expected;
          break;
        }
      }
    }
    CAPTURE(inst.rd.name());
    CHECK(poset.classes.size() == expected);
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  for (const auto& inst : instances()) {
    EnumerateOptions serial{inst.generic, Execution::serial};
    EnumerateOptions parallel{inst.generic, Execution::parallel};
    const auto a = enumerate(inst.rd, inst.fd, inst.mu, serial);
    const auto b = enumerate(inst.rd, inst.fd, inst.mu, parallel);
    REQUIRE(a.classes.size() == b.classes.size());
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
      CHECK(a.classes[i].newton == b.classes[i].newton);
      CHECK(a.classes[i].kappa == b.classes[i].kappa);
      CHECK(a.classes[i].levi == b.classes[i].levi);
    }
    CHECK(a.hasse == b.hasse);
  }
}

TEST_CASE("poset extremes are the mu-ordinary and basic classes") {
  for (const auto& inst : instances()) {
    CAPTURE(inst.rd.name());
    EnumerateOptions opts;
    opts.generic = inst.generic;
    const auto poset = enumerate(inst.rd, inst.fd, inst.mu, opts);
    const auto top = poset.maximum();
    const auto bottom = poset.minimum();
    REQUIRE(top);
    REQUIRE(bottom);
    CHECK(poset.classes[*top].newton == galois_average(inst.fd, inst.rd, inst.mu));
    CHECK(poset.classes[*bottom].levi == LeviSubset::full(inst.rd.simple_count()));
    if (!inst.generic) {
      CHECK(mu_ordinary(inst.rd, inst.fd, inst.mu).newton == poset.classes[*top].newton);
      CHECK(basic_class(inst.rd, inst.fd, inst.mu).newton == poset.classes[*bottom].newton);
    }
  }
  // Split GL_n: the mu-ordinary Newton point is the dominant representative.
  CHECK(mu_ordinary(presets::gl(3), FrobeniusDatum::split(3), int_vector({0, 1, 0})).newton == as_rat({1, 0, 0}));
}

TEST_CASE("ordinary locus criterion") {
  CHECK(is_ordinary_nonempty(presets::gl(3), FrobeniusDatum::split(3), int_vector({1, 0, 0})));
  const auto t = presets::torus(2);
  CHECK_FALSE(is_ordinary_nonempty(t, FrobeniusDatum::permutation({1, 0}), int_vector({1, 0})));
  CHECK(is_ordinary_nonempty(t, FrobeniusDatum::permutation({1, 0}), int_vector({0, 0})));
  CHECK(is_ordinary_nonempty(t, FrobeniusDatum::permutation({1, 0}), int_vector({1, 1})));
}
