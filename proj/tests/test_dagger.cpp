#include "doctest.h"

#include "isokit/dagger.hpp"
#include "isokit/kottwitz_set.hpp"
#include "oracles.hpp"

using namespace isokit;

namespace {

/// Fixed vectors of `action` inside the coroot span of J, by bounded search
/// over integer combinations of the simple coroots of J.
bool has_small_fixed_vector(const BasedRootDatum& rd, const LeviSubset& j, const IntMatrix& action) {
  if (j.empty()) return false;
  std::vector<IntVector> cols;
  for (auto i : j.members()) cols.push_back(rd.simple_coroot(i));
  const IntMatrix coroots = IntMatrix::from_columns(cols, rd.rank());
  return oracle::small_kernel_vector((action - IntMatrix::identity(rd.rank())) * coroots, 3).has_value();
}

}  // namespace

TEST_CASE("twisted Coxeter element of A1") {
  const auto rd = presets::sl(2);
  const auto c = twisted_coxeter(rd, FrobeniusDatum::split(1));
  CHECK(c.word == std::vector<std::size_t>{0});
  CHECK(c.matrix(0, 0) == -1);
}

TEST_CASE("twisted Coxeter element of A2") {
  const auto rd = presets::sl(3);
  const auto c = twisted_coxeter(rd, FrobeniusDatum::split(2));
  CHECK(c.word == std::vector<std::size_t>{0, 1});
  CHECK(c.matrix == rd.simple_reflection(0) * rd.simple_reflection(1));
  CHECK_FALSE(oracle::small_kernel_vector(c.matrix - IntMatrix::identity(2), 4));
  CHECK(is_elliptic_on(rd, LeviSubset::full(2), c.matrix));
}

TEST_CASE("twisted Coxeter element of A2 with the diagram flip") {
  const auto rd = presets::sl(3);
  const auto fd = presets::a_type_flip(3);
  const auto c = twisted_coxeter(rd, fd);
  CHECK(c.word == std::vector<std::size_t>{0});
  const IntMatrix action = c.matrix * fd.sigma();
  CHECK_FALSE(oracle::small_kernel_vector(action - IntMatrix::identity(2), 4));
  CHECK(is_elliptic_on(rd, LeviSubset::full(2), action));
}

TEST_CASE("elliptic tori") {
  const auto gl2 = presets::gl(2);
  const auto t0 = elliptic_torus(gl2, FrobeniusDatum::split(2), LeviSubset{});
  CHECK(t0.twist.word.empty());
  CHECK(t0.action.is_identity());
  CHECK(t0.split_degree == 1);
  const auto t1 = elliptic_torus(gl2, FrobeniusDatum::split(2), LeviSubset::full(1));
  CHECK(t1.twist.word == std::vector<std::size_t>{0});
  CHECK(t1.split_degree == 2);

  const auto gl4 = presets::gl(4);
  const auto t = elliptic_torus(gl4, FrobeniusDatum::split(4), LeviSubset::full(3));
  CHECK(t.split_degree == 4);
  // The only fixed vectors are central: (1,1,1,1) spans the kernel of action - 1.
  const auto fixed = rational_kernel(t.action - IntMatrix::identity(4));
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0][0] == fixed[0][1]);
  CHECK(fixed[0][1] == fixed[0][2]);
  CHECK(fixed[0][2] == fixed[0][3]);
  CHECK_FALSE(has_small_fixed_vector(gl4, LeviSubset::full(3), t.action));

  try {
    elliptic_torus(presets::gl(3), presets::gl_flip(3), LeviSubset({0}));
    FAIL("expected NotSigmaStable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSigmaStable);
  }
}

TEST_CASE("ellipticity agrees with a bounded fixed-vector search") {
  const std::vector<std::pair<BasedRootDatum, FrobeniusDatum>> data{
      {presets::gl(5), FrobeniusDatum::split(5)}, {presets::gl(4), presets::gl_flip(4)},
      {presets::gsp(3), FrobeniusDatum::split(4)}, {presets::sl(4), presets::a_type_flip(4)},
      {presets::pgl(3), presets::a_type_flip(3)}};
  for (const auto& [rd, fd] : data)
    for (const auto& j : stable_levi_subsets(rd, fd)) {
      const auto t = elliptic_torus(rd, fd, j);
      CAPTURE(rd.name());
      CHECK_FALSE(has_small_fixed_vector(rd, j, t.action));
      CHECK(power(t.action, t.split_degree).is_identity());
    }
}

TEST_CASE("GL2 witnesses") {
  const auto rd = presets::gl(2);
  const auto fd = FrobeniusDatum::split(2);
  const IntVector mu = int_vector({1, 0});
  const auto basic = basic_class(rd, fd, mu);
  const auto w = find_witness(rd, fd, mu, basic);
  CHECK(w.levi == LeviSubset::full(1));
  CHECK(w.mu_prime == int_vector({1, 0}));
  // Direct two-step norm: (mu' + s(mu')) / 2.
  const IntVector two_step = w.mu_prime + rd.reflect(0, w.mu_prime);
  CHECK(Rat(1, 2) * to_rational(two_step) == basic.newton);
  CHECK(w.newton_check == rat_vector({{1, 2}, {1, 2}}));

  const auto ord = mu_ordinary(rd, fd, mu);
  const auto wo = find_witness(rd, fd, mu, ord);
  CHECK(wo.levi.empty());
  CHECK(wo.newton_check == to_rational(int_vector({1, 0})));
  CHECK(pi1_coinvariants(rd, fd, wo.levi).element(wo.mu_prime) == ord.kappa);

  const auto zero = basic_class(rd, fd, int_vector({0, 0}));
  const auto wz = find_witness(rd, fd, int_vector({0, 0}), zero);
  CHECK(is_zero(wz.mu_prime));
}

TEST_CASE("every class has a witness and serial and parallel searches agree") {
  const std::vector<std::tuple<BasedRootDatum, FrobeniusDatum, IntVector>> data{
      {presets::gl(4), FrobeniusDatum::split(4), presets::gl_minuscule(4, 2)},
      {presets::gl(5), presets::gl_flip(5), presets::gl_minuscule(5, 2)},
      {presets::gsp(2), FrobeniusDatum::split(3), presets::siegel_cocharacter(2)},
      {presets::pgl(4), presets::a_type_flip(4), int_vector({0, 1, 0})}};
  for (const auto& [rd, fd, mu] : data) {
    for (const auto& cls : enumerate(rd, fd, mu).classes) {
      const auto a = find_witness(rd, fd, mu, cls, Execution::serial);
      const auto b = find_witness(rd, fd, mu, cls, Execution::parallel);
      CHECK(a.mu_prime == b.mu_prime);
      CHECK(pi1_coinvariants(rd, fd, cls.levi).element(a.mu_prime) == cls.kappa);
      CHECK(a.newton_check == cls.newton);
    }
  }
}

TEST_CASE("a class with a foreign Kottwitz point has no witness") {
  const auto rd = presets::gl(2);
  const auto fd = FrobeniusDatum::split(2);
  auto cls = basic_class(rd, fd, int_vector({1, 0}));
  cls.kappa = pi1_coinvariants(rd, fd, cls.levi).element(int_vector({2, 0}));
  try {
    find_witness(rd, fd, int_vector({1, 0}), cls);
    FAIL("expected NoWitness");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoWitness);
  }
}
