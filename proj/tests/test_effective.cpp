#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "negcurve/effective.hpp"
#include "support/properties.hpp"

using namespace negcurve;

namespace {

std::vector<std::array<oracle::Complex, 3>> embedded(const Configuration& cfg) {
  std::vector<std::array<oracle::Complex, 3>> out;
  for (const auto& p : cfg.points) out.push_back(oracle::embed(p));
  return out;
}

std::vector<std::int64_t> mults(const DivisorClass& c) { return {c.mults.begin(), c.mults.end()}; }

std::int64_t expected_dimension(const DivisorClass& c) {
  return (c.degree + 1) * (c.degree + 2) / 2 - condition_count(c);
}

}  // namespace

TEST_CASE("monomial order") {
  const auto m = monomials(2);
  REQUIRE(m.size() == 6);
  CHECK(m.front() == std::array<int, 3>{2, 0, 0});
  CHECK(m[1] == std::array<int, 3>{1, 1, 0});
  CHECK(m.back() == std::array<int, 3>{0, 0, 2});
  CHECK(monomials(0).size() == 1);
}

TEST_CASE("sections of small classes on the dual hesse points") {
  const auto cfg = build_dual_hesse();
  CHECK(sections_exact(cfg, DivisorClass{1, {1, 1, 1, 0, 0, 0, 0, 0, 0}}) == 1);
  CHECK(sections_exact(cfg, DivisorClass{1, {1, 0, 0, 0, 0, 1, 0, 0, 0}}) == 1);
  CHECK(sections_exact(cfg, DivisorClass{1, {1, 1, 1, 1, 0, 0, 0, 0, 0}}) == 0);
  // x^3 - y^3 and y^3 - z^3 both pass through all nine points
  CHECK(sections_exact(cfg, DivisorClass{3, {1, 1, 1, 1, 1, 1, 1, 1, 1}}) == 2);
  CHECK(sections_exact(cfg, DivisorClass{2, {3, 0, 0, 0, 0, 0, 0, 0, 0}}) == 0);
  CHECK(condition_count(DivisorClass{2, {2, 1, 0, -1}}) == 4);
  CHECK_THROWS_AS(sections_exact(build_very_general_cubic(9), DivisorClass{1, {1, 0, 0, 0, 0, 0, 0, 0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sections_exact(cfg, DivisorClass{1, {1, 0}}), DimensionError);
}

TEST_CASE("partial derivatives") {
  const auto cfg = build_dual_hesse();
  const auto basis = sections_basis_exact(cfg, DivisorClass{1, {1, 1, 1, 0, 0, 0, 0, 0, 0}});
  REQUIRE(basis.size() == 1);
  CHECK(partials_vanish_exact(cfg, basis[0], 1, 0, 0));
  CHECK_FALSE(partials_vanish_exact(cfg, basis[0], 1, 0, 1));
  CHECK_FALSE(partials_vanish_exact(cfg, basis[0], 1, 4, 0));
  CHECK(partials_vanish_exact(cfg, basis[0], 1, 4, 2));
}

TEST_CASE("exact, modular and numeric dimensions agree on random classes") {
  props::Gen g(21);
  for (const auto& cfg : {build_dual_hesse(), build_fermat_zm(4)}) {
    const auto pts = embedded(cfg);
    for (int d = 1; d <= 4; ++d) {
      const ModularSections mod(cfg, d);
      for (int t = 0; t < 25; ++t) {
        DivisorClass c(cfg.context());
        c.degree = d;
        for (int i = 0; i < cfg.s; ++i) c.mults(i) = g.between(0, 4) == 0 ? g.between(1, d) : 0;
        const auto exact = sections_exact(cfg, c);
        CHECK(static_cast<std::int64_t>(exact) >= expected_dimension(c));
        CHECK(mod.dimension(c) >= exact);
        CHECK(exact == oracle::numeric_sections(pts, d, mults(c)));
        CHECK(mod.dimension(c) == exact);
      }
    }
  }
}

TEST_CASE("modular setup") {
  const auto cfg = build_fermat_zm(4);
  const ModularSections mod(cfg, 3);
  CHECK(mod.prime() % 4 == 1);
  CHECK(mod.prime() < (1u << 28));
  CHECK(mod.full().size() == 10);
  CHECK_THROWS_AS(mod.dimension(DivisorClass(cfg.context())), std::invalid_argument);
  CHECK_THROWS_AS(ModularSections(cfg, -1), std::invalid_argument);
}
