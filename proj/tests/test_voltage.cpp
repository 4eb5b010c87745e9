#include "doctest.h"

#include <vector>

#include "vops/cosetenum.hpp"
#include "vops/errors.hpp"
#include "vops/operators.hpp"
#include "vops/premaniplex.hpp"
#include "vops/symmetry.hpp"
#include "vops/voltage.hpp"

using vops::CoxWord;
using vops::Premaniplex;
using vops::VoltageOperator;

namespace {

bool same_operator(const VoltageOperator& a, const VoltageOperator& b) {
  return a.source_rank == b.source_rank && a.y == b.y &&
         a.voltages == b.voltages && a.base == b.base;
}

}  // namespace

TEST_CASE("built-in operators validate") {
  for (const auto& name : vops::builtin_names()) {
    CAPTURE(name);
    VoltageOperator op = vops::builtin(name);
    CHECK(vops::validate(op.y).ok());
    CHECK(vops::validate_operator(op).ok());
  }
}

TEST_CASE("validate_operator flags each kind of defect") {
  using Kind = vops::OperatorViolation::Kind;

  // Wrong-rank voltage.
  VoltageOperator bad_rank = vops::medial();
  bad_rank.voltages[0][0] = CoxWord(4, {1});
  auto r1 = vops::validate_operator(bad_rank);
  REQUIRE(!r1.ok());
  CHECK(r1.violations[0].kind == Kind::BadRank);

  // Mismatched voltages across a proper edge.
  VoltageOperator bad_inv = vops::medial();
  bad_inv.voltages[2][0] = CoxWord(3, {0, 1});  // reverse dart stays trivial
  auto r2 = vops::validate_operator(bad_inv);
  REQUIRE(!r2.ok());
  CHECK(r2.violations[0].kind == Kind::InverseMismatch);

  // Non-involution on a semi-edge.
  VoltageOperator bad_semi = vops::medial();
  bad_semi.voltages[0][0] = CoxWord(3, {0, 1});
  auto r3 = vops::validate_operator(bad_semi);
  REQUIRE(!r3.ok());
  CHECK(r3.violations[0].kind == Kind::NotInvolution);

  // Valid darts, but an alternating 0/2 square picks up voltage.
  VoltageOperator bad_cycle = vops::medial();
  bad_cycle.voltages[2][0] = CoxWord(3, {0, 2});
  bad_cycle.voltages[2][1] = CoxWord(3, {0, 2});  // self-inverse, darts agree
  auto r4 = vops::validate_operator(bad_cycle);
  REQUIRE(!r4.ok());
  CHECK(r4.violations[0].kind == Kind::HomotopyBroken);
}

TEST_CASE("path voltages accumulate right to left") {
  VoltageOperator med = vops::medial();
  // Rightmost letter first: the color-0 semi-edge at flag 0 contributes
  // [1], then the color-1 semi-edge contributes [0] on the left.
  CHECK(vops::voltage_of_path(med, {0, CoxWord(3, {1, 0})}) ==
        CoxWord(3, {0, 1}));
  CHECK(vops::voltage_of_path(med, {0, CoxWord::identity(3)}) ==
        CoxWord::identity(3));
  // Across the color-2 edge and back.
  CHECK(vops::voltage_of_path(med, {0, CoxWord(3, {2, 0, 2})}) ==
        CoxWord(3, {1}));
}

TEST_CASE("product adjacency follows the voltage formula") {
  Premaniplex tetra = vops::coxeter_flag_graph({3, 3});
  VoltageOperator med = vops::medial();
  Premaniplex prod = vops::product(tetra, med);
  const int ky = med.y.flag_count();
  REQUIRE(prod.flag_count() == tetra.flag_count() * ky);
  for (int x = 0; x < tetra.flag_count(); ++x) {
    for (int y = 0; y < ky; ++y) {
      for (int i = 0; i < 3; ++i) {
        int moved_x = vops::apply_word(tetra, x, med.voltage(y, i));
        CHECK(prod.adj(x * ky + y, i) == moved_x * ky + med.y.adj(y, i));
      }
    }
  }
  CHECK(vops::validate(prod).ok());
}

TEST_CASE("medial of the tetrahedron is the octahedron") {
  Premaniplex tetra = vops::coxeter_flag_graph({3, 3});
  Premaniplex prod = vops::product(tetra, vops::medial());
  CHECK(prod.flag_count() == 48);
  CHECK(vops::is_maniplex(prod));
  CHECK(vops::is_isomorphic(prod, vops::coxeter_flag_graph({3, 4})));
}

TEST_CASE("rank mismatch between graph and operator is rejected") {
  CHECK_THROWS_AS(vops::product(vops::polygon(4), vops::medial()),
                  vops::RankMismatchError);
}

TEST_CASE("zeta evaluates closed paths only") {
  VoltageOperator med = vops::medial();
  CHECK(vops::zeta(med, CoxWord(3, {0})) == CoxWord(3, {1}));
  CHECK(vops::zeta(med, CoxWord(3, {1})) == CoxWord(3, {0}));
  CHECK(vops::zeta(med, CoxWord(3, {2, 0, 2})) == CoxWord(3, {1}));
  CHECK(vops::zeta(med, CoxWord(3, {2, 1, 2})) == CoxWord(3, {2}));
  CHECK_THROWS_AS(vops::zeta(med, CoxWord(3, {2})), vops::DomainError);
}

TEST_CASE("normalize fixes the gauge along a spanning tree") {
  // Already normalized: the only tree dart (color 2) carries no voltage.
  CHECK(same_operator(vops::normalize(vops::medial()), vops::medial()));

  // Shift the gauge at flag 1 by u and check normalize undoes it.
  CoxWord u(3, {0, 1});
  VoltageOperator messy = vops::medial();
  messy.voltages[2][0] = u;                  // dart 0 -> 1
  messy.voltages[2][1] = vops::inverse(u);   // dart 1 -> 0
  messy.voltages[0][1] =
      vops::multiply(vops::multiply(u, messy.voltages[0][1]),
                     vops::inverse(u));
  messy.voltages[1][1] =
      vops::multiply(vops::multiply(u, messy.voltages[1][1]),
                     vops::inverse(u));
  REQUIRE(vops::validate_operator(messy).ok());

  VoltageOperator fixed = vops::normalize(messy);
  CHECK(vops::validate_operator(fixed).ok());
  CHECK(fixed.voltages[2][0].is_identity());
  CHECK(fixed.voltages[2][1].is_identity());

  Premaniplex tetra = vops::coxeter_flag_graph({3, 3});
  CHECK(vops::is_isomorphic(vops::product(tetra, messy),
                            vops::product(tetra, fixed)));
  CHECK(vops::is_isomorphic(vops::product(tetra, messy),
                            vops::product(tetra, vops::medial())));
}

TEST_CASE("composition matches applying operators in sequence") {
  Premaniplex tetra = vops::coxeter_flag_graph({3, 3});
  VoltageOperator both = vops::compose(vops::medial(), vops::truncation());
  Premaniplex two_step =
      vops::product(vops::product(tetra, vops::medial()), vops::truncation());
  CHECK(vops::product(tetra, both) == two_step);  // identical flag indexing
  CHECK(vops::validate_operator(both).ok());
  CHECK(same_operator(vops::omnitruncation(), both));
}

TEST_CASE("connectivity analysis") {
  auto med = vops::preserves_connectivity(vops::medial());
  CHECK(med.verdict == vops::Tri::Yes);
  CHECK(med.index == 1);

  auto trunc = vops::preserves_connectivity(vops::truncation());
  CHECK(trunc.verdict == vops::Tri::Yes);
  CHECK(trunc.index == 1);

  // The double cover always splits some product; caught by the mod-2
  // abelianization without any enumeration.
  auto dc = vops::preserves_connectivity(vops::double_cover(3));
  CHECK(dc.verdict == vops::Tri::No);
  CHECK(dc.index == 2);
  CHECK(dc.abelian_witness);

  // Trivial voltages on a proper 2-flag graph: the product is always two
  // copies, index 2^3.
  VoltageOperator trivial{3, vops::two_flag(3, {}),
                          {{CoxWord::identity(3), CoxWord::identity(3)},
                           {CoxWord::identity(3), CoxWord::identity(3)},
                           {CoxWord::identity(3), CoxWord::identity(3)}},
                          0};
  auto tr = vops::preserves_connectivity(trivial);
  CHECK(tr.verdict == vops::Tri::No);
  CHECK(tr.index == 8);
  CHECK(tr.abelian_witness);

  // Disconnected Y can never give connected products.
  VoltageOperator disc{3, Premaniplex(1, {{0, 1}}),
                       {{CoxWord::identity(3), CoxWord::identity(3)}}, 0};
  CHECK(vops::preserves_connectivity(disc).verdict == vops::Tri::No);
}

TEST_CASE("prism and pyramid raise the rank by one") {
  for (int n : {2, 3}) {
    VoltageOperator pr = vops::prism(n);
    CHECK(pr.source_rank == n);
    CHECK(pr.target_rank() == n + 1);
    CHECK(pr.y.flag_count() == 2 * (n + 1));
    CHECK(vops::validate_operator(pr).ok());

    VoltageOperator py = vops::pyramid(n);
    CHECK(py.source_rank == n);
    CHECK(py.target_rank() == n + 1);
    CHECK(py.y.flag_count() == n + 2);
    CHECK(vops::validate_operator(py).ok());
  }
  // Prism over a square: the cube, with full symmetry.
  Premaniplex sq = vops::polygon(4);
  Premaniplex pr = vops::product(sq, vops::prism(2));
  CHECK(pr.flag_count() == 48);
  CHECK(vops::is_isomorphic(pr, vops::coxeter_flag_graph({4, 3})));
}
