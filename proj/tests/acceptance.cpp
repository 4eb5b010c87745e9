// Acceptance suite: prints one PASS/FAIL line per criterion and exits with
// the number of failures.  Each criterion is independent; an exception
// inside one marks that criterion failed without stopping the rest.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "poly_oracle.hpp"
#include "vops/analysis.hpp"
#include "vops/cosetenum.hpp"
#include "vops/errors.hpp"
#include "vops/operators.hpp"
#include "vops/premaniplex.hpp"
#include "vops/symmetry.hpp"
#include "vops/voltage.hpp"

using vops::CoxWord;
using vops::FlagPermutation;
using vops::Premaniplex;
using vops::Verdict;
using vops::VoltageOperator;

namespace {

struct Criterion {
  std::ostringstream msg;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (msg.tellp() > 0) msg << "; ";
      msg << what;
    }
  }
};

int failures = 0;

void report(int number, const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    if (c.msg.tellp() > 0) c.msg << "; ";
    c.msg << "exception: " << e.what();
  }
  if (c.ok) {
    std::cout << "criterion " << number << ": PASS\n";
  } else {
    std::cout << "criterion " << number << ": FAIL (" << c.msg.str() << ")\n";
    ++failures;
  }
}

std::string eq(const std::string& name, std::size_t got, std::size_t want) {
  return name + " " + std::to_string(got) + " != " + std::to_string(want);
}

Premaniplex pyramid_over(int p) {
  return vops::product(vops::polygon(p), vops::pyramid(2));
}

}  // namespace

// 1. {2,4} + truncation gives the cube; symmetry triples and the covering
// certificate.
void criterion1(Criterion& c) {
  Premaniplex digonal = vops::coxeter_flag_graph({2, 4});
  c.expect(digonal.flag_count() == 16, eq("{2,4} flags", digonal.flag_count(), 16));
  Premaniplex prod = vops::product(digonal, vops::truncation());
  c.expect(prod.flag_count() == 48, eq("product flags", prod.flag_count(), 48));
  Premaniplex cube = vops::coxeter_flag_graph({4, 3});
  c.expect(vops::is_isomorphic(prod, cube), "product not isomorphic to {4,3}");

  auto aut_x = vops::automorphisms(digonal);
  c.expect(aut_x.order() == 16, eq("aut {2,4}", aut_x.order(), 16));
  auto aut_p = vops::automorphisms(prod);
  c.expect(aut_p.order() == 48, eq("aut product", aut_p.order(), 48));
  auto lifted = vops::lifted_group(digonal, vops::truncation());
  c.expect(lifted.group.order() == 16,
           eq("lifted order", lifted.group.order(), 16));

  auto cert = vops::certify(digonal, vops::truncation());
  c.expect(cert.verdict == Verdict::ExtraPresent, "verdict not ExtraPresent");
  bool covers_two_flag = false;
  for (const auto& rec : cert.records)
    if (!rec.in_base_orbit && rec.z_flags == 2 && rec.covered)
      covers_two_flag = true;
  c.expect(covers_two_flag, "no record shows X covering the 2-flag quotient");
}

// 2. The quotients attached to the operator flags.
void criterion2(Criterion& c) {
  Premaniplex two01 = vops::two_flag(3, {0, 1});
  auto tb = vops::z_upsilon(vops::truncation(), 1);
  auto tc = vops::z_upsilon(vops::truncation(), 2);
  c.expect(tb.ok() && tc.ok(), "truncation quotients capped");
  if (tb.ok() && tc.ok()) {
    c.expect(vops::is_isomorphic(*tb.graph, two01), "Z at flag b not 2_{0,1}");
    c.expect(vops::is_isomorphic(*tc.graph, two01), "Z at flag c not 2_{0,1}");
    c.expect(vops::is_isomorphic(*tb.graph, *tc.graph), "Z_b and Z_c differ");
  }
  auto m2 = vops::z_upsilon(vops::medial(), 1);
  c.expect(m2.ok(), "medial quotient capped");
  if (m2.ok())
    c.expect(vops::is_isomorphic(*m2.graph, vops::one_vertex(3)),
             "Z at m2 not a point");
}

// 3. Orbit counts of the classical operations on the cube.
void criterion3(Criterion& c) {
  Premaniplex cube = vops::coxeter_flag_graph({4, 3});
  struct Row {
    const char* name;
    VoltageOperator op;
    std::size_t orbits;
    int flags;
  };
  std::vector<Row> rows;
  rows.push_back({"medial", vops::medial(), 2, 96});
  rows.push_back({"truncation", vops::truncation(), 3, 144});
  rows.push_back({"truncation of dual",
                  vops::compose(vops::dual(3), vops::truncation()), 3, 144});
  rows.push_back({"medial of medial",
                  vops::compose(vops::medial(), vops::medial()), 4, 192});
  rows.push_back({"omnitruncation", vops::omnitruncation(), 6, 288});
  for (const auto& row : rows) {
    Premaniplex prod = vops::product(cube, row.op);
    c.expect(prod.flag_count() == row.flags,
             std::string(row.name) + ": " +
                 eq("flags", prod.flag_count(), row.flags));
    auto account = vops::orbit_accounting(cube, row.op);
    c.expect(account.product_orbits == row.orbits,
             std::string(row.name) + ": " +
                 eq("orbits", account.product_orbits, row.orbits));
  }
}

// 4. Medial symmetry and self-duality detection.
void criterion4(Criterion& c) {
  Premaniplex tetra = vops::coxeter_flag_graph({3, 3});
  Premaniplex cube = vops::coxeter_flag_graph({4, 3});
  Premaniplex octa = vops::coxeter_flag_graph({3, 4});

  auto tm = vops::orbit_accounting(tetra, vops::medial());
  c.expect(tm.x_aut_order == 24, eq("aut tetra", tm.x_aut_order, 24));
  c.expect(tm.product_aut_order == 48,
           eq("aut medial(tetra)", tm.product_aut_order, 48));
  c.expect(tm.index == 2, eq("index over tetra", tm.index, 2));

  auto cm = vops::orbit_accounting(cube, vops::medial());
  c.expect(cm.x_aut_order == 48, eq("aut cube", cm.x_aut_order, 48));
  c.expect(cm.product_aut_order == 48,
           eq("aut medial(cube)", cm.product_aut_order, 48));
  c.expect(cm.index == 1, eq("index over cube", cm.index, 1));

  const FlagPermutation swap_y{{1, 0}};
  struct Member {
    const char* name;
    Premaniplex x;
    bool self_dual;
  };
  std::vector<Member> corpus;
  corpus.push_back({"tetrahedron", tetra, true});
  corpus.push_back({"cube", cube, false});
  corpus.push_back({"octahedron", octa, false});
  corpus.push_back({"pyramid over 4-gon", pyramid_over(4), true});
  corpus.push_back({"pyramid over 5-gon", pyramid_over(5), true});
  corpus.push_back({"pyramid over 6-gon", pyramid_over(6), true});
  for (const auto& m : corpus) {
    bool lifts = vops::find_lift(m.x, vops::medial(), swap_y).has_value();
    c.expect(lifts == m.self_dual,
             std::string(m.name) + ": lift " + (lifts ? "found" : "missing") +
                 " but self-dual is " + (m.self_dual ? "true" : "false"));
  }
}

// 5. Prisms over polygons, p in {3,4,5,6}.
void criterion5(Criterion& c) {
  for (int p : {3, 4, 5, 6}) {
    Premaniplex poly = vops::polygon(p);
    Premaniplex prod = vops::product(poly, vops::prism(2));
    std::string tag = "p=" + std::to_string(p) + ": ";
    c.expect(prod.flag_count() == 12 * p,
             tag + eq("flags", prod.flag_count(), 12 * p));
    auto aut = vops::automorphisms(prod);
    c.expect(aut.order() == 4 * static_cast<std::size_t>(p),
             tag + eq("aut", aut.order(), 4 * p));
    auto lifted = vops::lifted_group(poly, vops::prism(2));
    c.expect(lifted.group.order() == 2 * static_cast<std::size_t>(p) * 2,
             tag + eq("lifted", lifted.group.order(), 4 * p));
    c.expect(lifted.equals_full, tag + "lifted group != full group");
  }
}

// 6. Pyramids over polygons.
void criterion6(Criterion& c) {
  for (int p : {3, 4, 5, 6}) {
    Premaniplex poly = vops::polygon(p);
    Premaniplex prod = vops::product(poly, vops::pyramid(2));
    std::string tag = "p=" + std::to_string(p) + ": ";
    c.expect(prod.flag_count() == 8 * p,
             tag + eq("flags", prod.flag_count(), 8 * p));
    auto account = vops::orbit_accounting(poly, vops::pyramid(2));
    std::size_t want = p == 3 ? 1 : 4;
    c.expect(account.product_orbits == want,
             tag + eq("orbits", account.product_orbits, want));
  }
}

// 7. The orbit-counting identity over the whole corpus.
void criterion7(Criterion& c) {
  struct Pair {
    std::string name;
    Premaniplex x;
    VoltageOperator op;
  };
  std::vector<Pair> pairs;
  std::vector<std::pair<std::string, Premaniplex>> solids;
  solids.emplace_back("tetra", vops::coxeter_flag_graph({3, 3}));
  solids.emplace_back("cube", vops::coxeter_flag_graph({4, 3}));
  solids.emplace_back("octa", vops::coxeter_flag_graph({3, 4}));
  solids.emplace_back("{2,4}", vops::coxeter_flag_graph({2, 4}));
  for (const auto& [xname, x] : solids)
    for (const char* opname :
         {"medial", "truncation", "omnitruncation", "petrie", "dual:3"})
      pairs.push_back({xname + "*" + opname, x, vops::builtin(opname)});
  for (int p : {3, 4, 5, 6}) {
    pairs.push_back({"polygon(" + std::to_string(p) + ")*prism",
                     vops::polygon(p), vops::prism(2)});
    pairs.push_back({"polygon(" + std::to_string(p) + ")*pyramid",
                     vops::polygon(p), vops::pyramid(2)});
  }
  c.expect(pairs.size() >= 12, "corpus too small");
  for (const auto& pair : pairs) {
    auto a = vops::orbit_accounting(pair.x, pair.op);
    c.expect(a.product_orbits * a.index == a.x_orbits * a.y_size,
             pair.name + ": identity broken");
    c.expect(a.index <= a.y_size, pair.name + ": index exceeds |Y|");
  }
}

// 8. Operating commutes with quotients by groups of symmetries.
void criterion8(Criterion& c) {
  std::vector<std::pair<std::string, Premaniplex>> xs;
  xs.emplace_back("tetra", vops::coxeter_flag_graph({3, 3}));
  xs.emplace_back("cube", vops::coxeter_flag_graph({4, 3}));
  xs.emplace_back("{2,4}", vops::coxeter_flag_graph({2, 4}));
  for (const auto& [xname, x] : xs) {
    auto full = vops::automorphisms(x);
    // Trivial, full, and one intermediate cyclic subgroup.
    std::vector<std::pair<std::string, std::vector<FlagPermutation>>> groups;
    groups.emplace_back("trivial", std::vector<FlagPermutation>{});
    groups.emplace_back("full", full.elements);
    for (const auto& g : full.elements) {
      bool identity = true;
      for (std::size_t i = 0; i < g.images.size(); ++i)
        if (g.images[i] != static_cast<int>(i)) identity = false;
      if (!identity) {
        groups.emplace_back("cyclic",
                            vops::generated_group(x, {g}).elements);
        break;
      }
    }
    for (const char* opname : {"medial", "truncation", "dual:3"}) {
      VoltageOperator op = vops::builtin(opname);
      Premaniplex prod = vops::product(x, op);
      for (const auto& [gname, members] : groups) {
        std::vector<std::vector<int>> tables, lifted_tables;
        for (const auto& g : members) {
          tables.push_back(g.images);
          lifted_tables.push_back(
              vops::embed_x_automorphism(g, op.y.flag_count()).images);
        }
        Premaniplex left = vops::product(vops::quotient(x, tables).graph, op);
        Premaniplex right = vops::quotient(prod, lifted_tables).graph;
        c.expect(vops::is_isomorphic(left, right),
                 xname + "*" + opname + " / " + gname + ": not isomorphic");
      }
    }
  }
}

// 9. The double cover on the hemicube and on the cube.
void criterion9(Criterion& c) {
  std::vector<int> petrie3{0, 1, 2, 0, 1, 2, 0, 1, 2};
  Premaniplex hemi = vops::coxeter_flag_graph({4, 3}, {petrie3});
  c.expect(hemi.flag_count() == 24, eq("hemicube flags", hemi.flag_count(), 24));
  Premaniplex cube = vops::coxeter_flag_graph({4, 3});

  Premaniplex lifted = vops::product(hemi, vops::double_cover(3));
  c.expect(vops::is_connected(lifted), "hemicube cover disconnected");
  c.expect(vops::is_isomorphic(lifted, cube), "hemicube cover not the cube");

  Premaniplex split = vops::product(cube, vops::double_cover(3));
  auto comps = vops::components(split);
  c.expect(comps.size() == 2, eq("cube cover components", comps.size(), 2));
  for (const auto& comp : comps) {
    auto part = vops::component_of(split, comp[0]);
    c.expect(vops::is_isomorphic(part.graph, cube),
             "cover component not the cube");
  }

  auto pc = vops::preserves_connectivity(vops::double_cover(3));
  c.expect(pc.verdict == vops::Tri::No, "double cover connectivity not No");
  c.expect(pc.index == 2, eq("witness index", pc.index, 2));
  c.expect(pc.abelian_witness, "no abelianization witness");
}

// 10. Word-problem soundness at scale, plus the Schreier round trip.
void criterion10(Criterion& c) {
  std::mt19937 rng(424242);
  std::size_t bad = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    int rank = 2 + static_cast<int>(rng() % 5);  // 2..6
    int len = static_cast<int>(rng() % 41);
    std::vector<int> letters(len);
    for (int& l : letters) l = static_cast<int>(rng() % rank);
    CoxWord before(rank, letters);

    std::vector<int> padded = letters;
    std::size_t pos = rng() % (padded.size() + 1);
    int g = static_cast<int>(rng() % rank);
    switch (rng() % 3) {
      case 0:
        padded.insert(padded.begin() + pos, {g, g});
        break;
      case 1: {
        std::vector<int> far;
        for (int h = 0; h < rank; ++h)
          if (h <= g - 2 || h >= g + 2) far.push_back(h);
        if (far.empty()) {
          padded.insert(padded.begin() + pos, {g, g});
        } else {
          int h = far[rng() % far.size()];
          padded.insert(padded.begin() + pos, {g, h, g, h});
        }
        break;
      }
      default:
        // Swap an adjacent commuting pair when one exists at pos.
        if (pos + 1 < padded.size() &&
            std::abs(padded[pos] - padded[pos + 1]) >= 2)
          std::swap(padded[pos], padded[pos + 1]);
        break;
    }
    if (!(CoxWord(rank, padded) == before)) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " of 100000 equivalences broken");

  std::vector<std::pair<std::string, Premaniplex>> corpus;
  for (int p : {3, 4, 5, 6})
    corpus.emplace_back("polygon(" + std::to_string(p) + ")", vops::polygon(p));
  corpus.emplace_back("tetra", vops::coxeter_flag_graph({3, 3}));
  corpus.emplace_back("cube", vops::coxeter_flag_graph({4, 3}));
  corpus.emplace_back("octa", vops::coxeter_flag_graph({3, 4}));
  corpus.emplace_back("{2,4}", vops::coxeter_flag_graph({2, 4}));
  corpus.emplace_back("hemicube",
                      vops::coxeter_flag_graph({4, 3}, {{0, 1, 2, 0, 1, 2,
                                                         0, 1, 2}}));
  corpus.emplace_back("2_{0,1}", vops::two_flag(3, {0, 1}));
  corpus.emplace_back("2_empty", vops::two_flag(3, {}));
  corpus.emplace_back("point", vops::one_vertex(3));
  for (const auto& [name, p] : corpus) {
    auto sub = vops::schreier_generators(p, 0);
    auto real = vops::realize_schreier(sub.rank, sub.generators);
    c.expect(real.ok(), name + ": realization capped");
    if (real.ok())
      c.expect(vops::is_isomorphic(*real.graph, p),
               name + ": round trip lost the graph");
  }
}

// 11. Voltage products match incidence-level constructions.
void criterion11(Criterion& c) {
  std::vector<std::pair<std::string, oracle::Poly>> solids;
  solids.emplace_back("tetra", oracle::tetra_poly());
  solids.emplace_back("cube", oracle::cube_poly());
  for (const auto& [name, poly] : solids) {
    Premaniplex x = oracle::flag_graph(poly);
    c.expect(vops::is_isomorphic(vops::product(x, vops::medial()),
                                 oracle::flag_graph(oracle::medial_poly(poly))),
             name + ": medial mismatch");
    c.expect(
        vops::is_isomorphic(vops::product(x, vops::truncation()),
                            oracle::flag_graph(oracle::truncation_poly(poly))),
        name + ": truncation mismatch");
    c.expect(vops::is_isomorphic(vops::product(x, vops::dual(3)),
                                 oracle::flag_graph(oracle::dual_poly(poly))),
             name + ": dual mismatch");
  }
  for (int p : {3, 4, 5, 6}) {
    std::string tag = "polygon(" + std::to_string(p) + ")";
    Premaniplex poly = vops::polygon(p);
    c.expect(vops::is_isomorphic(vops::product(poly, vops::prism(2)),
                                 oracle::flag_graph(oracle::prism_poly(p))),
             tag + ": prism mismatch");
    c.expect(vops::is_isomorphic(vops::product(poly, vops::pyramid(2)),
                                 oracle::flag_graph(oracle::pyramid_poly(p))),
             tag + ": pyramid mismatch");
  }
}

// 12. Composition of operators against step-by-step application.
void criterion12(Criterion& c) {
  VoltageOperator composite = vops::compose(vops::medial(), vops::truncation());
  std::vector<std::pair<std::string, Premaniplex>> xs;
  xs.emplace_back("tetra", vops::coxeter_flag_graph({3, 3}));
  xs.emplace_back("cube", vops::coxeter_flag_graph({4, 3}));
  xs.emplace_back("{2,4}", vops::coxeter_flag_graph({2, 4}));
  for (const auto& [name, x] : xs) {
    Premaniplex two_step =
        vops::product(vops::product(x, vops::medial()), vops::truncation());
    Premaniplex one_step = vops::product(x, composite);
    c.expect(vops::is_isomorphic(two_step, one_step),
             name + ": composite differs from the two-step product");
  }
}

int main() {
  report(1, criterion1);
  report(2, criterion2);
  report(3, criterion3);
  report(4, criterion4);
  report(5, criterion5);
  report(6, criterion6);
  report(7, criterion7);
  report(8, criterion8);
  report(9, criterion9);
  report(10, criterion10);
  report(11, criterion11);
  report(12, criterion12);
  if (failures == 0) {
    std::cout << "all criteria passed\n";
  } else {
    std::cout << failures << " criteria failed\n";
  }
  return failures;
}
