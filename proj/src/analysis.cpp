#include "vops/analysis.hpp"

#include <algorithm>

#include "vops/errors.hpp"
#include "vops/operators.hpp"

namespace vops {

FlagPermutation embed_x_automorphism(const FlagPermutation& g, int y_size) {
  FlagPermutation out;
  out.images.resize(g.images.size() * y_size);
  for (std::size_t x = 0; x < g.images.size(); ++x)
    for (int y = 0; y < y_size; ++y)
      out.images[x * y_size + y] = g.images[x] * y_size + y;
  return out;
}

OrbitAccount orbit_accounting(const Premaniplex& x,
                              const VoltageOperator& op) {
  if (!is_connected(x))
    throw DisconnectedError("orbit accounting requires a connected operand");
  Premaniplex prod = product(x, op);
  if (!is_connected(prod))
    throw DisconnectedError("orbit accounting requires a connected product");
  AutomorphismGroup aut_x = automorphisms(x);
  AutomorphismGroup aut_p = automorphisms(prod);
  OrbitAccount account;
  account.x_orbits = aut_x.orbit_lists.size();
  account.y_size = static_cast<std::size_t>(op.y.flag_count());
  account.x_aut_order = aut_x.order();
  account.product_aut_order = aut_p.order();
  account.product_orbits = aut_p.orbit_lists.size();
  // The embedded copy of Aut(X); verified to consist of automorphisms.
  std::vector<FlagPermutation> embedded;
  embedded.reserve(aut_x.order());
  for (const auto& g : aut_x.elements)
    embedded.push_back(embed_x_automorphism(g, op.y.flag_count()));
  account.lifted_aut_order = generated_group(prod, embedded).order();
  account.index = account.product_aut_order / account.lifted_aut_order;
  account.t = account.x_orbits * account.y_size / account.product_orbits;
  return account;
}

ZResult z_upsilon(const VoltageOperator& op, int y1, std::size_t cap) {
  if (y1 < 0 || y1 >= op.y.flag_count())
    throw DomainError("y1 out of range");
  // Diagonal square: colors act on both coordinates at once.  The
  // simultaneous stabilizer of (base, y1) is the monodromy stabilizer of
  // that flag of the square.
  const int k = op.y.flag_count();
  std::vector<std::vector<int>> perms(op.y.rank(),
                                      std::vector<int>(k * k));
  for (int i = 0; i < op.y.rank(); ++i)
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        perms[i][a * k + b] = op.y.adj(a, i) * k + op.y.adj(b, i);
  Premaniplex square(op.y.rank(), std::move(perms));
  Component comp = component_of(square, op.base * k + y1);
  SchreierSubgroup stab = schreier_generators(comp.graph, comp.base);
  std::vector<CoxWord> images;
  images.reserve(stab.generators.size());
  for (const CoxWord& g : stab.generators) images.push_back(zeta(op, g));
  SchreierRealization real = realize_schreier(op.source_rank, images, cap);
  ZResult out;
  out.status = real.status;
  out.cosets = real.cosets;
  out.graph = std::move(real.graph);
  return out;
}

std::vector<FlagPermutation> aut_preserving(const VoltageOperator& op) {
  AutomorphismGroup aut_y = automorphisms(op.y);
  std::vector<FlagPermutation> result;
  for (const auto& tau : aut_y.elements) {
    bool preserves = true;
    for (int i = 0; i < op.y.rank() && preserves; ++i)
      for (int y = 0; y < op.y.flag_count(); ++y)
        if (op.voltage(tau(y), i) != op.voltage(y, i)) {
          preserves = false;
          break;
        }
    if (preserves) result.push_back(tau);
  }
  return result;
}

std::optional<FlagPermutation> find_lift(const Premaniplex& x,
                                         const VoltageOperator& op,
                                         const FlagPermutation& tau) {
  if (static_cast<int>(tau.images.size()) != op.y.flag_count())
    throw DomainError("tau has wrong length");
  Premaniplex prod = product(x, op);
  if (!is_connected(prod))
    throw DisconnectedError("find_lift requires a connected product");
  const int ky = op.y.flag_count();
  int from = 0 * ky + op.base;
  int target_y = tau(op.base);
  for (int xf = 0; xf < x.flag_count(); ++xf) {
    MorphismResult r = extend_morphism(prod, prod, from, xf * ky + target_y);
    if (r.ok()) return FlagPermutation{std::move(*r.mapping)};
  }
  return std::nullopt;
}

LiftedGroup lifted_group(const Premaniplex& x, const VoltageOperator& op) {
  Premaniplex prod = product(x, op);
  if (!is_connected(prod))
    throw DisconnectedError("lifted_group requires a connected product");
  AutomorphismGroup aut_x = automorphisms(x);
  AutomorphismGroup aut_y = automorphisms(op.y);
  std::vector<FlagPermutation> generators;
  for (const auto& g : aut_x.elements)
    generators.push_back(embed_x_automorphism(g, op.y.flag_count()));
  LiftedGroup out;
  out.y_aut_order = aut_y.order();
  for (std::size_t t = 0; t < aut_y.elements.size(); ++t) {
    if (auto lift = find_lift(x, op, aut_y.elements[t])) {
      out.lifting_taus.push_back(static_cast<int>(t));
      generators.push_back(std::move(*lift));
    }
  }
  out.group = generated_group(prod, std::move(generators));
  out.equals_full = out.group.order() == automorphisms(prod).order();
  return out;
}

ExtraSymmetryCertificate certify(const Premaniplex& x,
                                 const VoltageOperator& op,
                                 std::size_t cap) {
  ConnectivityCheck pc = preserves_connectivity(op, cap);
  if (pc.verdict == Tri::Inconclusive)
    throw CappedError("cannot verify the connectivity hypothesis", pc.cosets);
  if (pc.verdict == Tri::No)
    throw DomainError("certify requires a connectivity-preserving operator");
  if (!is_connected(x))
    throw DisconnectedError("certify requires a connected operand");

  AutomorphismGroup aut_y = automorphisms(op.y);
  ExtraSymmetryCertificate cert;
  const int base_orbit = aut_y.orbit_of[op.base];
  bool all_built = true;
  bool outside_covered = false;
  for (const auto& orbit : aut_y.orbit_lists) {
    // One representative per orbit; in the base's own orbit prefer a flag
    // distinct from the base (the base itself never witnesses anything).
    int y1 = orbit.front();
    bool in_base_orbit = aut_y.orbit_of[y1] == base_orbit;
    if (in_base_orbit) {
      if (orbit.size() == 1) continue;  // only the base: nothing to record
      y1 = (orbit[0] == op.base) ? orbit[1] : orbit[0];
    }
    ZRecord record;
    record.y1 = y1;
    record.in_base_orbit = in_base_orbit;
    ZResult z = z_upsilon(op, y1, cap);
    record.capped = !z.ok();
    record.z_flags = z.ok() ? z.graph->flag_count() : 0;
    record.covered = z.ok() && covers(x, *z.graph);
    if (!in_base_orbit) {
      if (!z.ok()) all_built = false;
      else if (record.covered) outside_covered = true;
    }
    cert.records.push_back(record);
  }

  if (all_built && !outside_covered) {
    cert.verdict = (aut_y.order() == 1) ? Verdict::NoExtra
                                        : Verdict::NoExtraBeyondLifts;
    return cert;
  }
  // A covering (or a capped Z) leaves the question open; settle it by the
  // direct computation.
  LiftedGroup lifted = lifted_group(x, op);
  cert.direct_checked = true;
  cert.lifted_order = lifted.group.order();
  cert.product_aut_order = automorphisms(product(x, op)).order();
  if (cert.product_aut_order > cert.lifted_order) {
    cert.verdict = Verdict::ExtraPresent;
  } else {
    std::size_t x_aut = automorphisms(x).order();
    cert.verdict = (cert.lifted_order == x_aut) ? Verdict::NoExtra
                                                : Verdict::NoExtraBeyondLifts;
  }
  return cert;
}

bool same_result_check(const Premaniplex& x, const VoltageOperator& op,
                       const FlagPermutation& tau,
                       const std::vector<CoxWord>& images) {
  if (static_cast<int>(tau.images.size()) != op.y.flag_count())
    throw DomainError("tau has wrong length");
  // The images must define an operator on one flag (involutions commuting at
  // distance >= 2)...
  VoltageOperator d_op = d_operator(op.source_rank, images);
  OperatorReport report = validate_operator(d_op);
  if (!report.ok())
    throw DomainError(
        "images do not define an endomorphism of the string group");
  // ... compatible with tau on every dart.
  for (int i = 0; i < op.y.rank(); ++i)
    for (int y = 0; y < op.y.flag_count(); ++y)
      if (substitute(op.voltage(y, i), images) != op.voltage(tau(y), i))
        throw DomainError("images are not compatible with tau at flag " +
                          std::to_string(y) + ", color " + std::to_string(i));
  Premaniplex x_tau = product(x, d_op);
  return is_isomorphic(product(x_tau, op), product(x, op));
}

}  // namespace vops
