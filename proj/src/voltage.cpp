#include "vops/voltage.hpp"

#include <algorithm>

#include "vops/errors.hpp"

namespace vops {

namespace {

void check_shape(const VoltageOperator& op) {
  if (op.source_rank < 1) throw DomainError("operator source rank must be >= 1");
  if (static_cast<int>(op.voltages.size()) != op.y.rank())
    throw DomainError("expected one voltage row per color");
  for (const auto& row : op.voltages)
    if (static_cast<int>(row.size()) != op.y.flag_count())
      throw DomainError("voltage row length must match flag count");
  if (op.base < 0 || op.base >= op.y.flag_count())
    throw DomainError("operator base flag out of range");
}

}  // namespace

OperatorReport validate_operator(const VoltageOperator& op) {
  check_shape(op);
  OperatorReport report;
  const int m = op.y.rank(), k = op.y.flag_count();
  for (int i = 0; i < m; ++i) {
    for (int y = 0; y < k; ++y) {
      const CoxWord& v = op.voltage(y, i);
      if (v.rank() != op.source_rank) {
        report.violations.push_back(
            {OperatorViolation::Kind::BadRank, y, i, -1});
        continue;
      }
      int y2 = op.y.adj(y, i);
      if (y2 == y) {
        if (!is_involution(v))
          report.violations.push_back(
              {OperatorViolation::Kind::NotInvolution, y, i, -1});
      } else if (op.voltage(y2, i).rank() == op.source_rank &&
                 op.voltage(y2, i) != inverse(v)) {
        report.violations.push_back(
            {OperatorViolation::Kind::InverseMismatch, y, i, -1});
      }
    }
  }
  if (!report.ok()) return report;
  // Alternating 4-cycles must carry trivial voltage: this is what makes the
  // assignment descend to homotopy classes.
  for (int i = 0; i < m; ++i) {
    for (int j = i + 2; j < m; ++j) {
      for (int y = 0; y < k; ++y) {
        CoxWord v = CoxWord::identity(op.source_rank);
        int c = y;
        for (int step = 0; step < 4; ++step) {
          int color = (step % 2 == 0) ? i : j;
          v = multiply(op.voltage(c, color), v);
          c = op.y.adj(c, color);
        }
        if (!v.is_identity())
          report.violations.push_back(
              {OperatorViolation::Kind::HomotopyBroken, y, i, j});
      }
    }
  }
  return report;
}

CoxWord voltage_of_path(const VoltageOperator& op, const Path& path) {
  check_shape(op);
  if (path.word.rank() != op.y.rank())
    throw RankMismatchError("path word rank must match Y's rank");
  if (path.start < 0 || path.start >= op.y.flag_count())
    throw DomainError("path start out of range");
  CoxWord v = CoxWord::identity(op.source_rank);
  int c = path.start;
  const auto& letters = path.word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    v = multiply(op.voltage(c, *it), v);
    c = op.y.adj(c, *it);
  }
  return v;
}

Premaniplex product(const Premaniplex& x, const VoltageOperator& op) {
  check_shape(op);
  if (x.rank() != op.source_rank)
    throw RankMismatchError("operand rank must equal operator source rank");
  const int ky = op.y.flag_count();
  const int kx = x.flag_count();
  const int m = op.y.rank();
  std::vector<std::vector<int>> perms(m, std::vector<int>(kx * ky));
  for (int i = 0; i < m; ++i) {
    for (int y = 0; y < ky; ++y) {
      const CoxWord& v = op.voltage(y, i);
      int y2 = op.y.adj(y, i);
      // Precompute the action of v on every x-flag once per dart.
      std::vector<int> moved(kx);
      for (int xf = 0; xf < kx; ++xf) moved[xf] = apply_word(x, xf, v);
      for (int xf = 0; xf < kx; ++xf)
        perms[i][xf * ky + y] = moved[xf] * ky + y2;
    }
  }
  return Premaniplex(m, std::move(perms));
}

VoltageOperator normalize(const VoltageOperator& op) {
  check_shape(op);
  if (!is_connected(op.y))
    throw DisconnectedError("normalize requires a connected Y");
  SpanningTree tree = spanning_tree(op.y, op.base);
  // Voltage of the tree path from the base to each flag.
  std::vector<CoxWord> accum(op.y.flag_count(),
                             CoxWord::identity(op.source_rank));
  for (auto [from, color] : tree.darts) {
    int to = op.y.adj(from, color);
    accum[to] = multiply(op.voltage(from, color), accum[from]);
  }
  VoltageOperator out;
  out.source_rank = op.source_rank;
  out.y = op.y;
  out.base = op.base;
  out.voltages.assign(op.y.rank(),
                      std::vector<CoxWord>(op.y.flag_count(),
                                           CoxWord::identity(op.source_rank)));
  for (int i = 0; i < op.y.rank(); ++i) {
    for (int y = 0; y < op.y.flag_count(); ++y) {
      int y2 = op.y.adj(y, i);
      // (tree path to y) * dart * (tree path back from y^i), accumulated
      // anti-homomorphically.
      out.voltages[i][y] = multiply(
          multiply(inverse(accum[y2]), op.voltage(y, i)), accum[y]);
    }
  }
  return out;
}

VoltageOperator compose(const VoltageOperator& first,
                        const VoltageOperator& second) {
  check_shape(first);
  check_shape(second);
  if (first.y.rank() != second.source_rank)
    throw RankMismatchError(
        "composition needs first.target_rank == second.source_rank");
  VoltageOperator out;
  out.source_rank = first.source_rank;
  out.y = product(first.y, second);
  const int kz = first.y.flag_count();
  const int ky = second.y.flag_count();
  out.base = first.base * ky + second.base;
  out.voltages.assign(second.y.rank(),
                      std::vector<CoxWord>(out.y.flag_count()));
  for (int i = 0; i < second.y.rank(); ++i) {
    for (int z = 0; z < kz; ++z) {
      for (int y = 0; y < ky; ++y) {
        out.voltages[i][z * ky + y] =
            voltage_of_path(first, Path{z, second.voltage(y, i)});
      }
    }
  }
  return out;
}

CoxWord zeta(const VoltageOperator& op, const CoxWord& w) {
  check_shape(op);
  if (apply_word(op.y, op.base, w) != op.base)
    throw DomainError("zeta: word does not stabilize the base flag");
  return voltage_of_path(op, Path{op.base, w});
}

ConnectivityCheck preserves_connectivity(const VoltageOperator& op,
                                         std::size_t cap) {
  check_shape(op);
  ConnectivityCheck out;
  if (!is_connected(op.y)) {
    out.verdict = Tri::No;
    return out;
  }
  SchreierSubgroup stab = schreier_generators(op.y, op.base);
  std::vector<CoxWord> images;
  images.reserve(stab.generators.size());
  for (const CoxWord& g : stab.generators) images.push_back(zeta(op, g));

  // Mod-2 abelianization certificate: if the exponent vectors of the images
  // do not span F_2^n, the voltage subgroup is proper and the answer is No
  // with index at least 2^(n - dim span).
  const int n = op.source_rank;
  std::vector<unsigned long long> basis(n, 0);
  int span_dim = 0;
  for (const CoxWord& w : images) {
    unsigned long long vec = 0;
    for (int a : w.letters()) vec ^= 1ull << a;
    for (int bit = n - 1; bit >= 0 && vec; --bit) {
      if (!(vec >> bit & 1)) continue;
      if (!basis[bit]) {
        basis[bit] = vec;
        ++span_dim;
        break;
      }
      vec ^= basis[bit];
    }
  }
  if (span_dim < n) {
    out.verdict = Tri::No;
    out.abelian_witness = true;
    out.index = 1ull << (n - span_dim);
    return out;
  }

  SchreierRealization real = realize_schreier(n, images, cap);
  out.cosets = real.cosets;
  if (!real.ok()) {
    out.verdict = Tri::Inconclusive;
    return out;
  }
  out.index = real.cosets;
  out.verdict = (real.cosets == 1) ? Tri::Yes : Tri::No;
  return out;
}

}  // namespace vops
