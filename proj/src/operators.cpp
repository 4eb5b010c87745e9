#include "vops/operators.hpp"

#include <stdexcept>

#include "vops/errors.hpp"

namespace vops {

namespace {

CoxWord w(int rank, std::vector<int> letters) {
  return CoxWord(rank, std::move(letters));
}

}  // namespace

VoltageOperator medial() {
  // Two flags m1 = 0, m2 = 1 joined by a trivial color-2 edge; colors 0 and
  // 1 are semi-edges.  New vertices of the result sit on old edges.
  VoltageOperator op;
  op.source_rank = 3;
  op.y = Premaniplex(3, {{0, 1}, {0, 1}, {1, 0}});
  op.voltages = {
      {w(3, {1}), w(3, {1})},   // color 0 semi-edges
      {w(3, {0}), w(3, {2})},   // color 1 semi-edges
      {w(3, {}), w(3, {})},     // color 2 edge
  };
  op.base = 0;
  return op;
}

VoltageOperator truncation() {
  // Three flags a = 0, b = 1, c = 2 in a path: color-1 edge a-b and color-2
  // edge b-c, both trivial; color 0 is a semi-edge everywhere, and c also
  // carries a color-1 semi-edge.
  VoltageOperator op;
  op.source_rank = 3;
  op.y = Premaniplex(3, {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}});
  op.voltages = {
      {w(3, {0}), w(3, {1}), w(3, {1})},  // color 0 semi-edges
      {w(3, {}), w(3, {}), w(3, {2})},    // color 1: edge a-b, semi at c
      {w(3, {2}), w(3, {}), w(3, {})},    // color 2: semi at a, edge b-c
  };
  op.base = 0;
  return op;
}

VoltageOperator dual(int n) {
  std::vector<CoxWord> images;
  images.reserve(n);
  for (int i = 0; i < n; ++i) images.push_back(w(n, {n - 1 - i}));
  return d_operator(n, images);
}

VoltageOperator petrie() {
  return d_operator(3, {w(3, {0, 2}), w(3, {1}), w(3, {2})});
}

VoltageOperator d_operator(int n, const std::vector<CoxWord>& images) {
  if (n < 1) throw DomainError("rank must be >= 1");
  if (static_cast<int>(images.size()) != n)
    throw DomainError("need exactly one image word per color");
  VoltageOperator op;
  op.source_rank = n;
  op.y = one_vertex(n);
  op.voltages.assign(n, {});
  for (int i = 0; i < n; ++i) {
    if (images[i].rank() != n)
      throw RankMismatchError("image word has wrong rank");
    if (!is_involution(images[i]))
      throw DomainError("image word " + to_string(images[i]) +
                        " is not an involution");
    op.voltages[i] = {images[i]};
  }
  op.base = 0;
  return op;
}

VoltageOperator double_cover(int n) {
  if (n < 1) throw DomainError("rank must be >= 1");
  VoltageOperator op;
  op.source_rank = n;
  op.y = two_flag(n, {});
  op.voltages.assign(n, {});
  for (int i = 0; i < n; ++i) op.voltages[i] = {w(n, {i}), w(n, {i})};
  op.base = 0;
  return op;
}

VoltageOperator prism(int n) {
  if (n < 1) throw DomainError("prism needs n >= 1");
  // Flags (sigma, t) for sigma in {0,1}, t in 0..n, indexed sigma*(n+1)+t.
  // Color 0 joins the two rows at t = 0; color t joins (sigma,t-1)-(sigma,t);
  // the remaining colors are semi-edges with voltage r_i (below the path
  // position) or r_{i-1} (above it).
  const int m = n + 1;
  const int k = 2 * m;
  auto id = [m](int sigma, int t) { return sigma * m + t; };
  std::vector<std::vector<int>> perms(m);
  std::vector<std::vector<CoxWord>> volts(m,
                                          std::vector<CoxWord>(k, w(n, {})));
  for (int i = 0; i < m; ++i) {
    perms[i].resize(k);
    for (int sigma = 0; sigma < 2; ++sigma) {
      for (int t = 0; t <= n; ++t) {
        int f = id(sigma, t);
        if (i == 0 && t == 0) {
          perms[i][f] = id(1 - sigma, 0);  // trivial voltage
        } else if (i == t) {
          perms[i][f] = id(sigma, t - 1);
        } else if (i == t + 1) {
          perms[i][f] = id(sigma, t + 1);
        } else {
          perms[i][f] = f;
          volts[i][f] = (i <= t - 1) ? w(n, {i}) : w(n, {i - 1});
        }
      }
    }
  }
  VoltageOperator op;
  op.source_rank = n;
  op.y = Premaniplex(m, std::move(perms));
  op.voltages = std::move(volts);
  op.base = id(0, n);
  return op;
}

VoltageOperator pyramid(int n) {
  if (n < 1) throw DomainError("pyramid needs n >= 1");
  // Flags z_0..z_{n+1} in a path whose edge z_t - z_{t+1} has color n - t;
  // other colors are semi-edges with voltage r_i below the path position or
  // r_{i-1} above it.
  const int m = n + 1;
  const int k = n + 2;
  std::vector<std::vector<int>> perms(m);
  std::vector<std::vector<CoxWord>> volts(m,
                                          std::vector<CoxWord>(k, w(n, {})));
  for (int i = 0; i < m; ++i) {
    perms[i].resize(k);
    for (int t = 0; t < k; ++t) {
      if (t <= n && i == n - t) {
        perms[i][t] = t + 1;
      } else if (t >= 1 && i == n - (t - 1)) {
        perms[i][t] = t - 1;
      } else {
        perms[i][t] = t;
        volts[i][t] = (i <= n - t - 1) ? w(n, {i}) : w(n, {i - 1});
      }
    }
  }
  VoltageOperator op;
  op.source_rank = n;
  op.y = Premaniplex(m, std::move(perms));
  op.voltages = std::move(volts);
  op.base = 0;
  return op;
}

VoltageOperator omnitruncation() { return compose(medial(), truncation()); }

std::vector<std::string> builtin_names() {
  return {"medial",        "truncation", "omnitruncation", "petrie",
          "dual:3",        "prism:2",    "prism:3",        "pyramid:2",
          "pyramid:3",     "double_cover:3"};
}

VoltageOperator builtin(const std::string& name) {
  auto param = [&](const std::string& prefix) -> int {
    std::string tail = name.substr(prefix.size());
    if (tail.empty()) throw DomainError("missing parameter in '" + name + "'");
    std::size_t used = 0;
    int value = std::stoi(tail, &used);
    if (used != tail.size())
      throw DomainError("bad parameter in '" + name + "'");
    return value;
  };
  if (name == "medial") return medial();
  if (name == "truncation") return truncation();
  if (name == "omnitruncation") return omnitruncation();
  if (name == "petrie") return petrie();
  if (name.starts_with("dual:")) return dual(param("dual:"));
  if (name.starts_with("prism:")) return prism(param("prism:"));
  if (name.starts_with("pyramid:")) return pyramid(param("pyramid:"));
  if (name.starts_with("double_cover:"))
    return double_cover(param("double_cover:"));
  throw DomainError("unknown builtin operator '" + name + "'");
}

}  // namespace vops
