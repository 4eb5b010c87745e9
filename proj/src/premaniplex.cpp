#include "vops/premaniplex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "vops/errors.hpp"

namespace vops {

Premaniplex::Premaniplex(int rank, std::vector<std::vector<int>> perms)
    : rank_(rank), perms_(std::move(perms)) {
  if (rank_ < 1) throw DomainError("premaniplex rank must be >= 1");
  if (static_cast<int>(perms_.size()) != rank_)
    throw DomainError("expected one permutation per color");
  flags_ = static_cast<int>(perms_[0].size());
  if (flags_ < 1) throw DomainError("premaniplex needs at least one flag");
  for (const auto& perm : perms_) {
    if (static_cast<int>(perm.size()) != flags_)
      throw DomainError("permutations must share one flag set");
    for (int image : perm) {
      if (image < 0 || image >= flags_)
        throw DomainError("permutation image out of range");
    }
  }
}

ValidationReport validate(const Premaniplex& p) {
  ValidationReport report;
  const int n = p.rank(), k = p.flag_count();
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < k; ++x) {
      if (p.adj(p.adj(x, i), i) != x) {
        report.violations.push_back(
            {Violation::Kind::NotInvolution, x, i, -1});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      for (int x = 0; x < k; ++x) {
        if (p.adj(p.adj(x, i), j) != p.adj(p.adj(x, j), i)) {
          report.violations.push_back({Violation::Kind::AxiomBroken, x, i, j});
        }
      }
    }
  }
  return report;
}

bool is_connected(const Premaniplex& p) {
  return components(p).size() == 1;
}

bool is_maniplex(const Premaniplex& p) {
  if (!is_connected(p)) return false;
  const int n = p.rank(), k = p.flag_count();
  for (int i = 0; i < n; ++i)
    for (int x = 0; x < k; ++x)
      if (p.adj(x, i) == x) return false;  // semi-edge
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int x = 0; x < k; ++x)
        if (p.adj(x, i) == p.adj(x, j)) return false;  // parallel edge
  return true;
}

int apply_word(const Premaniplex& p, int flag, const CoxWord& w) {
  if (w.rank() != p.rank())
    throw RankMismatchError("word rank does not match premaniplex rank");
  if (flag < 0 || flag >= p.flag_count())
    throw DomainError("flag out of range");
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    flag = p.adj(flag, *it);
  return flag;
}

std::vector<std::vector<int>> components(const Premaniplex& p) {
  const int k = p.flag_count();
  std::vector<int> comp(k, -1);
  std::vector<std::vector<int>> result;
  for (int start = 0; start < k; ++start) {
    if (comp[start] != -1) continue;
    int id = static_cast<int>(result.size());
    std::vector<int> members;
    std::deque<int> queue{start};
    comp[start] = id;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      members.push_back(x);
      for (int i = 0; i < p.rank(); ++i) {
        int y = p.adj(x, i);
        if (comp[y] == -1) {
          comp[y] = id;
          queue.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    result.push_back(std::move(members));
  }
  return result;
}

Component component_of(const Premaniplex& p, int flag) {
  if (flag < 0 || flag >= p.flag_count())
    throw DomainError("flag out of range");
  auto comps = components(p);
  const std::vector<int>* mine = nullptr;
  for (const auto& c : comps)
    if (std::binary_search(c.begin(), c.end(), flag)) mine = &c;
  std::vector<int> to_sub(p.flag_count(), -1);
  for (std::size_t i = 0; i < mine->size(); ++i)
    to_sub[(*mine)[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> perms(
      p.rank(), std::vector<int>(mine->size()));
  for (int i = 0; i < p.rank(); ++i)
    for (std::size_t x = 0; x < mine->size(); ++x)
      perms[i][x] = to_sub[p.adj((*mine)[x], i)];
  return Component{Premaniplex(p.rank(), std::move(perms)), *mine,
                   to_sub[flag]};
}

SpanningTree spanning_tree(const Premaniplex& p, int base) {
  if (base < 0 || base >= p.flag_count())
    throw DomainError("base flag out of range");
  SpanningTree tree;
  tree.base = base;
  tree.word_to.assign(p.flag_count(), CoxWord());
  tree.reached.assign(p.flag_count(), 0);
  tree.reached[base] = 1;
  tree.word_to[base] = CoxWord::identity(p.rank());
  std::deque<int> queue{base};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int i = 0; i < p.rank(); ++i) {
      int y = p.adj(x, i);
      if (y == x || tree.reached[y]) continue;
      tree.reached[y] = 1;
      // y = r_i x, so the word to y prepends the new letter.
      tree.word_to[y] =
          multiply(CoxWord(p.rank(), {i}), tree.word_to[x]);
      tree.darts.emplace_back(x, i);
      queue.push_back(y);
    }
  }
  return tree;
}

SchreierSubgroup schreier_generators(const Premaniplex& p, int base) {
  SpanningTree tree = spanning_tree(p, base);
  // Mark tree edges (both darts).
  std::vector<std::vector<char>> in_tree(
      p.rank(), std::vector<char>(p.flag_count(), 0));
  for (auto [x, i] : tree.darts) {
    in_tree[i][x] = 1;
    in_tree[i][p.adj(x, i)] = 1;
  }
  SchreierSubgroup sub{p.rank(), base, {}};
  for (int x = 0; x < p.flag_count(); ++x) {
    if (!tree.reached[x]) continue;
    for (int i = 0; i < p.rank(); ++i) {
      if (in_tree[i][x]) continue;
      int y = p.adj(x, i);
      sub.generators.push_back(multiply(
          multiply(inverse(tree.word_to[y]), CoxWord(p.rank(), {i})),
          tree.word_to[x]));
    }
  }
  return sub;
}

Quotient quotient(const Premaniplex& p,
                  const std::vector<std::vector<int>>& group) {
  const int k = p.flag_count();
  for (const auto& g : group) {
    if (static_cast<int>(g.size()) != k)
      throw DomainError("quotient: group element has wrong length");
    std::vector<char> seen(k, 0);
    for (int image : g) {
      if (image < 0 || image >= k || seen[image])
        throw DomainError("quotient: group element is not a bijection");
      seen[image] = 1;
    }
    for (int i = 0; i < p.rank(); ++i)
      for (int x = 0; x < k; ++x)
        if (g[p.adj(x, i)] != p.adj(g[x], i))
          throw DomainError("quotient: group element is not an automorphism");
  }
  // Orbit partition via union-find.
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& g : group) {
    for (int x = 0; x < k; ++x) {
      int a = find(x), b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> orbit_of(k, -1);
  int count = 0;
  for (int x = 0; x < k; ++x)
    if (find(x) == x) orbit_of[x] = count++;
  for (int x = 0; x < k; ++x) orbit_of[x] = orbit_of[find(x)];
  std::vector<std::vector<int>> perms(p.rank(), std::vector<int>(count, -1));
  for (int i = 0; i < p.rank(); ++i)
    for (int x = 0; x < k; ++x)
      perms[i][orbit_of[x]] = orbit_of[p.adj(x, i)];
  Quotient q{Premaniplex(p.rank(), std::move(perms)), std::move(orbit_of)};
  return q;
}

Premaniplex one_vertex(int rank) {
  if (rank < 1) throw DomainError("rank must be >= 1");
  return Premaniplex(rank, std::vector<std::vector<int>>(rank, {0}));
}

Premaniplex two_flag(int rank, const std::vector<int>& semi_colors) {
  if (rank < 1) throw DomainError("rank must be >= 1");
  std::vector<char> semi(rank, 0);
  for (int c : semi_colors) {
    if (c < 0 || c >= rank)
      throw InvalidGeneratorError("semi-edge color out of range");
    semi[c] = 1;
  }
  std::vector<std::vector<int>> perms(rank);
  for (int i = 0; i < rank; ++i)
    perms[i] = semi[i] ? std::vector<int>{0, 1} : std::vector<int>{1, 0};
  return Premaniplex(rank, std::move(perms));
}

Premaniplex polygon(int p) {
  if (p < 2) throw DomainError("polygon needs p >= 2");
  const int k = 2 * p;
  std::vector<std::vector<int>> perms(2, std::vector<int>(k));
  for (int j = 0; j < p; ++j) {
    perms[0][2 * j] = 2 * j + 1;
    perms[0][2 * j + 1] = 2 * j;
    perms[1][(2 * j + 1) % k] = (2 * j + 2) % k;
    perms[1][(2 * j + 2) % k] = (2 * j + 1) % k;
  }
  return Premaniplex(2, std::move(perms));
}

}  // namespace vops
