#include "vops/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "vops/errors.hpp"

namespace vops {

MorphismResult extend_morphism(const Premaniplex& p, const Premaniplex& q,
                               int x0, int q0) {
  if (p.rank() != q.rank())
    throw RankMismatchError("morphism requires equal ranks");
  if (!is_connected(p))
    throw DisconnectedError("morphism source must be connected");
  if (x0 < 0 || x0 >= p.flag_count() || q0 < 0 || q0 >= q.flag_count())
    throw DomainError("base flag out of range");
  std::vector<int> map(p.flag_count(), -1);
  map[x0] = q0;
  std::deque<int> queue{x0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int i = 0; i < p.rank(); ++i) {
      int y = p.adj(x, i);
      int image = q.adj(map[x], i);
      if (map[y] == -1) {
        map[y] = image;
        queue.push_back(y);
      } else if (map[y] != image) {
        MorphismResult fail;
        fail.conflict_flag = x;
        fail.conflict_color = i;
        return fail;
      }
    }
  }
  MorphismResult result;
  result.mapping = std::move(map);
  return result;
}

namespace {

AutomorphismGroup finish_group(const Premaniplex& p,
                               std::vector<FlagPermutation> elements) {
  std::sort(elements.begin(), elements.end(),
            [](const FlagPermutation& a, const FlagPermutation& b) {
              return a.images[0] < b.images[0] ||
                     (a.images[0] == b.images[0] && a.images < b.images);
            });
  AutomorphismGroup group;
  group.elements = std::move(elements);
  group.orbit_of.assign(p.flag_count(), -1);
  int count = 0;
  for (int x = 0; x < p.flag_count(); ++x) {
    if (group.orbit_of[x] != -1) continue;
    std::vector<int> members;
    for (const auto& g : group.elements) {
      int y = g(x);
      if (group.orbit_of[y] == -1) {
        group.orbit_of[y] = count;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    group.orbit_lists.push_back(std::move(members));
    ++count;
  }
  return group;
}

}  // namespace

AutomorphismGroup automorphisms(const Premaniplex& p) {
  if (!is_connected(p))
    throw DisconnectedError("automorphisms requires a connected premaniplex");
  std::vector<FlagPermutation> elements;
  for (int q0 = 0; q0 < p.flag_count(); ++q0) {
    MorphismResult r = extend_morphism(p, p, 0, q0);
    if (r.ok()) {
      // A surjective endomorphism of a finite connected premaniplex is an
      // automorphism.
      elements.push_back(FlagPermutation{std::move(*r.mapping)});
    }
  }
  return finish_group(p, std::move(elements));
}

AutomorphismGroup generated_group(const Premaniplex& p,
                                  std::vector<FlagPermutation> generators) {
  for (const auto& g : generators) {
    if (static_cast<int>(g.images.size()) != p.flag_count())
      throw DomainError("generator has wrong length");
    for (int i = 0; i < p.rank(); ++i)
      for (int x = 0; x < p.flag_count(); ++x)
        if (g.images[p.adj(x, i)] != p.adj(g.images[x], i))
          throw DomainError("generator is not an automorphism");
  }
  FlagPermutation id;
  id.images.resize(p.flag_count());
  for (int x = 0; x < p.flag_count(); ++x) id.images[x] = x;
  std::set<std::vector<int>> seen{id.images};
  std::deque<FlagPermutation> queue{id};
  std::vector<FlagPermutation> elements{id};
  while (!queue.empty()) {
    FlagPermutation g = queue.front();
    queue.pop_front();
    for (const auto& h : generators) {
      FlagPermutation gh;
      gh.images.resize(p.flag_count());
      for (int x = 0; x < p.flag_count(); ++x) gh.images[x] = h(g(x));
      if (seen.insert(gh.images).second) {
        elements.push_back(gh);
        queue.push_back(std::move(gh));
      }
    }
  }
  return finish_group(p, std::move(elements));
}

std::vector<std::vector<int>> orbits(const Premaniplex& p,
                                     const std::vector<FlagPermutation>& g) {
  AutomorphismGroup group = generated_group(p, g);
  return group.orbit_lists;
}

bool is_isomorphic(const Premaniplex& p, const Premaniplex& q) {
  if (p.rank() != q.rank()) return false;
  if (p.flag_count() != q.flag_count()) return false;
  if (!is_connected(p) || !is_connected(q))
    throw DisconnectedError("is_isomorphic requires connected premaniplexes");
  for (int q0 = 0; q0 < q.flag_count(); ++q0)
    if (extend_morphism(p, q, 0, q0).ok()) return true;
  return false;
}

bool covers(const Premaniplex& p, const Premaniplex& q) {
  if (p.rank() != q.rank()) return false;
  if (!is_connected(p) || !is_connected(q))
    throw DisconnectedError("covers requires connected premaniplexes");
  for (int q0 = 0; q0 < q.flag_count(); ++q0)
    if (extend_morphism(p, q, 0, q0).ok()) return true;
  return false;
}

Quotient stg(const Premaniplex& p) {
  AutomorphismGroup group = automorphisms(p);
  std::vector<std::vector<int>> tables;
  tables.reserve(group.elements.size());
  for (const auto& g : group.elements) tables.push_back(g.images);
  return quotient(p, tables);
}

}  // namespace vops
