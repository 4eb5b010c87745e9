#include "vops/cosetenum.hpp"

#include <algorithm>
#include <deque>

#include "vops/errors.hpp"

namespace vops {

namespace {

// Enumeration state.  All generators are involutions, so each table column
// is its own inverse: setting c*g = d always sets d*g = c.
struct Enumerator {
  int gens;
  std::size_t cap;
  std::vector<std::vector<int>> tab;  // -1 = undefined
  std::vector<int> parent;            // union-find; smaller index survives
  std::size_t live = 0;
  bool capped = false;

  explicit Enumerator(int g, std::size_t cap_) : gens(g), cap(cap_) {
    new_coset();
  }

  int find(int c) {
    while (parent[c] != c) c = parent[c] = parent[parent[c]];
    return c;
  }

  int new_coset() {
    tab.emplace_back(gens, -1);
    parent.push_back(static_cast<int>(parent.size()));
    ++live;
    return static_cast<int>(tab.size()) - 1;
  }

  // Defines tab[c][g] as a fresh coset; false if the cap is hit.
  bool define(int c, int g) {
    if (tab.size() >= cap) {
      capped = true;
      return false;
    }
    int n = new_coset();
    tab[c][g] = n;
    tab[n][g] = c;
    return true;
  }

  // Symmetric assignment tab[f][g] = b, queueing a coincidence if b's slot
  // already points elsewhere.  Assumes tab[f][g] == -1.
  void join(int f, int g, int b, std::deque<std::pair<int, int>>& pending) {
    tab[f][g] = b;
    int back = tab[b][g];
    if (back == -1) {
      tab[b][g] = f;
    } else if (find(back) != find(f)) {
      pending.push_back({find(back), find(f)});
      tab[b][g] = f;
    }
  }

  void coincidence(int a, int b) {
    std::deque<std::pair<int, int>> pending{{a, b}};
    process(pending);
  }

  void process(std::deque<std::pair<int, int>>& pending) {
    while (!pending.empty()) {
      auto [x, y] = pending.front();
      pending.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      int u = std::min(x, y), v = std::max(x, y);
      parent[v] = u;
      --live;
      for (int g = 0; g < gens; ++g) {
        int ev = tab[v][g];
        if (ev == -1) continue;
        int evr = find(ev);
        int eu = tab[u][g];
        if (eu == -1) {
          tab[u][g] = evr;
          int back = tab[evr][g];
          if (back == -1) {
            tab[evr][g] = u;
          } else if (find(back) != u) {
            pending.push_back({find(back), u});
            tab[evr][g] = u;
          }
        } else if (find(eu) != evr) {
          pending.push_back({find(eu), evr});
        }
      }
    }
  }

  // HLT scan of `word` at live coset c, filling gaps with definitions
  // except the last, which closes by deduction/coincidence.  Returns false
  // on cap.
  bool scan_and_fill(int c, const std::vector<int>& word) {
    int f = c, b = c;
    std::size_t i = 0, j = word.size();
    while (true) {
      while (i < j && tab[f][word[i]] != -1) {
        f = find(tab[f][word[i]]);
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j > i && tab[b][word[j - 1]] != -1) {
        b = find(tab[b][word[j - 1]]);
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        std::deque<std::pair<int, int>> pending;
        join(f, word[i], b, pending);
        process(pending);
        return true;
      }
      if (!define(f, word[i])) return false;
      f = tab[f][word[i]];
      ++i;
    }
  }
};

void check_word(const std::vector<int>& word, int gens, const char* what) {
  for (int a : word) {
    if (a < 0 || a >= gens)
      throw InvalidGeneratorError(std::string(what) + " letter out of range");
  }
}

}  // namespace

CosetTable todd_coxeter(const Presentation& pres,
                        const std::vector<std::vector<int>>& subgroup,
                        std::size_t cap) {
  if (pres.generator_count < 1)
    throw DomainError("presentation needs at least one generator");
  std::vector<std::vector<int>> relators = pres.relators;
  for (const auto& r : relators) check_word(r, pres.generator_count, "relator");
  for (const auto& w : subgroup)
    check_word(w, pres.generator_count, "subgroup generator");
  if (pres.string_commutations) {
    for (int i = 0; i < pres.generator_count; ++i)
      for (int j = i + 2; j < pres.generator_count; ++j)
        relators.push_back({i, j, i, j});
  }

  Enumerator en(pres.generator_count, std::max<std::size_t>(cap, 1));
  for (const auto& w : subgroup) {
    if (!en.scan_and_fill(0, w)) {
      return CosetTable{CosetTable::Status::Capped, {}, en.live};
    }
  }
  for (std::size_t c = 0; c < en.tab.size(); ++c) {
    int ci = static_cast<int>(c);
    if (en.find(ci) != ci) continue;
    for (const auto& r : relators) {
      if (!en.scan_and_fill(ci, r))
        return CosetTable{CosetTable::Status::Capped, {}, en.live};
      if (en.find(ci) != ci) break;
    }
    if (en.find(ci) != ci) continue;
    // Row filling keeps generators that appear in no relator moving.
    for (int g = 0; g < pres.generator_count; ++g) {
      if (en.tab[ci][g] == -1 && !en.define(ci, g))
        return CosetTable{CosetTable::Status::Capped, {}, en.live};
    }
  }

  // Compact live cosets in first-definition order.
  std::vector<int> newid(en.tab.size(), -1);
  int count = 0;
  for (std::size_t c = 0; c < en.tab.size(); ++c)
    if (en.find(static_cast<int>(c)) == static_cast<int>(c))
      newid[c] = count++;
  CosetTable result;
  result.status = CosetTable::Status::Complete;
  result.cosets = static_cast<std::size_t>(count);
  result.rows.assign(count, std::vector<int>(pres.generator_count, -1));
  for (std::size_t c = 0; c < en.tab.size(); ++c) {
    if (newid[c] == -1) continue;
    for (int g = 0; g < pres.generator_count; ++g) {
      int e = en.tab[c][g];
      result.rows[newid[c]][g] = newid[en.find(e)];
    }
  }
  return result;
}

Premaniplex coxeter_flag_graph(const std::vector<int>& schlafli,
                               const std::vector<std::vector<int>>& extra,
                               std::size_t cap) {
  const int n = static_cast<int>(schlafli.size()) + 1;
  Presentation pres;
  pres.generator_count = n;
  pres.string_commutations = true;
  for (std::size_t i = 0; i < schlafli.size(); ++i) {
    if (schlafli[i] < 2) throw DomainError("Schlafli entries must be >= 2");
    std::vector<int> rel;
    for (int rep = 0; rep < schlafli[i]; ++rep) {
      rel.push_back(static_cast<int>(i));
      rel.push_back(static_cast<int>(i) + 1);
    }
    pres.relators.push_back(std::move(rel));
  }
  for (const auto& r : extra) pres.relators.push_back(r);
  CosetTable table = todd_coxeter(pres, {}, cap);
  if (table.status != CosetTable::Status::Complete)
    throw CappedError("coset enumeration hit the cap", table.cosets);
  std::vector<std::vector<int>> perms(n,
                                      std::vector<int>(table.rows.size()));
  for (int i = 0; i < n; ++i)
    for (std::size_t c = 0; c < table.rows.size(); ++c)
      perms[i][c] = table.rows[c][i];
  return Premaniplex(n, std::move(perms));
}

SchreierRealization realize_schreier(int rank,
                                     const std::vector<CoxWord>& gens,
                                     std::size_t cap) {
  if (rank < 1) throw DomainError("rank must be >= 1");
  Presentation pres;
  pres.generator_count = rank;
  pres.string_commutations = true;
  std::vector<std::vector<int>> subgroup;
  for (const CoxWord& w : gens) {
    if (w.rank() != rank)
      throw RankMismatchError("subgroup generator rank mismatch");
    subgroup.push_back(w.letters());
  }
  CosetTable table = todd_coxeter(pres, subgroup, cap);
  SchreierRealization out;
  out.status = table.status;
  out.cosets = table.cosets;
  if (table.status == CosetTable::Status::Complete) {
    const int k = static_cast<int>(table.rows.size());
    std::vector<std::vector<int>> perms(rank, std::vector<int>(k));
    for (int i = 0; i < rank; ++i)
      for (int c = 0; c < k; ++c) perms[i][c] = table.rows[c][i];
    out.graph = Premaniplex(rank, std::move(perms));
  }
  return out;
}

}  // namespace vops
