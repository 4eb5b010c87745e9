#include "vops/coxword.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "vops/errors.hpp"

namespace vops {

namespace {

void check_letters(const std::vector<int>& letters, int rank) {
  if (rank < 1) throw InvalidGeneratorError("word rank must be >= 1");
  for (int a : letters) {
    if (a < 0 || a >= rank) {
      throw InvalidGeneratorError("letter " + std::to_string(a) +
                                  " out of range for rank " +
                                  std::to_string(rank));
    }
  }
}

inline bool commute(int a, int b) { return std::abs(a - b) >= 2; }

}  // namespace

std::vector<int> reduce_letters(std::vector<int> w, int rank) {
  check_letters(w, rank);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < w.size() && !changed; ++p) {
      for (std::size_t q = p + 1; q < w.size(); ++q) {
        if (w[q] == w[p]) {
          // Equal letters with only commuting letters in between: delete both.
          w.erase(w.begin() + q);
          w.erase(w.begin() + p);
          changed = true;
          break;
        }
        if (!commute(w[p], w[q])) break;  // blocked
      }
    }
  }
  return w;
}

CoxWord normal_form(std::vector<int> letters, int rank) {
  return CoxWord(rank, std::move(letters));
}

CoxWord::CoxWord(int rank, std::vector<int> letters) : rank_(rank) {
  check_letters(letters, rank);
  std::vector<int> w = reduce_letters(std::move(letters), rank);
  // Greedy extraction: repeatedly pull out the smallest letter that can be
  // commuted to the front.  This yields the lex-least word of the
  // commutation class; since all reduced words of one element form a single
  // class (Tits, right-angled case), the result is canonical.
  std::vector<int> out;
  out.reserve(w.size());
  while (!w.empty()) {
    std::size_t best = 0;
    bool have = false;
    for (std::size_t p = 0; p < w.size(); ++p) {
      bool movable = true;
      for (std::size_t j = 0; j < p; ++j) {
        if (!commute(w[j], w[p])) {
          movable = false;
          break;
        }
      }
      if (movable && (!have || w[p] < w[best])) {
        best = p;
        have = true;
      }
    }
    out.push_back(w[best]);
    w.erase(w.begin() + best);
  }
  letters_ = std::move(out);
}

CoxWord CoxWord::identity(int rank) { return CoxWord(rank, {}); }

CoxWord multiply(const CoxWord& a, const CoxWord& b) {
  if (a.rank() != b.rank()) {
    throw RankMismatchError("cannot multiply words of ranks " +
                            std::to_string(a.rank()) + " and " +
                            std::to_string(b.rank()));
  }
  std::vector<int> cat = a.letters();
  cat.insert(cat.end(), b.letters().begin(), b.letters().end());
  return CoxWord(a.rank(), std::move(cat));
}

CoxWord inverse(const CoxWord& w) {
  std::vector<int> rev(w.letters().rbegin(), w.letters().rend());
  return CoxWord(w.rank(), std::move(rev));
}

CoxWord conjugate(const CoxWord& w, const CoxWord& u) {
  return multiply(multiply(inverse(u), w), u);
}

bool is_involution(const CoxWord& w) { return multiply(w, w).is_identity(); }

CoxWord substitute(const CoxWord& w, const std::vector<CoxWord>& images) {
  if (images.empty()) throw DomainError("substitute: no images given");
  int target_rank = images[0].rank();
  for (const CoxWord& im : images) {
    if (im.rank() != target_rank) {
      throw RankMismatchError("substitute: images have mixed ranks");
    }
  }
  if (static_cast<int>(images.size()) < w.rank()) {
    throw DomainError("substitute: need one image per generator");
  }
  std::vector<int> cat;
  for (int a : w.letters()) {
    const auto& im = images[a].letters();
    cat.insert(cat.end(), im.begin(), im.end());
  }
  return CoxWord(target_rank, std::move(cat));
}

std::string to_string(const CoxWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.letters()[i]);
  }
  s += ']';
  return s;
}

CoxWord parse_word(std::string_view text, int rank) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '[')
    throw IoError("word must start with '['");
  ++i;
  std::vector<int> letters;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i) throw IoError("expected letter in word");
      letters.push_back(std::stoi(std::string(text.substr(start, i - start))));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      throw IoError("expected ',' or ']' in word");
    }
  }
  skip_ws();
  if (i != text.size()) throw IoError("trailing characters after word");
  return CoxWord(rank, std::move(letters));
}

}  // namespace vops
