#pragma once

// Words in the universal string Coxeter group C^n: generators r_0..r_{n-1},
// relations r_i^2 = 1 and (r_i r_j)^2 = 1 exactly when |i-j| >= 2.  Every
// CoxWord is kept in a canonical normal form, so operator== decides the word
// problem.
//
// Convention: a stored letter sequence [a, b, c] denotes the group element
// r_a r_b r_c.  When such an element acts on a flag the letters are applied
// right to left (c first), matching the path convention used everywhere else
// in this library.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vops {

class CoxWord {
 public:
  // Rank-0 "null" word; usable only as a placeholder before assignment.
  CoxWord() = default;

  // Normalizes on construction.  Throws InvalidGeneratorError if a letter
  // lies outside [0, rank).
  CoxWord(int rank, std::vector<int> letters);

  static CoxWord identity(int rank);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const CoxWord&, const CoxWord&) = default;
  friend auto operator<=>(const CoxWord&, const CoxWord&) = default;

 private:
  int rank_ = 0;
  std::vector<int> letters_;
};

// Free reduction only: repeatedly deletes equal letters separated by letters
// commuting with them.  The result is a reduced word, not yet canonical.
std::vector<int> reduce_letters(std::vector<int> letters, int rank);

// Canonical form: lexicographically least word in the commutation class of
// the reduced word (greedy smallest-available-letter extraction).
CoxWord normal_form(std::vector<int> letters, int rank);

CoxWord multiply(const CoxWord& a, const CoxWord& b);
CoxWord inverse(const CoxWord& w);
// u^{-1} w u.
CoxWord conjugate(const CoxWord& w, const CoxWord& u);
// Self-inverse: w * w == identity.  The identity itself qualifies (semi-edge
// voltages only need to square to the identity).
bool is_involution(const CoxWord& w);

// Applies the endomorphism r_i -> images[i] to w.  All images must share one
// rank, which becomes the rank of the result.  The caller is responsible for
// the images actually defining an endomorphism (involutions that commute at
// distance >= 2); see d_operator validation.
CoxWord substitute(const CoxWord& w, const std::vector<CoxWord>& images);

// Text form "[0,2,1]"; the identity renders as "[]".
std::string to_string(const CoxWord& w);

// Parses the bracketed form, ignoring spaces after commas/brackets.
CoxWord parse_word(std::string_view text, int rank);

}  // namespace vops
