#pragma once

#include <array>
#include <map>
#include <numeric>
#include <optional>

#include "autsurf/word.hpp"

namespace autsurf {

struct NotInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotFiniteOrder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Endomorphism {
 public:
  Endomorphism() = default;
  Endomorphism(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != rank_) throw RankMismatch("image count != rank");
    for (const Word& w : images_)
      if (w.max_index() > rank_) throw InvalidGenerator("image uses generator beyond rank");
  }

  static Endomorphism identity(int rank) {
    std::vector<Word> im;
    im.reserve(rank);
    for (int i = 1; i <= rank; ++i) im.push_back(Word({i}));
    return Endomorphism(rank, std::move(im));
  }

  int rank() const { return rank_; }
  const Word& image(int gen_index) const { return images_[gen_index - 1]; }
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const {
    std::vector<Letter> out;
    for (Letter x : w.letters()) {
      if (letter_index(x) > rank_) throw RankMismatch("word rank exceeds endomorphism rank");
      const Word& im = images_[letter_index(x) - 1];
      if (x > 0)
        for (Letter y : im.letters()) out.push_back(y);
      else
        for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) out.push_back(-*it);
    }
    return Word(std::move(out));
  }

  CyclicWord apply(const CyclicWord& w) const { return CyclicWord(apply(w.as_word())); }

  // this o rhs
  Endomorphism compose(const Endomorphism& rhs) const {
    if (rank_ != rhs.rank_) throw RankMismatch("compose: rank mismatch");
    std::vector<Word> im;
    im.reserve(rank_);
    for (const Word& w : rhs.images_) im.push_back(apply(w));
    return Endomorphism(rank_, std::move(im));
  }

  Endomorphism power(int n) const {
    Endomorphism acc = identity(rank_);
    for (int i = 0; i < n; ++i) acc = compose(acc);
    return acc;
  }

  bool operator==(const Endomorphism& o) const { return rank_ == o.rank_ && images_ == o.images_; }
  bool operator<(const Endomorphism& o) const {
    if (rank_ != o.rank_) return rank_ < o.rank_;
    return images_ < o.images_;
  }

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

// If phi is inner, returns w with phi(x) = w x w^-1 for every generator x.
inline std::optional<Word> inner_conjugator(const Endomorphism& phi) {
  int n = phi.rank();
  if (n == 0) return Word();
  // phi(x1) = w x1 w^-1 with w chosen without trailing x1-power; then
  // |phi(x1)| = 2|w|+1 and w is the prefix. Trailing x1-powers are recovered
  // from the other generators.
  const Word& im1 = phi.image(1);
  if (im1.size() % 2 == 0) return std::nullopt;
  std::size_t h = im1.size() / 2;
  if (im1[h] != 1 && n == 1) {
    return std::nullopt;
  }
  if (im1[h] != 1) return std::nullopt;
  std::vector<Letter> wl(im1.letters().begin(), im1.letters().begin() + h);
  Word base(wl);
  if (!(base * Word({1}) * base.inverse() == im1)) return std::nullopt;
  if (n == 1) return base;
  // resolve w = base * x1^k against generator 2
  const Word x1({1});
  for (int k = -static_cast<int>(phi.image(2).size()) - 1;
       k <= static_cast<int>(phi.image(2).size()) + 1; ++k) {
    Word w = base;
    Word pw;
    for (int i = 0; i < std::abs(k); ++i) pw = pw * (k > 0 ? x1 : x1.inverse());
    w = w * pw;
    bool ok = true;
    for (int g = 1; g <= n && ok; ++g) ok = (w * Word({g}) * w.inverse() == phi.image(g));
    if (ok) return w;
  }
  return std::nullopt;
}

inline bool is_inner(const Endomorphism& phi) { return inner_conjugator(phi).has_value(); }

// An outer automorphism: forward map plus an explicit inverse certificate.
class OuterAutomorphism {
 public:
  OuterAutomorphism() = default;
  OuterAutomorphism(Endomorphism forward, Endomorphism inverse)
      : forward_(std::move(forward)), inverse_(std::move(inverse)) {
    if (forward_.rank() != inverse_.rank()) throw RankMismatch("inverse certificate rank mismatch");
    if (!is_inner(forward_.compose(inverse_)) || !is_inner(inverse_.compose(forward_)))
      throw NotInvertible("inverse certificate does not invert");
  }

  int rank() const { return forward_.rank(); }
  const Endomorphism& forward() const { return forward_; }
  const Endomorphism& inverse() const { return inverse_; }

  Word apply(const Word& w) const { return forward_.apply(w); }
  CyclicWord apply(const CyclicWord& w) const { return forward_.apply(w); }

  OuterAutomorphism inverted() const { return OuterAutomorphism(inverse_, forward_); }

  OuterAutomorphism compose(const OuterAutomorphism& rhs) const {
    return OuterAutomorphism(forward_.compose(rhs.forward_), rhs.inverse_.compose(inverse_));
  }

  OuterAutomorphism power(int n) const {
    if (n < 0) return inverted().power(-n);
    OuterAutomorphism acc = identity(rank());
    for (int i = 0; i < n; ++i) acc = compose(acc);
    return acc;
  }

  static OuterAutomorphism identity(int rank) {
    return OuterAutomorphism(Endomorphism::identity(rank), Endomorphism::identity(rank));
  }

  bool is_identity_outer() const { return is_inner(forward_); }

  bool operator==(const OuterAutomorphism& o) const { return forward_ == o.forward_; }
  bool operator<(const OuterAutomorphism& o) const { return forward_ < o.forward_; }

 private:
  Endomorphism forward_;
  Endomorphism inverse_;
};

namespace detail {

struct NielsenState {
  std::vector<Word> tuple;
  Endomorphism inv;  // accumulated inverse: identity composed with elementary moves
};

}  // namespace detail

// Decide invertibility by Nielsen-reducing the image tuple; the accumulated
// elementary moves assemble the inverse automorphism.
inline OuterAutomorphism invert(const Endomorphism& e) {
  const int n = e.rank();
  std::vector<Word> tuple = e.images();
  Endomorphism psi = Endomorphism::identity(n);

  auto elementary_mult = [&](int i, int j, bool right, bool inv_j) {
    // tuple[i] <- tuple[i] * tuple[j]^eps (right) or tuple[j]^eps * tuple[i]
    // corresponding elementary automorphism precomposed into psi's build:
    // phi' = phi o m where m: x_i -> x_i x_j^eps (or x_j^eps x_i).
    // Then phi = phi' o m^-1, so psi accumulates m on the left of psi:
    // psi' = m o psi.
    Word xj({inv_j ? -(j + 1) : (j + 1)});
    std::vector<Word> mims;
    for (int g = 1; g <= n; ++g) mims.push_back(Word({g}));
    mims[i] = right ? Word({i + 1}) * xj : xj * Word({i + 1});
    Endomorphism m(n, mims);
    // invert m directly: x_i -> x_i xj^-1 (or xj^-1 x_i)
    std::vector<Word> minv;
    for (int g = 1; g <= n; ++g) minv.push_back(Word({g}));
    minv[i] = right ? Word({i + 1}) * xj.inverse() : xj.inverse() * Word({i + 1});
    Endomorphism m_inv(n, minv);
    tuple[i] = right ? tuple[i] * (inv_j ? tuple[j].inverse() : tuple[j])
                     : (inv_j ? tuple[j].inverse() : tuple[j]) * tuple[i];
    psi = m_inv.compose(psi);
  };

  auto total = [&] {
    std::size_t s = 0;
    for (auto& w : tuple) s += w.size();
    return s;
  };

  for (;;) {
    if (std::any_of(tuple.begin(), tuple.end(), [](const Word& w) { return w.empty(); }))
      throw NotInvertible("image tuple degenerates");
    std::size_t before = total();
    bool applied = false;
    for (int i = 0; i < n && !applied; ++i) {
      for (int j = 0; j < n && !applied; ++j) {
        if (i == j) continue;
        for (int right = 1; right >= 0 && !applied; --right) {
          for (int invj = 0; invj <= 1 && !applied; ++invj) {
            Word xj = invj ? tuple[j].inverse() : tuple[j];
            Word cand = right ? tuple[i] * xj : xj * tuple[i];
            if (cand.size() < tuple[i].size() && !cand.empty()) {
              elementary_mult(i, j, right, invj);
              applied = true;
            }
          }
        }
      }
    }
    if (!applied) break;
    if (total() >= before) break;  // defensive; strict decrease expected
  }

  // Must now be a permutation of generators with signs.
  std::vector<int> perm(n, 0);
  std::vector<bool> used(n + 1, false);
  for (int i = 0; i < n; ++i) {
    if (tuple[i].size() != 1) throw NotInvertible("tuple does not Nielsen-reduce to a basis");
    Letter x = tuple[i][0];
    int idx = letter_index(x);
    if (used[idx]) throw NotInvertible("tuple does not Nielsen-reduce to a basis");
    used[idx] = true;
    perm[i] = x;
  }
  // phi o (moves) = pi with pi: x_{i+1} -> perm[i]; psi currently = moves^-1
  // composed back-to-front, i.e. phi = pi o psi^-1 ... assemble:
  // after the loop, tuple = pi, and phi o M = pi where M is the product of the
  // elementary moves applied (in order) and psi = M^-1 ... wait: psi = product
  // of m^-1 in reverse composition order = M^-1. Then phi = pi o M^-1 = pi o psi,
  // so phi^-1 = psi^-1 o pi^-1 = M o pi^-1. We rebuild M o pi^-1 from psi by
  // inverting: easier to verify directly both candidates.
  std::vector<Word> pi_inv(n);
  for (int i = 0; i < n; ++i) {
    int idx = letter_index(perm[i]);
    pi_inv[idx - 1] = perm[i] > 0 ? Word({i + 1}) : Word({-(i + 1)});
  }
  Endomorphism piinv(n, pi_inv);
  // candidate inverse: psi o pi^-1? or pi^-1 then psi? test both, exact.
  for (const Endomorphism& cand : {psi.compose(piinv), piinv.compose(psi)}) {
    if (is_inner(e.compose(cand)) && is_inner(cand.compose(e))) return OuterAutomorphism(e, cand);
  }
  throw NotInvertible("internal: accumulated inverse failed verification");
}

// Uniform rotationless exponents; configuration, not contract. Values cover
// the orders of finite-order phenomena at each rank and may be overridden.
inline int rotationless_exponent(int rank) {
  static const std::map<int, int> table = {{1, 2}, {2, 12}, {3, 24}, {4, 120}, {5, 120}, {6, 2520}};
  auto it = table.find(rank);
  if (it != table.end()) return it->second;
  int k = 2;
  for (int i = 3; i <= 2 * rank + 1; ++i) k = std::lcm(k, i);
  return k;
}

inline std::pair<int, OuterAutomorphism> rotationless_power(const OuterAutomorphism& phi,
                                                            int exponent_override = 0) {
  int n = exponent_override > 0 ? exponent_override : rotationless_exponent(phi.rank());
  return {n, phi.power(n)};
}

// Order of phi in Out(F_n) up to the given bound, or nullopt.
inline std::optional<int> outer_order(const OuterAutomorphism& phi, int bound) {
  OuterAutomorphism acc = OuterAutomorphism::identity(phi.rank());
  for (int k = 1; k <= bound; ++k) {
    acc = phi.compose(acc);
    if (acc.is_identity_outer()) return k;
  }
  return std::nullopt;
}

}  // namespace autsurf
