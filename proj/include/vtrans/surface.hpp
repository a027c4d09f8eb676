#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "vtrans/base.hpp"

namespace vtrans {

/// Closed oriented surface of genus g >= 1, the base of every bundle here.
struct Surface {
  int genus;

  explicit Surface(int g) : genus(g) {
    if (g < 1) throw DomainError("genus must be >= 1");
  }
  int rank() const { return 2 * genus; }
};

inline bool operator==(const Surface& a, const Surface& b) { return a.genus == b.genus; }
inline bool operator!=(const Surface& a, const Surface& b) { return !(a == b); }

// ---------------------------------------------------------------------------
// First homology: Z^{2g} with the standard symplectic basis A1,B1,...,Ag,Bg.
// Index convention: 2i is A_{i+1}, 2i+1 is B_{i+1}.
// ---------------------------------------------------------------------------

class H1Class {
 public:
  explicit H1Class(int genus) : coords_(2 * static_cast<std::size_t>(check(genus)), 0) {}

  static H1Class basis(int genus, int index) {
    H1Class c(genus);
    if (index < 0 || index >= 2 * genus) throw DimensionError("basis index out of range");
    c.coords_[static_cast<std::size_t>(index)] = 1;
    return c;
  }

  int genus() const { return static_cast<int>(coords_.size()) / 2; }
  const std::vector<long long>& coords() const { return coords_; }
  long long operator[](std::size_t i) const { return coords_.at(i); }
  long long& operator[](std::size_t i) { return coords_.at(i); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](long long c) { return c == 0; });
  }

  H1Class& operator+=(const H1Class& o) {
    same_genus(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  H1Class& operator-=(const H1Class& o) {
    same_genus(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  H1Class& operator*=(long long n) {
    for (auto& c : coords_) c *= n;
    return *this;
  }

  friend H1Class operator+(H1Class a, const H1Class& b) { return a += b; }
  friend H1Class operator-(H1Class a, const H1Class& b) { return a -= b; }
  friend H1Class operator-(H1Class a) { return a *= -1; }
  friend H1Class operator*(long long n, H1Class a) { return a *= n; }
  friend H1Class operator*(H1Class a, long long n) { return a *= n; }
  friend bool operator==(const H1Class& a, const H1Class& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const H1Class& a, const H1Class& b) { return !(a == b); }

 private:
  static int check(int genus) {
    if (genus < 1) throw DomainError("genus must be >= 1");
    return genus;
  }
  void same_genus(const H1Class& o) const {
    if (coords_.size() != o.coords_.size()) throw DimensionError("genus mismatch between H1 classes");
  }

  std::vector<long long> coords_;
};

/// Algebraic intersection pairing in the standard basis: <A_i, B_i> = +1.
inline long long intersection_number(const H1Class& x, const H1Class& y) {
  if (x.genus() != y.genus()) throw DimensionError("genus mismatch between H1 classes");
  long long total = 0;
  for (int i = 0; i < x.genus(); ++i) {
    const std::size_t a = 2 * static_cast<std::size_t>(i);
    total += x[a] * y[a + 1] - x[a + 1] * y[a];
  }
  return total;
}

/// gcd of the coordinates; 0 for the zero class.  The image of the pairing
/// <c, -> : H1 -> Z is content(c) * Z, which is what the shift-set algebra needs.
inline long long h1_content(const H1Class& c) {
  long long g = 0;
  for (long long v : c.coords()) g = std::gcd(g, v);
  return g;
}

// ---------------------------------------------------------------------------
// Words in pi_1 of the surface, presented as
//   < A1,B1,...,Ag,Bg | [A1,B1]...[Ag,Bg] >.
// Words are kept freely reduced at all times.
// ---------------------------------------------------------------------------

class SurfaceWord {
 public:
  struct Letter {
    int gen;   // 0..2g-1, even = A_{gen/2+1}, odd = B_{gen/2+1}
    int sign;  // +1 or -1
    friend bool operator==(const Letter& a, const Letter& b) {
      return a.gen == b.gen && a.sign == b.sign;
    }
    friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
  };

  explicit SurfaceWord(int genus) : genus_(check(genus)) {}

  static SurfaceWord generator(int genus, int gen, int sign = +1) {
    SurfaceWord w(genus);
    if (gen < 0 || gen >= 2 * genus) throw DimensionError("generator index out of range");
    if (sign != 1 && sign != -1) throw DomainError("letter sign must be +1 or -1");
    w.letters_.push_back({gen, sign});
    return w;
  }

  static SurfaceWord from_letters(int genus, const std::vector<Letter>& raw) {
    SurfaceWord w(genus);
    for (const Letter& l : raw) {
      if (l.gen < 0 || l.gen >= 2 * genus) throw DimensionError("generator index out of range");
      if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
      push_reduced(w.letters_, l);
    }
    return w;
  }

  int genus() const { return genus_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const SurfaceWord& a, const SurfaceWord& b) {
    return a.genus_ == b.genus_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const SurfaceWord& a, const SurfaceWord& b) { return !(a == b); }

  friend SurfaceWord operator*(const SurfaceWord& a, const SurfaceWord& b) {
    if (a.genus_ != b.genus_) throw DimensionError("genus mismatch between words");
    SurfaceWord w = a;
    for (const Letter& l : b.letters_) push_reduced(w.letters_, l);
    return w;
  }

 private:
  static int check(int genus) {
    if (genus < 1) throw DomainError("genus must be >= 1");
    return genus;
  }
  static void push_reduced(std::vector<Letter>& out, const Letter& l) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }

  int genus_;
  std::vector<Letter> letters_;
};

inline SurfaceWord inverse(const SurfaceWord& w) {
  std::vector<SurfaceWord::Letter> rev(w.letters().rbegin(), w.letters().rend());
  for (auto& l : rev) l.sign = -l.sign;
  return SurfaceWord::from_letters(w.genus(), rev);
}

inline SurfaceWord pow(const SurfaceWord& w, long long n) {
  SurfaceWord base = n < 0 ? inverse(w) : w;
  SurfaceWord out(w.genus());
  for (long long i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
  return out;
}

inline H1Class abelianize(const SurfaceWord& w) {
  H1Class c(w.genus());
  for (const auto& l : w.letters()) c[static_cast<std::size_t>(l.gen)] += l.sign;
  return c;
}

// ---------------------------------------------------------------------------
// Word problem.  For genus >= 2 the single surface relator satisfies C'(1/6)
// (every piece has length 1 < 4g/6), so Dehn's greedy algorithm is exact:
// repeatedly replace any subword that covers more than half of a cyclic
// conjugate of r^{+-1} by the inverse of the complement.
// ---------------------------------------------------------------------------

namespace detail {

using Letters = std::vector<SurfaceWord::Letter>;

inline Letters free_reduce(const Letters& in) {
  Letters out;
  out.reserve(in.size());
  for (const auto& l : in) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline Letters invert(const Letters& in) {
  Letters out(in.rbegin(), in.rend());
  for (auto& l : out) l.sign = -l.sign;
  return out;
}

inline int letter_code(const SurfaceWord::Letter& l) {
  return 2 * l.gen + (l.sign < 0 ? 1 : 0);
}

struct DehnTable {
  int genus = 0;
  std::size_t full = 0;  // relator length 4g
  std::size_t half = 0;  // 2g
  std::vector<Letters> rotations;  // all cyclic conjugates of r and r^{-1}
};

inline Letters surface_relator(int genus) {
  Letters r;
  for (int i = 0; i < genus; ++i) {
    const int a = 2 * i, b = 2 * i + 1;
    r.push_back({a, +1});
    r.push_back({b, +1});
    r.push_back({a, -1});
    r.push_back({b, -1});
  }
  return r;
}

inline const DehnTable& dehn_table(int genus) {
  static std::mutex mu;
  static std::map<int, DehnTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(genus);
  if (it != cache.end()) return it->second;

  DehnTable t;
  t.genus = genus;
  t.full = static_cast<std::size_t>(4 * genus);
  t.half = static_cast<std::size_t>(2 * genus);
  const Letters r = surface_relator(genus);
  const Letters ri = invert(r);
  for (const Letters* base : {&r, &ri}) {
    for (std::size_t s = 0; s < t.full; ++s) {
      Letters rot;
      rot.reserve(t.full);
      for (std::size_t j = 0; j < t.full; ++j) rot.push_back((*base)[(s + j) % t.full]);
      t.rotations.push_back(std::move(rot));
    }
  }
  return cache.emplace(genus, std::move(t)).first->second;
}

// One linear Dehn step: find a subword longer than half a relator conjugate
// and replace it by the shorter complement.  Returns false if none exists.
inline bool dehn_step(Letters& w, const DehnTable& t) {
  const std::size_t n = w.size();
  if (n <= t.half) return false;
  for (std::size_t i = 0; i + t.half < n; ++i) {
    for (const Letters& rot : t.rotations) {
      std::size_t len = 0;
      const std::size_t cap = std::min(n - i, t.full);
      while (len < cap && w[i + len] == rot[len]) ++len;
      if (len > t.half) {
        Letters tail(rot.begin() + static_cast<std::ptrdiff_t>(len), rot.end());
        Letters replaced;
        replaced.reserve(n);
        replaced.insert(replaced.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        const Letters inv_tail = invert(tail);
        replaced.insert(replaced.end(), inv_tail.begin(), inv_tail.end());
        replaced.insert(replaced.end(), w.begin() + static_cast<std::ptrdiff_t>(i + len), w.end());
        w = free_reduce(replaced);
        return true;
      }
    }
  }
  return false;
}

inline Letters dehn_reduce(Letters w, const DehnTable& t) {
  w = free_reduce(w);
  while (dehn_step(w, t)) {
  }
  return w;
}

// Cyclic counterpart: free reduction across the wrap plus Dehn steps on
// cyclic windows.  Also chases exact-half replacements that happen to shorten
// the word after the seam reductions, so the result has minimal cyclic length.
inline Letters cyclic_reduce_full(Letters w, const DehnTable& t);

inline Letters cyclic_free_reduce(Letters w) {
  w = free_reduce(w);
  while (w.size() >= 2 && w.front().gen == w.back().gen && w.front().sign == -w.back().sign) {
    w.erase(w.begin());
    w.pop_back();
    w = free_reduce(w);
  }
  return w;
}

inline Letters rotate(const Letters& w, std::size_t s) {
  Letters out;
  out.reserve(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) out.push_back(w[(s + j) % w.size()]);
  return out;
}

// Replace the cyclic window of length `len` starting at `i` (matching rotation
// `rot`) by the inverse complement, returning a linear word.
inline Letters cyclic_replace(const Letters& w, const DehnTable& t, std::size_t i,
                              const Letters& rot, std::size_t len) {
  Letters lin = rotate(w, i);
  Letters tail(rot.begin() + static_cast<std::ptrdiff_t>(len), rot.end());
  Letters out = invert(tail);
  out.insert(out.end(), lin.begin() + static_cast<std::ptrdiff_t>(len), lin.end());
  return out;
}

inline Letters cyclic_reduce_full(Letters w, const DehnTable& t) {
  w = cyclic_free_reduce(std::move(w));
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t n = w.size();
    if (n == 0) break;
    for (std::size_t i = 0; i < n && !changed; ++i) {
      for (const Letters& rot : t.rotations) {
        std::size_t len = 0;
        const std::size_t cap = std::min(n, t.full);
        while (len < cap && w[(i + len) % n] == rot[len]) ++len;
        if (len > t.half) {
          w = cyclic_free_reduce(cyclic_replace(w, t, i, rot, len));
          changed = true;
          break;
        }
        if (len == t.half && n >= t.half) {
          // Exact-half chunks preserve length unless the seams cancel; take
          // the replacement only when it strictly shortens.
          Letters cand = cyclic_free_reduce(cyclic_replace(w, t, i, rot, len));
          if (cand.size() < n) {
            w = std::move(cand);
            changed = true;
            break;
          }
        }
      }
    }
  }
  return w;
}

inline std::vector<int> codes_of(const Letters& w) {
  std::vector<int> c;
  c.reserve(w.size());
  for (const auto& l : w) c.push_back(letter_code(l));
  return c;
}

/// Lexicographically least rotation, as a code string (cyclic canonical form).
inline std::vector<int> least_rotation(const Letters& w) {
  const std::vector<int> c = codes_of(w);
  const std::size_t n = c.size();
  if (n == 0) return {};
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      const int x = c[(s + j) % n], y = c[(best + j) % n];
      if (x != y) {
        if (x < y) best = s;
        break;
      }
    }
  }
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.push_back(c[(best + j) % n]);
  return out;
}

// Closure of a fully reduced cyclic word under exact-half-chunk swaps, keyed
// by least rotation.  Conjugate fully reduced words of the same length are
// connected by such swaps and rotations, so the least element is a conjugacy
// normal form.
inline std::vector<int> half_chunk_normal_form(const Letters& start, const DehnTable& t) {
  std::vector<int> best = least_rotation(start);
  std::set<std::vector<int>> seen{best};
  std::vector<Letters> queue{start};
  while (!queue.empty()) {
    Letters cur = std::move(queue.back());
    queue.pop_back();
    const std::size_t n = cur.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (const Letters& rot : t.rotations) {
        std::size_t len = 0;
        const std::size_t cap = std::min(n, t.half);
        while (len < cap && cur[(i + len) % n] == rot[len]) ++len;
        if (len != t.half) continue;
        Letters cand = cyclic_free_reduce(cyclic_replace(cur, t, i, rot, len));
        if (cand.size() != n) continue;  // shortening handled by cyclic_reduce_full
        std::vector<int> key = least_rotation(cand);
        if (seen.insert(key).second) {
          if (key < best) best = key;
          queue.push_back(std::move(cand));
        }
      }
    }
  }
  return best;
}

}  // namespace detail

/// Exact word problem.  Genus 1 is abelian; genus >= 2 uses Dehn's algorithm.
inline bool is_trivial(const SurfaceWord& w) {
  if (w.empty()) return true;
  if (w.genus() == 1) return abelianize(w).is_zero();
  const auto& t = detail::dehn_table(w.genus());
  return detail::dehn_reduce(w.letters(), t).empty();
}

/// Conjugacy in the surface group.  Yes/No are certificates; Unknown is only
/// returned when the cyclically reduced words exceed `cyclic_bound`.
inline Tri conjugate_in_surface_group(const SurfaceWord& u, const SurfaceWord& v,
                                      std::size_t cyclic_bound = 64) {
  if (u.genus() != v.genus()) throw DimensionError("genus mismatch between words");
  if (u == v) return Tri::Yes;
  if (abelianize(u) != abelianize(v)) return Tri::No;
  if (u.genus() == 1) return Tri::Yes;  // pi_1(T^2) is abelian

  const auto& t = detail::dehn_table(u.genus());
  const detail::Letters cu = detail::cyclic_reduce_full(u.letters(), t);
  const detail::Letters cv = detail::cyclic_reduce_full(v.letters(), t);
  if (cu.size() != cv.size()) return Tri::No;
  if (cu.empty()) return Tri::Yes;
  if (cu.size() > cyclic_bound) return Tri::Unknown;
  return detail::half_chunk_normal_form(cu, t) == detail::half_chunk_normal_form(cv, t)
             ? Tri::Yes
             : Tri::No;
}

}  // namespace vtrans
