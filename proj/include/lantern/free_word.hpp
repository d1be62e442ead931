#pragma once

#include <cstdlib>
#include <vector>

namespace lantern {

// Letters of the free group on x1,x2,x3, where x_i records one crossing of
// the cut arc delta_i. Letter +i / -i.
using Letter = int;
using FreeWord = std::vector<Letter>;

inline FreeWord inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (Letter& l : out) l = -l;
  return out;
}

// Appends `tail` to `head` with free cancellation at the seam.
inline void append_reduced(FreeWord& head, const FreeWord& tail) {
  for (Letter l : tail) {
    if (!head.empty() && head.back() == -l) {
      head.pop_back();
    } else {
      head.push_back(l);
    }
  }
}

inline FreeWord reduced(const FreeWord& w) {
  FreeWord out;
  append_reduced(out, w);
  return out;
}

inline FreeWord concat(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  append_reduced(out, b);
  return out;
}

inline bool is_reduced(const FreeWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == -w[i - 1]) return false;
  }
  return true;
}

}  // namespace lantern
