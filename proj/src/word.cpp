#include "lantern/word.hpp"

#include <cctype>
#include <sstream>

namespace lantern {

std::optional<Generator> generator_from_letter(char c) {
  if (c < 'a' || c > 'h') return std::nullopt;
  return static_cast<Generator>(c - 'a');
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

// Merge pass over the interior letters only.
std::vector<Term> merge_adjacent(const std::vector<Term>& interior) {
  std::vector<Term> out;
  out.reserve(interior.size());
  for (const Term& t : interior) {
    if (t.exponent == 0) continue;
    if (!out.empty() && out.back().generator == t.generator) {
      out.back().exponent += t.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace

Word free_reduce(const std::vector<Term>& terms) {
  std::array<Integer, 4> boundary{};
  std::vector<Term> interior;
  for (const Term& t : terms) {
    if (is_boundary(t.generator)) {
      boundary[index_of(t.generator)] += t.exponent;
    } else if (t.exponent != 0) {
      interior.push_back(t);
    }
  }
  // A single stack pass reaches the fixpoint: cancellations only ever expose
  // the top of the stack.
  std::vector<Term> reduced = merge_adjacent(interior);

  std::vector<Term> out;
  for (std::size_t k = 0; k < 4; ++k) {
    if (boundary[k] != 0) out.push_back({static_cast<Generator>(k), boundary[k]});
  }
  out.insert(out.end(), reduced.begin(), reduced.end());
  return Word::from_terms(std::move(out));
}

Word Word::from_terms(std::vector<Term> terms) {
  // Fast path: accept already-normal input, otherwise normalize.
  bool normal = true;
  bool seen_interior = false;
  int last_boundary = -1;
  for (std::size_t i = 0; i < terms.size() && normal; ++i) {
    const Term& t = terms[i];
    if (t.exponent == 0) normal = false;
    if (is_boundary(t.generator)) {
      if (seen_interior || static_cast<int>(index_of(t.generator)) <= last_boundary) normal = false;
      last_boundary = static_cast<int>(index_of(t.generator));
    } else {
      seen_interior = true;
      if (i > 0 && terms[i - 1].generator == t.generator) normal = false;
    }
  }
  if (!normal) return free_reduce(terms);
  Word w;
  w.terms_ = std::move(terms);
  return w;
}

Word Word::inverse() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (is_boundary(t.generator)) out.push_back({t.generator, -t.exponent});
  }
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!is_boundary(it->generator)) out.push_back({it->generator, -it->exponent});
  }
  return Word::from_terms(std::move(out));
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<Term> all = lhs.terms_;
  all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
  return free_reduce(all);
}

Word Word::power(long n) const {
  Word base = n < 0 ? inverse() : *this;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Word result;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Integer Word::length() const {
  Integer total = 0;
  for (const Term& t : terms_) total += abs(t.exponent);
  return total;
}

bool Word::is_positive() const {
  for (const Term& t : terms_) {
    if (t.exponent <= 0) return false;
  }
  return true;
}

Word single(Generator g, Integer exponent) {
  return Word::from_terms({Term{g, std::move(exponent)}});
}

Word parse(std::string_view text) {
  std::vector<Term> terms;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < n) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    char c = text[i];
    if (c == '^') throw ParseError("dangling caret", i);
    auto g = generator_from_letter(c);
    if (!g) throw ParseError(std::string("unknown letter '") + c + "'", i);
    ++i;
    Integer exponent = 1;
    if (i < n && text[i] == '^') {
      std::size_t caret = i++;
      bool negative = false;
      if (i < n && text[i] == '-') {
        negative = true;
        ++i;
      }
      if (i >= n) throw ParseError("dangling caret", caret);
      if (!is_digit(text[i])) throw ParseError("malformed exponent", i);
      std::size_t begin = i;
      while (i < n && is_digit(text[i])) ++i;
      exponent = Integer(std::string(text.substr(begin, i - begin)));
      if (negative) exponent = -exponent;
    }
    terms.push_back({*g, exponent});
  }
  return free_reduce(terms);
}

std::string format(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const Term& t : w.terms()) {
    if (!first) os << ' ';
    first = false;
    os << letter_of(t.generator);
    if (t.exponent != 1) os << '^' << t.exponent;
  }
  return os.str();
}

ExponentVector ExponentVector::from_sums(const std::array<Integer, 8>& sums) {
  // Subtract g*(g+e+f-a-b-c-d) + h*(h+e+f-a-b-c-d).
  const Integer& g = sums[index_of(Generator::g)];
  const Integer& h = sums[index_of(Generator::h)];
  ExponentVector v;
  for (std::size_t k = 0; k < 4; ++k) v.components_[k] = sums[k] + g + h;
  v.components_[index_of(Generator::e)] = sums[index_of(Generator::e)] - g - h;
  v.components_[index_of(Generator::f)] = sums[index_of(Generator::f)] - g - h;
  return v;
}

bool ExponentVector::is_zero() const {
  for (const Integer& x : components_) {
    if (x != 0) return false;
  }
  return true;
}

ExponentVector exponent_class(const Word& w) {
  std::array<Integer, 8> sums{};
  for (const Term& t : w.terms()) sums[index_of(t.generator)] += t.exponent;
  return ExponentVector::from_sums(sums);
}

}  // namespace lantern
