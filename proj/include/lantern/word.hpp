#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lantern {

using Integer = boost::multiprecision::cpp_int;

// Right Dehn twists on the four-holed sphere. a..d are parallel to the
// boundary components C1..C4 and are central; e..h are interior curves.
enum class Generator : unsigned char { a, b, c, d, e, f, g, h };

inline constexpr std::array<Generator, 8> kAllGenerators = {
    Generator::a, Generator::b, Generator::c, Generator::d,
    Generator::e, Generator::f, Generator::g, Generator::h};

constexpr bool is_boundary(Generator g) { return g <= Generator::d; }
constexpr std::size_t index_of(Generator g) { return static_cast<std::size_t>(g); }
constexpr char letter_of(Generator g) { return static_cast<char>('a' + index_of(g)); }
std::optional<Generator> generator_from_letter(char c);

struct Term {
  Generator generator;
  Integer exponent;

  friend bool operator==(const Term&, const Term&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A word in the generators, read left to right in the order the twists are
// applied. Always freely reduced: no zero exponents, no adjacent repeats, and
// the central letters a,b,c,d collected at the front in alphabetical order.
class Word {
 public:
  Word() = default;

  // Normalizes an arbitrary term list (see free_reduce).
  static Word from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Word inverse() const;
  friend Word operator*(const Word& lhs, const Word& rhs);
  Word power(long n) const;

  // Sum of |exponent| over all terms.
  Integer length() const;
  bool is_positive() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Term> terms_;
};

Word single(Generator g, Integer exponent = 1);

Word parse(std::string_view text);
std::string format(const Word& w);

// Merges equal neighbours, drops zero exponents and commutes a,b,c,d to the
// front, repeating until nothing changes.
Word free_reduce(const std::vector<Term>& terms);

// Exponent sums modulo the lattice spanned by g+e+f-a-b-c-d and
// h+e+f-a-b-c-d. Stored as the unique representative with zero g and h
// components.
class ExponentVector {
 public:
  ExponentVector() = default;
  static ExponentVector from_sums(const std::array<Integer, 8>& sums);

  const std::array<Integer, 8>& components() const { return components_; }
  bool is_zero() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::array<Integer, 8> components_{};
};

ExponentVector exponent_class(const Word& w);

}  // namespace lantern
