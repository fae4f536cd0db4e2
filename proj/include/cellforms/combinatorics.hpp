#ifndef CELLFORMS_COMBINATORICS_HPP
#define CELLFORMS_COMBINATORICS_HPP

// Marked points of M_{0,n}, oriented labelled polygons and the operations on
// them: rotation canonical form, relabelling, reversal, shuffles and chords.

#include "cellforms/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cellforms {

enum class LabelKind : unsigned char { Zero, One, Var, Infinity };

// One marked point. The defaulted ordering is the enumeration order
// 0 < 1 < t1 < ... < t_{n-3} < inf.
class Label {
 public:
  constexpr Label() = default;

  static constexpr Label zero() { return Label(LabelKind::Zero, 0); }
  static constexpr Label one() { return Label(LabelKind::One, 0); }
  static constexpr Label infinity() { return Label(LabelKind::Infinity, 0); }
  static Label var(int index);

  // Dense index in 0..n-1 following the enumeration order.
  static Label from_code(int code, int n);

  constexpr LabelKind kind() const { return kind_; }
  constexpr int index() const { return index_; }
  constexpr bool is_var() const { return kind_ == LabelKind::Var; }
  constexpr bool is_infinity() const { return kind_ == LabelKind::Infinity; }

  int code(int n) const;
  // Position along the standard cell 0 < t1 < ... < t_{n-3} < 1 < inf.
  int cell_position(int n) const;
  bool valid_for(int n) const;

  std::string str() const;

  auto operator<=>(const Label&) const = default;

 private:
  constexpr Label(LabelKind kind, int index) : kind_(kind), index_(index) {}

  LabelKind kind_ = LabelKind::Zero;
  int index_ = 0;
};

// "0", "1", "inf" (or "∞"), "t<i>".
Label parse_label(std::string_view text);

// All n labels in enumeration order.
std::vector<Label> all_labels(int n);
// 0, t1, ..., t_{n-3}, 1: the finite labels in standard-cell order.
std::vector<Label> finite_labels_cell_order(int n);

using Word = std::vector<Label>;

std::string to_string(std::span<const Label> word);

// An oriented n-gon whose sides carry the marked points, stored as the unique
// rotation of its cyclic order that puts infinity last.
class Polygon {
 public:
  Polygon() = default;

  int n() const { return static_cast<int>(order_.size()); }
  const Word& order() const { return order_; }
  const Label& operator[](std::size_t i) const { return order_[i]; }

  // True when 1 immediately follows 0 (a 01-polygon).
  bool is_01() const;

  std::string str() const { return to_string(order_); }

  auto operator<=>(const Polygon&) const = default;

 private:
  friend Polygon canonicalize(std::span<const Label> raw_order);
  explicit Polygon(Word order) : order_(std::move(order)) {}

  Word order_;
};

// Throws MalformedPolygonError unless raw_order is a permutation of the n
// marked points with n >= 4.
Polygon canonicalize(std::span<const Label> raw_order);
Polygon canonicalize(std::initializer_list<Label> raw_order);

// All (n-1)! canonical polygons in lexicographic order.
std::vector<Polygon> enumerate_polygons(int n);

// All order-preserving interleavings; the first letter of `a` leads first.
std::vector<Word> shuffle(std::span<const Label> a, std::span<const Label> b);

// Bijection of the marked points of M_{0,n}.
class Permutation {
 public:
  static Permutation identity(int n);
  // Labels missing from `mapping` are fixed. Throws DomainError unless the
  // result is a bijection.
  static Permutation from_map(int n, const std::map<Label, Label>& mapping);
  static Permutation from_images(int n, std::vector<int> image_codes);

  int n() const { return static_cast<int>(image_.size()); }
  Label operator()(const Label& x) const;
  // (*this)(other(x))
  Permutation compose(const Permutation& other) const;

  bool operator==(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

Polygon act(const Permutation& sigma, const Polygon& p);
Polygon reverse(const Polygon& p);

// Formal Q-linear combination of polygons of one size n.
class PolygonSum {
 public:
  PolygonSum() = default;
  explicit PolygonSum(const Polygon& p, Rational coeff = 1);

  int n() const { return n_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Polygon, Rational>& terms() const { return terms_; }

  void add(const Polygon& p, const Rational& coeff);
  PolygonSum& operator+=(const PolygonSum& other);
  PolygonSum operator*(const Rational& scalar) const;

  bool operator==(const PolygonSum&) const = default;

 private:
  int n_ = 0;
  std::map<Polygon, Rational> terms_;
};

PolygonSum act(const Permutation& sigma, const PolygonSum& s);

// A splitting of the marked points into two complementary arcs, each with at
// least two points. Stored by its canonical side: the smaller one, or on a
// tie the side without infinity.
class Chord {
 public:
  // Either side may be given. Throws DomainError if a side has < 2 points.
  Chord(std::span<const Label> side, int n);

  int n() const { return n_; }
  const std::vector<Label>& side() const { return side_; }
  std::vector<Label> complement() const;
  // The side not containing infinity, in standard-cell order.
  std::vector<Label> finite_side() const;

  std::string str() const { return to_string(side_); }

  auto operator<=>(const Chord&) const = default;

 private:
  int n_ = 0;
  std::vector<Label> side_;
};

std::set<Chord> chords(const Polygon& p);
std::set<Chord> common_chords(const Polygon& p, const Polygon& q);

}  // namespace cellforms

#endif  // CELLFORMS_COMBINATORICS_HPP
