#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wirekit/errors.hpp"

namespace wirekit {

// One step of a leaf path: into the left or right side of a Sum, or into
// copy `i` of a SumN.
struct Step {
  enum class Kind { kLeft, kRight, kAt };
  Kind kind = Kind::kLeft;
  std::size_t at = 0;

  static Step left() { return {Kind::kLeft, 0}; }
  static Step right() { return {Kind::kRight, 0}; }
  static Step nth(std::size_t i) { return {Kind::kAt, i}; }

  friend bool operator==(const Step&, const Step&) = default;
};

// Path from the root of a shape down to one of its Unit leaves.
struct Index {
  std::vector<Step> steps;

  Index prefixed(Step s) const;
  // Renders as `L/R/3`; the empty path renders as `~`.
  std::string to_string() const;
  static Index parse(std::string_view text);

  friend bool operator==(const Index&, const Index&) = default;
};

// A circuit interface: a tree of tagged unit leaves. Immutable value type;
// copies share structure.
class Shape {
 public:
  enum class Kind { kUnit, kSum, kSumN };

  static Shape unit(std::string tag);
  static Shape sum(Shape left, Shape right);
  static Shape sumn(Shape base, std::size_t count);

  Kind kind() const;
  bool is_sum() const { return kind() == Kind::kSum; }
  const std::string& tag() const;
  const Shape& left() const;
  const Shape& right() const;
  const Shape& base() const;
  std::size_t count() const;
  std::size_t leaf_count() const;

  // Structural and tag-sensitive.
  friend bool operator==(const Shape& a, const Shape& b);

  std::string to_string() const;

 private:
  struct Node;
  explicit Shape(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Shape::Node {
  Kind kind;
  std::string tag;
  std::vector<Shape> children;  // Sum: {left, right}; SumN: {base}
  std::size_t count = 0;
  std::size_t leaves = 0;
};

inline Shape::Kind Shape::kind() const { return node_->kind; }
inline std::size_t Shape::leaf_count() const { return node_->leaves; }

std::size_t leaf_count(const Shape& s);

// All leaf indices in canonical left-to-right order.
std::vector<Index> enumerate_indices(const Shape& s);

// Position of `index` in canonical order; throws InvalidIndex.
std::size_t flatten(const Shape& s, const Index& index);
Index unflatten(const Shape& s, std::size_t position);

// Tag of the Unit leaf at a canonical position.
const std::string& leaf_tag(const Shape& s, std::size_t position);
std::vector<std::string> leaf_tags(const Shape& s);

// First path at which two shapes disagree, or nullopt when equal.
std::optional<Index> first_difference(const Shape& a, const Shape& b);

class ShapeMismatch : public Error {
 public:
  ShapeMismatch(const std::string& context, Shape expected, Shape actual);

  const Shape& expected() const { return expected_; }
  const Shape& actual() const { return actual_; }
  const Index& where() const { return where_; }

 private:
  Shape expected_;
  Shape actual_;
  Index where_;
};

// Total assignment of a value to every leaf of a shape, stored in canonical
// leaf order.
template <typename T>
class Bundle {
 public:
  Bundle(Shape shape, std::vector<T> values)
      : shape_(std::move(shape)), values_(std::move(values)) {
    if (values_.size() != shape_.leaf_count()) {
      throw LengthMismatch("bundle over " + shape_.to_string() + " needs " +
                           std::to_string(shape_.leaf_count()) +
                           " values, got " + std::to_string(values_.size()));
    }
  }
  static Bundle filled(Shape shape, const T& value = T{}) {
    const std::size_t n = shape.leaf_count();
    return Bundle(std::move(shape), std::vector<T>(n, value));
  }

  const Shape& shape() const { return shape_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }
  std::vector<T>& values() { return values_; }

  using const_reference = typename std::vector<T>::const_reference;

  const_reference at(std::size_t position) const { return values_.at(position); }
  void set(std::size_t position, T v) { values_.at(position) = std::move(v); }
  const_reference operator[](const Index& i) const { return values_[flatten(shape_, i)]; }

  friend bool operator==(const Bundle&, const Bundle&) = default;

 private:
  Shape shape_;
  std::vector<T> values_;
};

using BitTrace = std::vector<bool>;
using BoolBundle = Bundle<bool>;
using TraceBundle = Bundle<BitTrace>;

template <typename T>
Bundle<T> bundle_left(const Bundle<T>& b) {
  if (!b.shape().is_sum()) {
    throw NotASum("bundle_left on " + b.shape().to_string());
  }
  const Shape& l = b.shape().left();
  return Bundle<T>(l, std::vector<T>(b.values().begin(),
                                     b.values().begin() + l.leaf_count()));
}

template <typename T>
Bundle<T> bundle_right(const Bundle<T>& b) {
  if (!b.shape().is_sum()) {
    throw NotASum("bundle_right on " + b.shape().to_string());
  }
  const Shape& l = b.shape().left();
  return Bundle<T>(b.shape().right(),
                   std::vector<T>(b.values().begin() + l.leaf_count(),
                                  b.values().end()));
}

template <typename T>
Bundle<T> bundle_append(const Bundle<T>& x, const Bundle<T>& y) {
  std::vector<T> v = x.values();
  v.insert(v.end(), y.values().begin(), y.values().end());
  return Bundle<T>(Shape::sum(x.shape(), y.shape()), std::move(v));
}

}  // namespace wirekit
