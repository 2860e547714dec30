#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wirekit/shape.hpp"

namespace wirekit {

// Total map from every leaf of `output` to a leaf of `input`, stored by
// canonical position. Fan-out is allowed; an output can only ever have one
// source.
class PlugMap {
 public:
  // Throws InvalidMap if `sources` is not total on `output` or refers to a
  // position outside `input`.
  PlugMap(Shape input, Shape output, std::vector<std::size_t> sources);

  // Builds from an explicit output-index -> input-index table; every output
  // leaf must appear exactly once.
  static PlugMap from_indices(Shape input, Shape output,
                              const std::vector<std::pair<Index, Index>>& table);

  const Shape& input() const { return input_; }
  const Shape& output() const { return output_; }
  const std::vector<std::size_t>& sources() const { return sources_; }
  std::size_t source(std::size_t output_position) const {
    return sources_.at(output_position);
  }
  Index source(const Index& output_index) const;

  // Map of "apply this plug, then `next`": output leaves of `next` read from
  // input leaves of this plug.
  PlugMap then(const PlugMap& next) const;

  friend bool operator==(const PlugMap&, const PlugMap&) = default;

 private:
  Shape input_;
  Shape output_;
  std::vector<std::size_t> sources_;
};

// result[o] = b[f(o)] for every output leaf o.
template <typename T>
Bundle<T> bundle_precompose(const PlugMap& f, const Bundle<T>& b) {
  if (!(b.shape() == f.input())) {
    throw ShapeMismatch("bundle_precompose", f.input(), b.shape());
  }
  std::vector<T> out;
  out.reserve(f.sources().size());
  for (std::size_t src : f.sources()) out.push_back(b.at(src));
  return Bundle<T>(f.output(), std::move(out));
}

}  // namespace wirekit
