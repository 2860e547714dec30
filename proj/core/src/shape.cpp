#include "wirekit/shape.hpp"

#include <charconv>
#include <sstream>

#include "wirekit/plug_map.hpp"

namespace wirekit {

Index Index::prefixed(Step s) const {
  Index out;
  out.steps.reserve(steps.size() + 1);
  out.steps.push_back(s);
  out.steps.insert(out.steps.end(), steps.begin(), steps.end());
  return out;
}

std::string Index::to_string() const {
  if (steps.empty()) return "~";
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out.push_back('/');
    switch (steps[i].kind) {
      case Step::Kind::kLeft: out.push_back('L'); break;
      case Step::Kind::kRight: out.push_back('R'); break;
      case Step::Kind::kAt: out += std::to_string(steps[i].at); break;
    }
  }
  return out;
}

Index Index::parse(std::string_view text) {
  Index out;
  if (text == "~") return out;
  if (text.empty()) throw InvalidIndex("empty index text");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t slash = text.find('/', pos);
    if (slash == std::string_view::npos) slash = text.size();
    std::string_view tok = text.substr(pos, slash - pos);
    if (tok == "L") {
      out.steps.push_back(Step::left());
    } else if (tok == "R") {
      out.steps.push_back(Step::right());
    } else {
      std::size_t v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size()) {
        throw InvalidIndex("bad index step '" + std::string(tok) + "'");
      }
      out.steps.push_back(Step::nth(v));
    }
    pos = slash + 1;
  }
  return out;
}

Shape Shape::unit(std::string tag) {
  if (tag.empty()) throw Error("unit tag must be non-empty");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kUnit;
  n->tag = std::move(tag);
  n->leaves = 1;
  return Shape(std::move(n));
}

Shape Shape::sum(Shape left, Shape right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSum;
  n->leaves = left.leaf_count() + right.leaf_count();
  n->children = {std::move(left), std::move(right)};
  return Shape(std::move(n));
}

Shape Shape::sumn(Shape base, std::size_t count) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSumN;
  n->count = count;
  n->leaves = base.leaf_count() * count;
  n->children = {std::move(base)};
  return Shape(std::move(n));
}

const std::string& Shape::tag() const {
  if (kind() != Kind::kUnit) throw Error("tag() on non-unit shape");
  return node_->tag;
}

const Shape& Shape::left() const {
  if (kind() != Kind::kSum) throw NotASum("left() on " + to_string());
  return node_->children[0];
}

const Shape& Shape::right() const {
  if (kind() != Kind::kSum) throw NotASum("right() on " + to_string());
  return node_->children[1];
}

const Shape& Shape::base() const {
  if (kind() != Kind::kSumN) throw Error("base() on non-sumn shape");
  return node_->children[0];
}

std::size_t Shape::count() const {
  if (kind() != Kind::kSumN) throw Error("count() on non-sumn shape");
  return node_->count;
}

bool operator==(const Shape& a, const Shape& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.leaf_count() != b.leaf_count()) return false;
  switch (a.kind()) {
    case Shape::Kind::kUnit: return a.node_->tag == b.node_->tag;
    case Shape::Kind::kSum:
      return a.left() == b.left() && a.right() == b.right();
    case Shape::Kind::kSumN:
      return a.count() == b.count() && a.base() == b.base();
  }
  return false;
}

std::string Shape::to_string() const {
  switch (kind()) {
    case Kind::kUnit: return node_->tag;
    case Kind::kSum:
      return "(" + left().to_string() + " + " + right().to_string() + ")";
    case Kind::kSumN:
      return "sumn(" + base().to_string() + ", " + std::to_string(count()) + ")";
  }
  return {};
}

std::size_t leaf_count(const Shape& s) { return s.leaf_count(); }

namespace {

void collect(const Shape& s, std::vector<Step>& prefix, std::vector<Index>& out) {
  switch (s.kind()) {
    case Shape::Kind::kUnit: out.push_back(Index{prefix}); return;
    case Shape::Kind::kSum:
      prefix.push_back(Step::left());
      collect(s.left(), prefix, out);
      prefix.back() = Step::right();
      collect(s.right(), prefix, out);
      prefix.pop_back();
      return;
    case Shape::Kind::kSumN:
      for (std::size_t i = 0; i < s.count(); ++i) {
        prefix.push_back(Step::nth(i));
        collect(s.base(), prefix, out);
        prefix.pop_back();
      }
      return;
  }
}

void collect_tags(const Shape& s, std::vector<std::string>& out) {
  switch (s.kind()) {
    case Shape::Kind::kUnit: out.push_back(s.tag()); return;
    case Shape::Kind::kSum:
      collect_tags(s.left(), out);
      collect_tags(s.right(), out);
      return;
    case Shape::Kind::kSumN:
      for (std::size_t i = 0; i < s.count(); ++i) collect_tags(s.base(), out);
      return;
  }
}

std::optional<Index> diff(const Shape& a, const Shape& b) {
  if (a.kind() != b.kind()) return Index{};
  switch (a.kind()) {
    case Shape::Kind::kUnit:
      if (a.tag() != b.tag()) return Index{};
      return std::nullopt;
    case Shape::Kind::kSum:
      if (auto d = diff(a.left(), b.left())) return d->prefixed(Step::left());
      if (auto d = diff(a.right(), b.right())) return d->prefixed(Step::right());
      return std::nullopt;
    case Shape::Kind::kSumN: {
      std::size_t common = std::min(a.count(), b.count());
      for (std::size_t i = 0; i < common; ++i) {
        if (auto d = diff(a.base(), b.base())) return d->prefixed(Step::nth(i));
      }
      if (a.count() != b.count()) return Index{{Step::nth(common)}};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Index> enumerate_indices(const Shape& s) {
  std::vector<Index> out;
  out.reserve(s.leaf_count());
  std::vector<Step> prefix;
  collect(s, prefix, out);
  return out;
}

std::size_t flatten(const Shape& s, const Index& index) {
  const Shape* cur = &s;
  std::size_t pos = 0;
  for (const Step& step : index.steps) {
    switch (cur->kind()) {
      case Shape::Kind::kUnit:
        throw InvalidIndex("index " + index.to_string() + " runs past a leaf of " +
                           s.to_string());
      case Shape::Kind::kSum:
        if (step.kind == Step::Kind::kLeft) {
          cur = &cur->left();
        } else if (step.kind == Step::Kind::kRight) {
          pos += cur->left().leaf_count();
          cur = &cur->right();
        } else {
          throw InvalidIndex("index " + index.to_string() +
                             " uses At under a Sum of " + s.to_string());
        }
        break;
      case Shape::Kind::kSumN:
        if (step.kind != Step::Kind::kAt || step.at >= cur->count()) {
          throw InvalidIndex("index " + index.to_string() +
                             " is not a valid SumN step of " + s.to_string());
        }
        pos += step.at * cur->base().leaf_count();
        cur = &cur->base();
        break;
    }
  }
  if (cur->kind() != Shape::Kind::kUnit) {
    throw InvalidIndex("index " + index.to_string() + " stops before a leaf of " +
                       s.to_string());
  }
  return pos;
}

Index unflatten(const Shape& s, std::size_t position) {
  if (position >= s.leaf_count()) {
    throw InvalidIndex("position " + std::to_string(position) + " out of range for " +
                       s.to_string());
  }
  Index out;
  const Shape* cur = &s;
  while (cur->kind() != Shape::Kind::kUnit) {
    if (cur->kind() == Shape::Kind::kSum) {
      std::size_t nl = cur->left().leaf_count();
      if (position < nl) {
        out.steps.push_back(Step::left());
        cur = &cur->left();
      } else {
        out.steps.push_back(Step::right());
        position -= nl;
        cur = &cur->right();
      }
    } else {
      std::size_t per = cur->base().leaf_count();
      out.steps.push_back(Step::nth(position / per));
      position %= per;
      cur = &cur->base();
    }
  }
  return out;
}

const std::string& leaf_tag(const Shape& s, std::size_t position) {
  if (position >= s.leaf_count()) {
    throw InvalidIndex("position " + std::to_string(position) + " out of range for " +
                       s.to_string());
  }
  const Shape* cur = &s;
  while (cur->kind() != Shape::Kind::kUnit) {
    if (cur->kind() == Shape::Kind::kSum) {
      std::size_t nl = cur->left().leaf_count();
      if (position < nl) {
        cur = &cur->left();
      } else {
        position -= nl;
        cur = &cur->right();
      }
    } else {
      position %= cur->base().leaf_count();
      cur = &cur->base();
    }
  }
  return cur->tag();
}

std::vector<std::string> leaf_tags(const Shape& s) {
  std::vector<std::string> out;
  out.reserve(s.leaf_count());
  collect_tags(s, out);
  return out;
}

std::optional<Index> first_difference(const Shape& a, const Shape& b) {
  return diff(a, b);
}

namespace {

std::string mismatch_message(const std::string& context, const Shape& expected,
                             const Shape& actual) {
  std::ostringstream os;
  os << context << ": expected " << expected.to_string() << ", got "
     << actual.to_string();
  if (auto d = first_difference(expected, actual)) {
    os << " (first difference at " << d->to_string() << ")";
  }
  if (expected.leaf_count() != actual.leaf_count()) {
    os << " [" << expected.leaf_count() << " vs " << actual.leaf_count() << " leaves]";
  }
  return os.str();
}

}  // namespace

ShapeMismatch::ShapeMismatch(const std::string& context, Shape expected, Shape actual)
    : Error(mismatch_message(context, expected, actual)),
      expected_(std::move(expected)),
      actual_(std::move(actual)),
      where_(first_difference(expected_, actual_).value_or(Index{})) {}

PlugMap::PlugMap(Shape input, Shape output, std::vector<std::size_t> sources)
    : input_(std::move(input)), output_(std::move(output)), sources_(std::move(sources)) {
  if (sources_.size() != output_.leaf_count()) {
    throw InvalidMap("plug map covers " + std::to_string(sources_.size()) + " of " +
                     std::to_string(output_.leaf_count()) + " output leaves");
  }
  for (std::size_t o = 0; o < sources_.size(); ++o) {
    if (sources_[o] >= input_.leaf_count()) {
      throw InvalidMap("output leaf " + std::to_string(o) + " reads input leaf " +
                       std::to_string(sources_[o]) + " but input has " +
                       std::to_string(input_.leaf_count()) + " leaves");
    }
  }
}

PlugMap PlugMap::from_indices(Shape input, Shape output,
                              const std::vector<std::pair<Index, Index>>& table) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> sources(output.leaf_count(), kUnset);
  for (const auto& [out_idx, in_idx] : table) {
    std::size_t o = 0;
    std::size_t i = 0;
    try {
      o = flatten(output, out_idx);
      i = flatten(input, in_idx);
    } catch (const InvalidIndex& e) {
      throw InvalidMap(e.what());
    }
    if (sources[o] != kUnset) {
      throw InvalidMap("output leaf " + out_idx.to_string() + " assigned twice");
    }
    sources[o] = i;
  }
  for (std::size_t o = 0; o < sources.size(); ++o) {
    if (sources[o] == kUnset) {
      throw InvalidMap("output leaf " + unflatten(output, o).to_string() +
                       " has no source");
    }
  }
  return PlugMap(std::move(input), std::move(output), std::move(sources));
}

Index PlugMap::source(const Index& output_index) const {
  return unflatten(input_, sources_.at(flatten(output_, output_index)));
}

PlugMap PlugMap::then(const PlugMap& next) const {
  if (!(output_ == next.input_)) {
    throw ShapeMismatch("plug composition", output_, next.input_);
  }
  std::vector<std::size_t> composed;
  composed.reserve(next.sources_.size());
  for (std::size_t mid : next.sources_) composed.push_back(sources_[mid]);
  return PlugMap(input_, next.output_, std::move(composed));
}

}  // namespace wirekit
