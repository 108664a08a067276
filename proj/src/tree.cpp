#include "qfconv/tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qfconv::hopf {

Tree::Tree(std::vector<Tree> children) : children_(std::move(children)) {
  std::sort(children_.begin(), children_.end());
  encoding_ = "(";
  for (const Tree& c : children_) {
    size_ += c.size_;
    encoding_ += c.encoding_;
  }
  encoding_ += ")";
}

namespace {

Tree parse_tree(std::string_view text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '(')
    throw std::invalid_argument("tree: expected '('");
  ++pos;
  std::vector<Tree> children;
  while (pos < text.size() && text[pos] == '(')
    children.push_back(parse_tree(text, pos));
  if (pos >= text.size() || text[pos] != ')')
    throw std::invalid_argument("tree: expected ')'");
  ++pos;
  return Tree(std::move(children));
}

}  // namespace

Tree Tree::parse(std::string_view text) {
  std::size_t pos = 0;
  Tree t = parse_tree(text, pos);
  if (pos != text.size())
    throw std::invalid_argument("tree: trailing characters");
  return t;
}

void Forest::init() {
  std::sort(trees_.begin(), trees_.end());
  size_ = 0;
  for (const Tree& t : trees_) size_ += t.size();
}

Forest Forest::parse(std::string_view text) {
  if (text == "1" || text.empty()) return Forest();
  std::vector<Tree> trees;
  std::size_t pos = 0;
  while (pos < text.size()) trees.push_back(parse_tree(text, pos));
  return Forest(std::move(trees));
}

std::string Forest::encoding() const {
  if (trees_.empty()) return "1";
  std::string out;
  for (const Tree& t : trees_) out += t.encoding();
  return out;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  return a.encoding() <=> b.encoding();
}

Forest forest_mul(const Forest& a, const Forest& b) {
  std::vector<Tree> trees = a.trees();
  trees.insert(trees.end(), b.trees().begin(), b.trees().end());
  return Forest(std::move(trees));
}

BigInt tree_factorial(const Tree& t) {
  BigInt f = t.size();
  for (const Tree& c : t.children()) f *= tree_factorial(c);
  return f;
}

BigInt tree_automorphisms(const Tree& t) {
  BigInt a = 1;
  std::size_t i = 0;
  const auto& ch = t.children();
  while (i < ch.size()) {
    std::size_t j = i;
    while (j < ch.size() && ch[j] == ch[i]) ++j;
    a *= factorial(static_cast<unsigned>(j - i));
    for (std::size_t k = i; k < j; ++k) a *= tree_automorphisms(ch[k]);
    i = j;
  }
  return a;
}

BigInt forest_automorphisms(const Forest& f) {
  BigInt a = 1;
  std::size_t i = 0;
  const auto& ts = f.trees();
  while (i < ts.size()) {
    std::size_t j = i;
    while (j < ts.size() && ts[j] == ts[i]) ++j;
    a *= factorial(static_cast<unsigned>(j - i));
    for (std::size_t k = i; k < j; ++k) a *= tree_automorphisms(ts[k]);
    i = j;
  }
  return a;
}

namespace {

// Multisets of trees with total size exactly `total`, drawing each tree from
// the pool at index >= `from` (pool sorted; repetition allowed).
void forests_of_size(const std::vector<Tree>& pool, std::size_t from,
                     int total, std::vector<Tree>& acc,
                     std::vector<Forest>& out) {
  if (total == 0) {
    out.push_back(Forest(acc));
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (pool[i].size() > total) continue;
    acc.push_back(pool[i]);
    forests_of_size(pool, i, total - pool[i].size(), acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Tree> all_trees(int nodes) {
  if (nodes < 1) return {};
  if (nodes == 1) return {Tree::leaf()};
  // A tree on n nodes is a root over a forest on n-1 nodes.
  std::vector<Tree> pool;
  for (int k = 1; k < nodes; ++k) {
    auto smaller = all_trees(k);
    pool.insert(pool.end(), smaller.begin(), smaller.end());
  }
  std::sort(pool.begin(), pool.end());
  std::vector<Forest> bodies;
  std::vector<Tree> acc;
  forests_of_size(pool, 0, nodes - 1, acc, bodies);
  std::vector<Tree> out;
  out.reserve(bodies.size());
  for (const Forest& b : bodies) out.push_back(Tree(b.trees()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Forest> all_forests(int max_nodes) {
  std::vector<Tree> pool;
  for (int k = 1; k <= max_nodes; ++k) {
    auto ts = all_trees(k);
    pool.insert(pool.end(), ts.begin(), ts.end());
  }
  std::sort(pool.begin(), pool.end());
  std::vector<Forest> out;
  std::vector<Tree> acc;
  for (int total = 0; total <= max_nodes; ++total)
    forests_of_size(pool, 0, total, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qfconv::hopf
