#pragma once

#include "qfconv/rational.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace qfconv::hopf {

// Rooted tree in canonical form: children are sorted by their canonical text
// encoding, so structural equality coincides with isomorphism and the
// encoding is a total order.
//
// Text form: "()" is the single node, "(())" the 2-node chain, "(()())" the
// 3-node cherry.
class Tree {
 public:
  Tree() : Tree(std::vector<Tree>{}) {}
  explicit Tree(std::vector<Tree> children);

  static Tree leaf() { return Tree(); }
  static Tree parse(std::string_view text);

  const std::vector<Tree>& children() const { return children_; }
  int size() const { return size_; }
  const std::string& encoding() const { return encoding_; }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.encoding_ == b.encoding_;
  }
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    return a.encoding_ <=> b.encoding_;
  }

 private:
  std::vector<Tree> children_;
  int size_ = 1;
  std::string encoding_;
};

// Commutative product of rooted trees; the empty forest is the unit.
// Trees are kept sorted, so forests compare and hash structurally.
class Forest {
 public:
  Forest() = default;
  explicit Forest(Tree t) : trees_{std::move(t)} { init(); }
  explicit Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
    init();
  }

  // "1" for the unit, otherwise juxtaposed tree encodings.
  static Forest parse(std::string_view text);

  const std::vector<Tree>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  int size() const { return size_; }
  std::string encoding() const;

  friend bool operator==(const Forest& a, const Forest& b) {
    return a.trees_ == b.trees_;
  }
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);

 private:
  std::vector<Tree> trees_;
  int size_ = 0;

  void init();
};

// Multiset union of the two forests.
Forest forest_mul(const Forest& a, const Forest& b);

// Product over vertices of the sizes of the subtrees they root.
BigInt tree_factorial(const Tree& t);

// |Aut|: product over vertices of factorials of identical-child
// multiplicities, recursively.
BigInt tree_automorphisms(const Tree& t);
// Forest version: tree automorphisms times permutations of repeated trees.
BigInt forest_automorphisms(const Forest& f);

// All canonical trees with exactly `nodes` vertices, sorted by encoding.
std::vector<Tree> all_trees(int nodes);
// All canonical forests with at most `max_nodes` total vertices (the unit
// included), sorted by (size, encoding).
std::vector<Forest> all_forests(int max_nodes);

}  // namespace qfconv::hopf
