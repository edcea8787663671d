#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace rbs {

// Vertex label of a free operad.  Builtin families:
//   'm' (arity >= 2, degree n-2), 'R'/'S' (arity >= 1, degree n-1),
//   'x' (arity >= 1, degree -1), 'y'/'z' (arity >= 1, degree 0).
// Any other letter is a user family with an explicit degree.
struct Generator {
  char family = 'm';
  int arity = 2;
  int degree = 0;

  static Generator m(int n);
  static Generator R(int n);
  static Generator S(int n);
  static Generator x(int n);
  static Generator y(int n);
  static Generator z(int n);
  static Generator builtin(char family, int n);
  static Generator custom(char family, int arity, int degree);

  bool is_builtin() const;
  std::string name() const;  // "m2", "R1", user families "f2^1" when degree != 0

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

bool is_builtin_family(char family);
int builtin_degree(char family, int arity);

// Planar rooted tree stored as a preorder token list.  A token is either a leaf
// or a packed generator; leaves are numbered 1..n left to right.
class TreeMonomial {
 public:
  using Token = std::uint32_t;
  static constexpr Token kLeaf = 0;

  TreeMonomial();  // the trivial tree (one leaf)
  static TreeMonomial corolla(const Generator& g);
  static TreeMonomial from_tokens(std::vector<Token> tokens);  // validates shape
  static TreeMonomial parse(std::string_view text);

  static Token encode(const Generator& g);
  static Generator decode(Token t);

  const std::vector<Token>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool is_leaf_at(std::size_t pos) const { return tokens_[pos] == kLeaf; }
  Generator generator_at(std::size_t pos) const { return decode(tokens_[pos]); }
  bool is_identity() const { return tokens_.size() == 1; }

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  int weight() const { return static_cast<int>(tokens_.size()) - arity_; }

  // One past the last token of the subtree rooted at pos.
  std::size_t subtree_end(std::size_t pos) const;
  // Start positions of the children of the vertex at pos.
  std::vector<std::size_t> children(std::size_t pos) const;
  TreeMonomial subtree(std::size_t pos) const;
  // Vertex labels in planar (preorder) order.
  std::vector<Generator> vertices() const;

  std::string to_string() const;

  friend bool operator==(const TreeMonomial& a, const TreeMonomial& b) { return a.tokens_ == b.tokens_; }
  friend std::strong_ordering operator<=>(const TreeMonomial& a, const TreeMonomial& b) {
    return a.tokens_ <=> b.tokens_;
  }

  std::size_t hash() const;

 private:
  explicit TreeMonomial(std::vector<Token> tokens, int arity, int degree)
      : tokens_(std::move(tokens)), arity_(arity), degree_(degree) {}
  friend struct TreeBuilder;

  std::vector<Token> tokens_;
  int arity_ = 1;
  int degree_ = 0;
};

struct TreeMonomialHash {
  std::size_t operator()(const TreeMonomial& t) const { return t.hash(); }
};

}  // namespace rbs
