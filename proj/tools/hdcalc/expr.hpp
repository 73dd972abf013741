#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hdiff/diffring.hpp"
#include "hdiff/rational.hpp"

namespace hdcalc {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Expression tree. Indices are 1-based as written.
struct Node {
  enum class Kind { Num, H, X, D, Neg, Add, Sub, Mul, Div, Pow, Shift, Call };

  Kind kind = Kind::Num;
  hdiff::Integer value;  // Num
  int index = 0;         // H, X, D; first argument of Call
  int exponent = 0;      // Pow
  // Shift: (sign, j) pairs, j = 0 meaning eps = eps_1 + ... + eps_n
  std::vector<std::pair<int, int>> shift;
  std::string name;  // Call: H, e, chi, Delta
  std::vector<NodePtr> kids;

  friend bool operator==(const Node& a, const Node& b);
};

bool same(const NodePtr& a, const NodePtr& b);

NodePtr num(hdiff::Integer v);
NodePtr var(Node::Kind k, int index);
NodePtr unary(Node::Kind k, NodePtr a);
NodePtr binary(Node::Kind k, NodePtr a, NodePtr b);
NodePtr power(NodePtr a, int e);
NodePtr shifted(NodePtr a, std::vector<std::pair<int, int>> s);
NodePtr call(std::string name, int index, NodePtr arg = nullptr);

// Throws hdiff::SyntaxError.
NodePtr parse(const std::string& text);
std::string print(const NodePtr& e);

// Largest index mentioned anywhere, 0 if none.
int max_index(const NodePtr& e);
bool has_generators(const NodePtr& e);

hdiff::NormalElement evaluate(const NodePtr& e, const hdiff::DiffRing& ring);
// For expressions free of x and d.
hdiff::RatFun evaluate_scalar(const NodePtr& e, int n);

}  // namespace hdcalc
