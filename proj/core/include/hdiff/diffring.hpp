#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "hdiff/ratfun.hpp"
#include "hdiff/report.hpp"

namespace hdiff {

// Generator x^{i,copy} or dbar_{i,copy}; indices 0-based.
struct Gen {
  enum class Kind : std::uint8_t { D = 0, X = 1 };
  Kind kind = Kind::X;
  std::uint8_t index = 0;
  std::uint8_t copy = 0;

  static Gen x(int i, int copy = 0) { return {Kind::X, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(copy)}; }
  static Gen d(int i, int copy = 0) { return {Kind::D, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(copy)}; }
  bool is_x() const noexcept { return kind == Kind::X; }
  bool is_d() const noexcept { return kind == Kind::D; }

  friend bool operator==(const Gen&, const Gen&) = default;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

using Word = std::vector<Gen>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Normal order: every dbar before every x; within a species by copy
// ascending, then index descending.
bool in_order(const Gen& a, const Gen& b) noexcept;
bool is_normal(const Word& w) noexcept;
// sum over x^i of eps_i minus sum over dbar_i of eps_i
ShiftVector weight(const Word& w, int n);

// Finite combination of normal words with coefficients on the left.
class NormalElement {
public:
  using Terms = std::map<Word, RatFun>;

  NormalElement() = default;
  NormalElement(RatFun c);  // NOLINT(google-explicit-constructor)
  static NormalElement monomial(Word w, RatFun c = RatFun(1));

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  RatFun coefficient(const Word& w) const;
  void add_term(const Word& w, const RatFun& c);
  int degree() const noexcept;  // -1 for zero

  NormalElement operator-() const;
  NormalElement& operator+=(const NormalElement& o);
  NormalElement& operator-=(const NormalElement& o);
  friend NormalElement operator+(NormalElement a, const NormalElement& b) { return a += b; }
  friend NormalElement operator-(NormalElement a, const NormalElement& b) { return a -= b; }
  // Left multiplication by a coefficient.
  friend NormalElement operator*(const RatFun& f, const NormalElement& e);
  friend bool operator==(const NormalElement&, const NormalElement&) = default;

private:
  Terms terms_;
};

// The rewriting system for n indices, d_copies copies of dbar and x_copies
// copies of x. sigma(i, xcopy, dcopy) is the zero-order term of x^{i,a} dbar_{i,b}.
class Rewriter {
public:
  using Sigma = std::function<RatFun(int i, int xcopy, int dcopy)>;

  Rewriter(int n, int d_copies, int x_copies, Sigma sigma);

  int n() const noexcept { return n_; }
  int d_copies() const noexcept { return nd_; }
  int x_copies() const noexcept { return nx_; }

  NormalElement normal_form(const Word& w);
  // Applies the rule for the out-of-order pair at positions (pos, pos+1).
  NormalElement rewrite_at(const Word& w, std::size_t pos) const;
  NormalElement multiply(const NormalElement& a, const NormalElement& b);
  // Normal form of a combination of arbitrary (not yet ordered) words.
  NormalElement normalize(const std::map<Word, RatFun>& raw);

  // Reduces the overlap at pos and pos+1 both ways; true if they agree.
  bool resolves(const Word& w, NormalElement* first = nullptr, NormalElement* second = nullptr);

  std::size_t cache_size() const;
  void clear_cache();

private:
  int n_;
  int nd_;
  int nx_;
  Sigma sigma_;
  mutable std::mutex mu_;
  std::unordered_map<Word, NormalElement, WordHash> memo_;

  NormalElement rule(const Gen& a, const Gen& b) const;
  NormalElement finish(const Word& prefix, const NormalElement& middle, const Word& suffix);
};

struct RingSpec {
  int n = 1;
  std::vector<RatFun> sigma;  // sigma_1..sigma_n
};

// A factor in a word over generators and coefficients.
using Factor = std::variant<RatFun, Gen>;

class DiffRing {
public:
  explicit DiffRing(RingSpec spec);

  int n() const noexcept { return spec_.n; }
  const RingSpec& spec() const noexcept { return spec_; }
  const RatFun& sigma(int i) const { return spec_.sigma.at(static_cast<std::size_t>(i)); }
  Rewriter& rewriter() const { return *rw_; }

  NormalElement x(int i) const { return NormalElement::monomial({Gen::x(i)}); }
  NormalElement d(int i) const { return NormalElement::monomial({Gen::d(i)}); }

  NormalElement multiply(const NormalElement& a, const NormalElement& b) const;
  NormalElement normal_form(const std::vector<Factor>& word) const;
  NormalElement commutator(const NormalElement& a, const NormalElement& b) const;

private:
  RingSpec spec_;
  std::shared_ptr<Rewriter> rw_;
};

// a and b exponent vectors of dbar_n^{a_n}...dbar_1^{a_1} x^n^{b_n}...x^1^{b_1}.
Word pbw_word(const std::vector<int>& a, const std::vector<int>& b);
void pbw_exponents(const Word& w, int n, std::vector<int>& a, std::vector<int>& b);

// A defining relation: sum of scalar * (product of factors) equal to zero.
struct Relation {
  std::string name;
  std::vector<int> tuple;  // 1-based
  std::vector<std::pair<Rational, std::vector<Factor>>> terms;
};

std::vector<Relation> defining_relations(int n, const std::vector<RatFun>& sigma);

// h_k maps to h_{perm[k]} + offset[k]; generators map to elements of the target.
struct GeneratorAssignment {
  std::vector<NormalElement> x_images;
  std::vector<NormalElement> d_images;
  std::vector<int> h_perm;
  std::vector<int> h_offset;
};

GeneratorAssignment identity_assignment(const DiffRing& ring);
GeneratorAssignment scaling_assignment(const DiffRing& target, const Rational& gamma);
// The Zhelobenko map for the simple reflection s_i (0-based i), images in ring.
GeneratorAssignment zhelobenko_assignment(const DiffRing& ring, int i);
NormalElement apply_assignment(const DiffRing& target, const GeneratorAssignment& m, const std::vector<Factor>& word);
Report check_assignment(const DiffRing& source, const DiffRing& target, const GeneratorAssignment& m);

// h_{ij} Delta_j sigma_i = sigma_i - sigma_j for all i, j.
Report sigma_system_report(const std::vector<RatFun>& sigma);

struct PbwReport {
  Report direct;     // overlap resolution
  Report algebraic;  // finite-difference system
  bool direct_flat() const { return direct.ok(); }
  bool algebraic_flat() const { return algebraic.ok(); }
};

PbwReport verify_pbw(const DiffRing& ring);

// The involutive anti-automorphism fixing h, dbar_i -> phi_i x^i, x^i -> dbar_i phi_i^{-1}.
NormalElement epsilon_antiauto(const DiffRing& ring, const NormalElement& a);

// x'_i = x^i psi'_i commute pairwise.
Report verify_localized_generators(const DiffRing& ring);

}  // namespace hdiff
