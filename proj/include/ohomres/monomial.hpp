#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace ohomres {

/// A monomial x1^e1 * ... * xm^em in m variables, stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<int> exponents);
  Monomial(std::initializer_list<int> exponents) : Monomial(std::vector<int>(exponents)) {}

  /// The monomial x_{v1} * x_{v2} * ... in m variables (repeats allowed).
  static Monomial product_of(std::size_t num_vars, std::initializer_list<int> variables);

  std::size_t num_vars() const { return exps_.size(); }
  int degree() const;
  /// Exponent of x_var, var is 1-based.
  int exponent(int var) const { return exps_[static_cast<std::size_t>(var - 1)]; }
  void multiply_by(int var, int power = 1) { exps_[static_cast<std::size_t>(var - 1)] += power; }
  const std::vector<int>& exponents() const { return exps_; }

  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Lexicographic on exponent vectors; only a container order, not a term order.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<int> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
/// a / b; throws std::invalid_argument when b does not divide a.
Monomial quotient(const Monomial& a, const Monomial& b);

/// Reverse lexicographic comparison within one degree: a > b iff the variable of
/// largest index appearing in a/b has a negative exponent.
/// Throws std::invalid_argument when the total degrees differ.
std::strong_ordering revlex_cmp(const Monomial& a, const Monomial& b);

/// Renders as `x1*x2^2*x4`; the unit monomial renders as `1`.
std::string to_string(const Monomial& m);

}  // namespace ohomres

template <>
struct std::hash<ohomres::Monomial> {
  std::size_t operator()(const ohomres::Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
    return h;
  }
};
