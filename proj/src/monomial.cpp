#include "ohomres/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ohomres {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (std::any_of(exps_.begin(), exps_.end(), [](int e) { return e < 0; }))
    throw std::invalid_argument("monomial exponents must be nonnegative");
}

Monomial Monomial::product_of(std::size_t num_vars, std::initializer_list<int> variables) {
  Monomial out(num_vars);
  for (int v : variables) {
    if (v < 1 || static_cast<std::size_t>(v) > num_vars) throw std::invalid_argument("variable index out of range");
    out.multiply_by(v);
  }
  return out;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::divides(const Monomial& other) const {
  if (other.exps_.size() != exps_.size()) throw std::invalid_argument("monomials live in different rings");
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("monomials live in different rings");
  std::vector<int> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponents()[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::invalid_argument(to_string(b) + " does not divide " + to_string(a));
  std::vector<int> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponents()[i] - b.exponents()[i];
  return Monomial(std::move(e));
}

std::strong_ordering revlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("monomials live in different rings");
  if (a.degree() != b.degree())
    throw std::invalid_argument("revlex comparison needs equal degrees: " + to_string(a) + " vs " + to_string(b));
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    int ea = a.exponents()[i];
    int eb = b.exponents()[i];
    if (ea != eb) return ea < eb ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    int e = m.exponents()[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace ohomres
