#include "ohomres/rank.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace ohomres {

std::size_t SparseMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : columns) total += c.size();
  return total;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, FieldTag field) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
  SparseMatrix out(a.rows, b.cols);
  for (std::size_t j = 0; j < b.cols; ++j) {
    std::map<std::size_t, long long> acc;
    for (const auto& eb : b.columns[j])
      for (const auto& ea : a.columns[eb.row]) acc[ea.row] += ea.value * eb.value;
    for (auto [row, v] : acc) {
      if (field == FieldTag::GF2) v &= 1;
      if (v != 0) out.push(row, j, v);
    }
  }
  return out;
}

bool is_zero(const SparseMatrix& m, FieldTag field) {
  for (const auto& c : m.columns)
    for (const auto& e : c)
      if (field == FieldTag::GF2 ? (e.value & 1) != 0 : e.value != 0) return false;
  return true;
}

namespace {

struct Overflow {};

// 64-bit integer arithmetic that reports overflow instead of wrapping.
struct CheckedInt {
  using value_type = long long;
  static long long mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static long long sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static long long gcd(long long a, long long b) { return std::gcd(a, b); }
  static long long abs(long long a) {
    if (a == std::numeric_limits<long long>::min()) throw Overflow{};
    return a < 0 ? -a : a;
  }
};

struct BigInt {
  using value_type = boost::multiprecision::cpp_int;
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type gcd(const value_type& a, const value_type& b) { return boost::multiprecision::gcd(a, b); }
  static value_type abs(const value_type& a) { return a < 0 ? value_type(-a) : a; }
};

template <class Arith>
std::size_t fraction_free_rank(const SparseMatrix& m) {
  using T = typename Arith::value_type;
  using Column = std::vector<std::pair<std::size_t, T>>;
  std::vector<Column> reduced;
  reduced.reserve(m.cols);
  std::vector<std::optional<std::size_t>> owner(m.rows);
  std::size_t rank = 0;
  Column merged;
  for (std::size_t j = 0; j < m.cols; ++j) {
    Column col;
    col.reserve(m.columns[j].size());
    for (const auto& e : m.columns[j])
      if (e.value != 0) col.emplace_back(e.row, T(e.value));
    while (!col.empty() && owner[col.back().first]) {
      const Column& piv = reduced[*owner[col.back().first]];
      const T a = piv.back().second;
      const T b = col.back().second;
      // col <- a*col - b*piv, which cancels the shared lowest entry
      merged.clear();
      std::size_t p = 0;
      std::size_t q = 0;
      while (p < col.size() || q < piv.size()) {
        if (q == piv.size() || (p < col.size() && col[p].first < piv[q].first)) {
          merged.emplace_back(col[p].first, Arith::mul(a, col[p].second));
          ++p;
        } else if (p == col.size() || piv[q].first < col[p].first) {
          merged.emplace_back(piv[q].first, Arith::sub(T(0), Arith::mul(b, piv[q].second)));
          ++q;
        } else {
          T v = Arith::sub(Arith::mul(a, col[p].second), Arith::mul(b, piv[q].second));
          if (v != 0) merged.emplace_back(col[p].first, v);
          ++p;
          ++q;
        }
      }
      T content(0);
      for (const auto& [r, v] : merged) content = Arith::gcd(content, Arith::abs(v));
      if (content > 1)
        for (auto& [r, v] : merged) v /= content;
      col.swap(merged);
    }
    if (!col.empty()) {
      owner[col.back().first] = reduced.size();
      ++rank;
    }
    reduced.push_back(std::move(col));
  }
  return rank;
}

}  // namespace

std::size_t rank_rational(const SparseMatrix& m) {
  try {
    return fraction_free_rank<CheckedInt>(m);
  } catch (const Overflow&) {
    return fraction_free_rank<BigInt>(m);
  }
}

std::size_t rank_gf2(const SparseMatrix& m) {
  std::vector<std::vector<std::size_t>> reduced;
  reduced.reserve(m.cols);
  std::vector<std::optional<std::size_t>> owner(m.rows);
  std::size_t rank = 0;
  std::vector<std::size_t> merged;
  for (std::size_t j = 0; j < m.cols; ++j) {
    std::vector<std::size_t> col;
    for (const auto& e : m.columns[j])
      if ((e.value & 1) != 0) col.push_back(e.row);
    while (!col.empty() && owner[col.back()]) {
      const auto& piv = reduced[*owner[col.back()]];
      merged.clear();
      std::set_symmetric_difference(col.begin(), col.end(), piv.begin(), piv.end(), std::back_inserter(merged));
      col.swap(merged);
    }
    if (!col.empty()) {
      owner[col.back()] = reduced.size();
      ++rank;
    }
    reduced.push_back(std::move(col));
  }
  return rank;
}

std::size_t rank(const SparseMatrix& m, FieldTag field) {
  return field == FieldTag::GF2 ? rank_gf2(m) : rank_rational(m);
}

}  // namespace ohomres
