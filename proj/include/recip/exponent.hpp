#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace recip {

using Exponent = std::int64_t;

/// Variables are listed lambda_1..lambda_r followed by x_1..x_n.
struct VariableSpace {
  int r = 0;
  int n = 1;

  int size() const { return r + n; }
  int lambda(int i) const { return i; }  // 0-based lambda index -> slot
  int x(int i) const { return r + i; }   // 0-based x index -> slot
  bool is_lambda(int slot) const { return slot < r; }
  std::string name(int slot) const;

  friend bool operator==(const VariableSpace&, const VariableSpace&) = default;
};

void check_space(const VariableSpace& space);

/// Integer exponent tuple of a Laurent monomial. Addition is the group law.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t size) : e_(size, 0) {}
  ExponentVector(std::initializer_list<Exponent> init) : e_(init) {}
  explicit ExponentVector(std::vector<Exponent> entries) : e_(std::move(entries)) {}

  static ExponentVector unit(std::size_t size, std::size_t slot, Exponent power = 1) {
    ExponentVector v(size);
    v.e_[slot] = power;
    return v;
  }

  std::size_t size() const { return e_.size(); }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  Exponent& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Exponent>& entries() const { return e_; }

  bool is_zero() const;
  Exponent total_degree(std::size_t from = 0) const;
  /// Index of the highest nonzero coordinate, or -1 for the zero vector.
  int leading_slot() const;

  ExponentVector& operator+=(const ExponentVector& o);
  ExponentVector& operator-=(const ExponentVector& o);
  ExponentVector& operator*=(Exponent k);
  ExponentVector operator-() const;
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator*(ExponentVector a, Exponent k) { return a *= k; }
  friend ExponentVector operator*(Exponent k, ExponentVector a) { return a *= k; }

  // Storage-order comparison; used for canonical sorting only, not a monomial order.
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Exponent> e_;
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

/// x1^2*l1^-1 style rendering; "1" for the zero vector.
std::string monomial_string(const ExponentVector& v, const VariableSpace& space);

}  // namespace recip
