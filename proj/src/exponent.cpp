#include "recip/exponent.hpp"

#include "recip/errors.hpp"

#include <cstdlib>

namespace recip {

std::string VariableSpace::name(int slot) const {
  if (slot < r) return "l" + std::to_string(slot + 1);
  return "x" + std::to_string(slot - r + 1);
}

void check_space(const VariableSpace& space) {
  if (space.r < 0 || space.n < 1)
    throw Error(Errc::InvalidInput, "variable space needs r >= 0 and n >= 1");
}

bool ExponentVector::is_zero() const {
  for (Exponent e : e_)
    if (e != 0) return false;
  return true;
}

Exponent ExponentVector::total_degree(std::size_t from) const {
  Exponent sum = 0;
  for (std::size_t i = from; i < e_.size(); ++i) sum += e_[i];
  return sum;
}

int ExponentVector::leading_slot() const {
  for (int i = static_cast<int>(e_.size()) - 1; i >= 0; --i)
    if (e_[i] != 0) return i;
  return -1;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  if (o.e_.size() != e_.size()) throw Error(Errc::LengthMismatch, "exponent vectors differ in length");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
  if (o.e_.size() != e_.size()) throw Error(Errc::LengthMismatch, "exponent vectors differ in length");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

ExponentVector& ExponentVector::operator*=(Exponent k) {
  for (Exponent& e : e_) e *= k;
  return *this;
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector out(*this);
  for (Exponent& e : out.e_) e = -e;
  return out;
}

std::size_t ExponentHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ v.size();
  for (Exponent e : v.entries()) {
    h ^= std::hash<Exponent>{}(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string monomial_string(const ExponentVector& v, const VariableSpace& space) {
  std::string out;
  // x's first, then lambdas, matching how the monomials are usually written.
  auto emit = [&](int slot) {
    Exponent e = v[slot];
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += space.name(slot);
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (int i = 0; i < space.n; ++i) emit(space.x(i));
  for (int i = 0; i < space.r; ++i) emit(space.lambda(i));
  return out.empty() ? "1" : out;
}

}  // namespace recip
