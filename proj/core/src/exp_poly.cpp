#include "bcjq/exp_poly.hpp"

#include <algorithm>

namespace bcjq {

namespace {

const ExpPoly::Coefficient& zero_coefficient() {
  static const ExpPoly::Coefficient kZero;
  return kZero;
}

}  // namespace

ExpPoly ExpPoly::constant(const Coefficient& c) { return periodic(Row{c, c, c}); }

ExpPoly ExpPoly::periodic(const Row& values) {
  ExpPoly p;
  p.rows_.push_back(values);
  p.trim();
  return p;
}

ExpPoly ExpPoly::periodic(const std::array<int, 3>& values) {
  return periodic(Row{Coefficient(values[0]), Coefficient(values[1]), Coefficient(values[2])});
}

ExpPoly ExpPoly::pow2(std::size_t degree, std::uint64_t offset) {
  ExpPoly p;
  p.rows_.resize(degree + 1);
  const Coefficient c(Rational(bcjq::pow2(offset)));
  p.rows_[degree] = Row{c, c, c};
  return p;
}

std::size_t ExpPoly::degree() const { return rows_.empty() ? 0 : rows_.size() - 1; }

const ExpPoly::Coefficient& ExpPoly::coefficient(std::size_t degree, std::size_t residue) const {
  if (degree >= rows_.size()) return zero_coefficient();
  return rows_[degree][residue % 3];
}

ExpPoly::Coefficient ExpPoly::eval(std::uint64_t n) const {
  // Horner in x = 2^n.
  const Rational x(bcjq::pow2(n));
  const std::size_t r = n % 3;
  Coefficient acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc.scaled(x) + (*it)[r];
  return acc;
}

// p(n+1) = sum_d c[d][(n+1) mod 3] 2^d (2^n)^d.
ExpPoly ExpPoly::shift(std::uint64_t k) const {
  ExpPoly p;
  p.rows_.resize(rows_.size());
  for (std::size_t d = 0; d < rows_.size(); ++d) {
    const Rational scale(bcjq::pow2(d * k));
    for (std::size_t r = 0; r < 3; ++r) p.rows_[d][r] = rows_[d][(r + k) % 3].scaled(scale);
  }
  return p;
}

ExpPoly ExpPoly::conj(Conjugation kind) const {
  ExpPoly p = *this;
  for (auto& row : p.rows_) {
    for (auto& c : row) c = bcjq::conj(c, kind);
  }
  return p;
}

bool ExpPoly::is_identically_zero() const {
  const std::size_t samples = sample_count();
  for (std::uint64_t n = 0; n < samples; ++n) {
    if (!eval(n).is_zero()) return false;
  }
  return true;
}

bool ExpPoly::has_zero_coefficients() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& row) {
    return std::all_of(row.begin(), row.end(), [](const Coefficient& c) { return c.is_zero(); });
  });
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly p = *this;
  for (auto& row : p.rows_) {
    for (auto& c : row) c = -c;
  }
  return p;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t d = 0; d < o.rows_.size(); ++d) {
    for (std::size_t r = 0; r < 3; ++r) rows_[d][r] += o.rows_[d][r];
  }
  trim();
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) { return *this += -o; }

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly p;
  if (a.rows_.empty() || b.rows_.empty()) return p;
  p.rows_.resize(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    for (std::size_t j = 0; j < b.rows_.size(); ++j) {
      for (std::size_t r = 0; r < 3; ++r) p.rows_[i + j][r] += a.rows_[i][r] * b.rows_[j][r];
    }
  }
  p.trim();
  return p;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly::Coefficient& k) {
  ExpPoly p = a;
  for (auto& row : p.rows_) {
    for (auto& c : row) c = c * k;
  }
  p.trim();
  return p;
}

void ExpPoly::trim() {
  while (!rows_.empty() &&
         std::all_of(rows_.back().begin(), rows_.back().end(), [](const Coefficient& c) { return c.is_zero(); })) {
    rows_.pop_back();
  }
}

}  // namespace bcjq
