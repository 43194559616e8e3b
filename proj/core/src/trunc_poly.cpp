#include "svv/trunc_poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace svv {

RingShape::RingShape(std::vector<int> b) : bounds(std::move(b)) {
  if (bounds.empty()) throw std::invalid_argument("ring shape needs at least one bound");
  strides_.resize(bounds.size());
  size_ = 1;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (bounds[i] < 1) throw std::invalid_argument("ring shape bounds must be positive");
    strides_[i] = size_;
    size_ *= bounds[i];
  }
}

long RingShape::index_of(const std::vector<int>& exps) const {
  if (exps.size() != bounds.size()) throw std::invalid_argument("exponent vector length mismatch");
  long idx = 0;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (exps[i] < 0 || exps[i] >= bounds[i])
      throw std::out_of_range("exponent outside ring bounds");
    idx += exps[i] * strides_[i];
  }
  return idx;
}

std::vector<int> RingShape::exps_of(long index) const {
  std::vector<int> exps(bounds.size());
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    exps[i] = static_cast<int>(index % bounds[i]);
    index /= bounds[i];
  }
  return exps;
}

TruncPoly::TruncPoly(RingShape shape)
    : shape_(std::move(shape)), coeffs_(shape_.lattice_size()) {}

TruncPoly TruncPoly::one(const RingShape& shape) {
  TruncPoly p(shape);
  p.coeffs_[0] = 1;
  return p;
}

TruncPoly TruncPoly::variable(const RingShape& shape, int i) {
  if (i < 1 || i > shape.n()) throw std::out_of_range("variable index outside [1..n]");
  TruncPoly p(shape);
  if (shape.bounds[i - 1] >= 2) {
    std::vector<int> exps(shape.n(), 0);
    exps[i - 1] = 1;
    p.coeffs_[shape.index_of(exps)] = 1;
  }
  return p;
}

TruncPoly TruncPoly::linear_form(const RingShape& shape, const std::vector<BigInt>& coeffs) {
  if (static_cast<int>(coeffs.size()) != shape.n())
    throw std::invalid_argument("linear form coefficient count mismatch");
  TruncPoly p(shape);
  std::vector<int> exps(shape.n(), 0);
  for (int i = 0; i < shape.n(); ++i) {
    if (shape.bounds[i] < 2 || coeffs[i] == 0) continue;
    exps[i] = 1;
    p.coeffs_[shape.index_of(exps)] += coeffs[i];
    exps[i] = 0;
  }
  return p;
}

const BigInt& TruncPoly::coefficient(const std::vector<int>& exps) const {
  return coeffs_[shape_.index_of(exps)];
}

void TruncPoly::set_coefficient(const std::vector<int>& exps, BigInt value) {
  coeffs_[shape_.index_of(exps)] = std::move(value);
}

bool TruncPoly::is_zero() const {
  for (const BigInt& c : coeffs_)
    if (c != 0) return false;
  return true;
}

long TruncPoly::support_size() const {
  long count = 0;
  for (const BigInt& c : coeffs_)
    if (c != 0) ++count;
  return count;
}

TruncPoly TruncPoly::add(const TruncPoly& other) const {
  if (!(shape_ == other.shape_)) throw std::invalid_argument("ring shape mismatch in add");
  TruncPoly r(shape_);
  for (long i = 0; i < shape_.lattice_size(); ++i) r.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
  return r;
}

TruncPoly TruncPoly::mul(const TruncPoly& other) const {
  if (!(shape_ == other.shape_)) throw std::invalid_argument("ring shape mismatch in mul");
  // Convolve sparse supports; the outer loop runs over the smaller one.
  struct Term {
    std::vector<int> exps;
    const BigInt* coeff;
  };
  auto support = [this](const TruncPoly& p) {
    std::vector<Term> terms;
    for (long i = 0; i < shape_.lattice_size(); ++i)
      if (p.coeffs_[i] != 0) terms.push_back({shape_.exps_of(i), &p.coeffs_[i]});
    return terms;
  };
  std::vector<Term> a = support(*this);
  std::vector<Term> b = support(other);
  if (a.size() > b.size()) std::swap(a, b);

  const int n = shape_.n();
  TruncPoly r(shape_);
  std::vector<int> sum(n);
  for (const Term& ta : a) {
    for (const Term& tb : b) {
      bool in_ring = true;
      for (int i = 0; i < n; ++i) {
        sum[i] = ta.exps[i] + tb.exps[i];
        if (sum[i] >= shape_.bounds[i]) {
          in_ring = false;
          break;
        }
      }
      if (!in_ring) continue;  // monomial lies in the ideal
      r.coeffs_[shape_.index_of(sum)] += *ta.coeff * *tb.coeff;
    }
  }
  return r;
}

TruncPoly TruncPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative exponent");
  TruncPoly result = one(shape_);
  TruncPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result.mul(base);
    k >>= 1;
    if (k > 0) base = base.mul(base);
  }
  return result;
}

std::string TruncPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i < shape_.lattice_size(); ++i) {
    if (coeffs_[i] == 0) continue;
    BigInt c = coeffs_[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c < 0) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    os << c.str();
    std::vector<int> exps = shape_.exps_of(i);
    for (int v = 0; v < shape_.n(); ++v) {
      if (exps[v] == 0) continue;
      os << "*h" << v + 1;
      if (exps[v] > 1) os << "^" << exps[v];
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace svv
