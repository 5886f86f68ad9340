#include "routh/cycle_ratios.hpp"

#include <stdexcept>
#include <utility>

namespace routh {

std::string to_string(ProductRegime regime) {
  switch (regime) {
    case ProductRegime::gt1: return "gt1";
    case ProductRegime::eq1: return "eq1";
    case ProductRegime::lt1: return "lt1";
  }
  return "unknown";
}

CycleRatios::CycleRatios(std::vector<Rational> ratios) : ratios_(std::move(ratios)) {
  if (ratios_.size() < 3) {
    throw std::invalid_argument("a simplex cycle needs at least 3 ratios, got " +
                                std::to_string(ratios_.size()));
  }
  for (std::size_t i = 0; i < ratios_.size(); ++i) {
    if (ratios_[i].sign() <= 0) {
      throw std::invalid_argument("ratio x_" + std::to_string(i + 1) + " = " +
                                  ratios_[i].str() + " is not strictly positive");
    }
  }
}

CycleRatios CycleRatios::uniform(int n, const Rational& k) {
  if (n < 0) throw std::invalid_argument("negative cycle length");
  return CycleRatios(std::vector<Rational>(static_cast<std::size_t>(n), k));
}

std::size_t CycleRatios::slot(long index) const {
  const long n = size();
  long r = (index - 1) % n;
  if (r < 0) r += n;
  return static_cast<std::size_t>(r);
}

Rational CycleRatios::product() const {
  Rational p(1);
  for (const auto& x : ratios_) p *= x;
  return p;
}

ProductRegime CycleRatios::regime() const {
  auto c = product() <=> Rational(1);
  if (c > 0) return ProductRegime::gt1;
  if (c < 0) return ProductRegime::lt1;
  return ProductRegime::eq1;
}

CycleRatios CycleRatios::reversed_reciprocal() const {
  const int n = size();
  std::vector<Rational> out;
  out.reserve(ratios_.size());
  for (int i = 1; i <= n; ++i) out.push_back((*this)(n + 1 - i).reciprocal());
  return CycleRatios(std::move(out));
}

CycleRatios CycleRatios::rotated(long shift) const {
  std::vector<Rational> out;
  out.reserve(ratios_.size());
  for (int i = 1; i <= size(); ++i) out.push_back((*this)(i + shift));
  return CycleRatios(std::move(out));
}

}  // namespace routh
