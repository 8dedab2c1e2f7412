#include "siegel/characteristics.hpp"

#include <algorithm>
#include <stdexcept>

#include "siegel/groups.hpp"

namespace siegel {

ThetaCharacteristic::ThetaCharacteristic(std::vector<std::uint8_t> top, std::vector<std::uint8_t> bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.size() != bottom_.size() || top_.empty())
    throw std::invalid_argument("characteristic halves must have equal positive length");
  for (auto b : top_)
    if (b > 1) throw std::invalid_argument("characteristic entries must be bits");
  for (auto b : bottom_)
    if (b > 1) throw std::invalid_argument("characteristic entries must be bits");
}

ThetaCharacteristic ThetaCharacteristic::from_index(std::size_t g, std::uint64_t index) {
  std::vector<std::uint8_t> top(g), bottom(g);
  for (std::size_t i = 0; i < g; ++i) {
    top[i] = (index >> (2 * g - 1 - i)) & 1u;
    bottom[i] = (index >> (g - 1 - i)) & 1u;
  }
  return {std::move(top), std::move(bottom)};
}

ThetaCharacteristic ThetaCharacteristic::parse(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("characteristic must look like \"m'|m''\": " + text);
  auto bits = [&](const std::string& s) {
    std::vector<std::uint8_t> v;
    for (char c : s) {
      if (c != '0' && c != '1') throw std::invalid_argument("characteristic entries must be 0/1: " + text);
      v.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return v;
  };
  return {bits(text.substr(0, bar)), bits(text.substr(bar + 1))};
}

std::uint64_t ThetaCharacteristic::index() const {
  std::uint64_t x = 0;
  for (auto b : top_) x = (x << 1) | b;
  for (auto b : bottom_) x = (x << 1) | b;
  return x;
}

std::string ThetaCharacteristic::to_string() const {
  std::string s;
  for (auto b : top_) s += char('0' + b);
  s += '|';
  for (auto b : bottom_) s += char('0' + b);
  return s;
}

int parity(const ThetaCharacteristic& m) {
  unsigned dot = 0;
  for (std::size_t i = 0; i < m.genus(); ++i) dot += m.top()[i] & m.bottom()[i];
  return dot % 2 ? -1 : 1;
}

std::vector<ThetaCharacteristic> enumerate_characteristics(std::size_t g, ParityFilter filter) {
  if (g < 1 || g > 16) throw std::invalid_argument("enumerate_characteristics: genus out of range");
  std::vector<ThetaCharacteristic> out;
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (2 * g)); ++idx) {
    auto m = ThetaCharacteristic::from_index(g, idx);
    const int e = parity(m);
    if (filter == ParityFilter::all || (filter == ParityFilter::even && e == 1) ||
        (filter == ParityFilter::odd && e == -1))
      out.push_back(std::move(m));
  }
  return out;
}

ThetaCharacteristic IntegerCharacteristic::reduce() const {
  std::vector<std::uint8_t> t, b;
  for (const auto& x : top) t.push_back(static_cast<std::uint8_t>(residue(x, 2)));
  for (const auto& x : bottom) b.push_back(static_cast<std::uint8_t>(residue(x, 2)));
  return {std::move(t), std::move(b)};
}

int IntegerCharacteristic::reduction_sign() const {
  Integer dot = 0;
  for (std::size_t i = 0; i < top.size(); ++i) {
    const long r_top = residue(top[i], 2);
    const Integer l = (bottom[i] - residue(bottom[i], 2)) / 2;
    dot += r_top * l;
  }
  return residue(dot, 2) ? -1 : 1;
}

IntegerCharacteristic lift(const ThetaCharacteristic& m) {
  IntegerCharacteristic c;
  for (auto b : m.top()) c.top.emplace_back(b);
  for (auto b : m.bottom()) c.bottom.emplace_back(b);
  return c;
}

IntegerCharacteristic act_unreduced(const SymplecticMatrix& gamma, const ThetaCharacteristic& m) {
  if (gamma.genus() != m.genus()) throw GenusMismatchError("characteristic and matrix genus differ");
  const IntMatrix a = gamma.a(), b = gamma.b(), c = gamma.c(), d = gamma.d();
  const IntegerCharacteristic x = lift(m);
  const auto dcd = (c * d.transpose()).diagonal();
  const auto dab = (a * b.transpose()).diagonal();
  const auto dm1 = d * x.top, cm2 = c * x.bottom, bm1 = b * x.top, am2 = a * x.bottom;
  IntegerCharacteristic r;
  for (std::size_t i = 0; i < m.genus(); ++i) {
    r.top.push_back(dm1[i] - cm2[i] + dcd[i]);
    r.bottom.push_back(-bm1[i] + am2[i] + dab[i]);
  }
  return r;
}

ThetaCharacteristic act(const SymplecticMatrix& gamma, const ThetaCharacteristic& m) {
  return act_unreduced(gamma, m).reduce();
}

ThetaCharacteristic inverse_act(const SymplecticMatrix& gamma, const ThetaCharacteristic& m) {
  return act(gamma.inverse(), m);
}

CharacteristicMatrix::CharacteristicMatrix(std::vector<ThetaCharacteristic> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("characteristic matrix needs at least one column");
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].genus() != columns_.front().genus())
      throw GenusMismatchError("characteristic matrix columns of different genus");
    if (parity(columns_[i]) != -1) throw std::invalid_argument("column " + columns_[i].to_string() + " is not odd");
    for (std::size_t j = 0; j < i; ++j)
      if (columns_[i] == columns_[j]) throw std::invalid_argument("repeated column " + columns_[i].to_string());
  }
}

CharacteristicMatrix CharacteristicMatrix::unchecked(std::vector<ThetaCharacteristic> columns) {
  return CharacteristicMatrix(std::move(columns), Unchecked{});
}

CharacteristicMatrix CharacteristicMatrix::swapped() const {
  auto cols = columns_;
  std::reverse(cols.begin(), cols.end());
  return CharacteristicMatrix(std::move(cols), Unchecked{});
}

std::string CharacteristicMatrix::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < columns_.size(); ++i) s += (i ? ", " : "") + columns_[i].to_string();
  return s + ")";
}

}  // namespace siegel
