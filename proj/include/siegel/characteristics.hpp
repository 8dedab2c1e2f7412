#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "siegel/symplectic.hpp"

namespace siegel {

/// A theta characteristic m = [m'; m''] in F₂^{2g}, stored with entries in {0, 1}.
class ThetaCharacteristic {
 public:
  ThetaCharacteristic() = default;
  ThetaCharacteristic(std::vector<std::uint8_t> top, std::vector<std::uint8_t> bottom);

  /// Index in the lexicographic order of enumerate(): bit string m'₁…m'_g m''₁…m''_g, m'₁ most significant.
  static ThetaCharacteristic from_index(std::size_t g, std::uint64_t index);
  /// Parses "m'|m''", e.g. "001|011".
  static ThetaCharacteristic parse(const std::string& text);

  std::size_t genus() const { return top_.size(); }
  const std::vector<std::uint8_t>& top() const { return top_; }
  const std::vector<std::uint8_t>& bottom() const { return bottom_; }
  std::uint64_t index() const;
  std::string to_string() const;

  friend auto operator<=>(const ThetaCharacteristic& x, const ThetaCharacteristic& y) {
    return x.index() <=> y.index();
  }
  friend bool operator==(const ThetaCharacteristic& x, const ThetaCharacteristic& y) = default;

 private:
  std::vector<std::uint8_t> top_;
  std::vector<std::uint8_t> bottom_;
};

/// e(m) = (-1)^{ᵗm'm''}.
int parity(const ThetaCharacteristic& m);

enum class ParityFilter { all, even, odd };

/// All characteristics of genus g passing `filter`, in lexicographic order.
std::vector<ThetaCharacteristic> enumerate_characteristics(std::size_t g, ParityFilter filter = ParityFilter::all);

/// An integer lift of a characteristic, as produced by the unreduced action.
struct IntegerCharacteristic {
  std::vector<Integer> top;
  std::vector<Integer> bottom;

  ThetaCharacteristic reduce() const;
  /// s with ϑ_{this} = s · ϑ_{reduce()}: writing this = r + 2[k; l], s = (-1)^{ᵗr'l}.
  int reduction_sign() const;
};

IntegerCharacteristic lift(const ThetaCharacteristic& m);

/// γ·m before reduction: [D m' - C m'' + diag(CᵗD); -B m' + A m'' + diag(AᵗB)].
IntegerCharacteristic act_unreduced(const SymplecticMatrix& gamma, const ThetaCharacteristic& m);
/// γ·m reduced mod 2.
ThetaCharacteristic act(const SymplecticMatrix& gamma, const ThetaCharacteristic& m);
/// γ⁻¹·m.
ThetaCharacteristic inverse_act(const SymplecticMatrix& gamma, const ThetaCharacteristic& m);

/// Ordered columns (m₁, …, m_k) of pairwise distinct odd characteristics of one genus.
class CharacteristicMatrix {
 public:
  explicit CharacteristicMatrix(std::vector<ThetaCharacteristic> columns);
  /// Skips the distinctness check; used only to probe the degenerate W(m, m).
  static CharacteristicMatrix unchecked(std::vector<ThetaCharacteristic> columns);

  std::size_t genus() const { return columns_.front().genus(); }
  const std::vector<ThetaCharacteristic>& columns() const { return columns_; }
  const ThetaCharacteristic& operator[](std::size_t i) const { return columns_[i]; }
  std::size_t size() const { return columns_.size(); }

  CharacteristicMatrix swapped() const;
  std::string to_string() const;

  friend auto operator<=>(const CharacteristicMatrix& x, const CharacteristicMatrix& y) = default;
  friend bool operator==(const CharacteristicMatrix& x, const CharacteristicMatrix& y) = default;

 private:
  struct Unchecked {};
  CharacteristicMatrix(std::vector<ThetaCharacteristic> columns, Unchecked) : columns_(std::move(columns)) {}
  std::vector<ThetaCharacteristic> columns_;
};

}  // namespace siegel
