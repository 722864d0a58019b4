#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dunn {

/// The two truth values of a Dunn model. Everything else ("both",
/// "neither") lives in Interpretation, not here.
enum class TruthValue : std::uint8_t { falsity = 0, truth = 1 };

constexpr TruthValue opposite(TruthValue v) {
  return v == TruthValue::truth ? TruthValue::falsity : TruthValue::truth;
}

/// A subset of {1, 0}: what an assignment relates a formula to.
/// Exactly four values exist; the canonical display order is
/// {1} < {1,0} < {} < {0}, matching the row order of the tables.
class Interpretation {
public:
  constexpr Interpretation() : bits_(0) {}

  static constexpr Interpretation just_true() { return Interpretation(kTruthBit); }
  static constexpr Interpretation both() { return Interpretation(kTruthBit | kFalsityBit); }
  static constexpr Interpretation neither() { return Interpretation(0); }
  static constexpr Interpretation just_false() { return Interpretation(kFalsityBit); }

  static constexpr Interpretation from_flags(bool has_truth, bool has_falsity) {
    return Interpretation(static_cast<std::uint8_t>((has_truth ? kTruthBit : 0) |
                                                    (has_falsity ? kFalsityBit : 0)));
  }

  constexpr bool contains(TruthValue v) const {
    return (bits_ & (v == TruthValue::truth ? kTruthBit : kFalsityBit)) != 0;
  }
  constexpr bool is_true() const { return (bits_ & kTruthBit) != 0; }
  constexpr bool is_false() const { return (bits_ & kFalsityBit) != 0; }

  /// Position in the canonical order {1}, {1,0}, {}, {0}.
  constexpr int canonical_index() const {
    constexpr int index_of_bits[4] = {2, 0, 3, 1};  // {}, {1}, {0}, {1,0}
    return index_of_bits[bits_];
  }

  static constexpr Interpretation from_canonical_index(int i) {
    constexpr std::uint8_t bits_of_index[4] = {kTruthBit, kTruthBit | kFalsityBit, 0, kFalsityBit};
    return Interpretation(bits_of_index[i]);
  }

  /// All four interpretations in canonical order.
  static const std::array<Interpretation, 4>& all();

  std::string to_string() const;

  /// Accepts "{1}", "{1,0}", "{0,1}", "{}", "{0}" (whitespace-insensitive)
  /// and the aliases T, B, N, F.
  static std::optional<Interpretation> parse(std::string_view text);

  friend constexpr bool operator==(Interpretation a, Interpretation b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(Interpretation a, Interpretation b) { return a.bits_ != b.bits_; }
  friend constexpr bool operator<(Interpretation a, Interpretation b) {
    return a.canonical_index() < b.canonical_index();
  }

private:
  static constexpr std::uint8_t kTruthBit = 1;
  static constexpr std::uint8_t kFalsityBit = 2;

  explicit constexpr Interpretation(std::uint8_t bits) : bits_(bits) {}

  std::uint8_t bits_;
};

}  // namespace dunn
