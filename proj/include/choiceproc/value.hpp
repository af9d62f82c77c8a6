#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "choiceproc/errors.hpp"

namespace choiceproc {

/// A declared total order over ordinal labels, lowest first. Shared by the
/// attribute declaration and every value drawn from it.
using LabelOrder = std::vector<std::string>;
using LabelOrderPtr = std::shared_ptr<const LabelOrder>;

namespace detail {

/// Normalized form of an exact decimal literal. Leading zeros of the
/// integer part and trailing zeros of the fraction are stripped, so two
/// parts structs are equal iff the numbers are equal.
struct DecimalParts {
  int sign = 0;            // -1, 0, +1; 0 only for the value zero
  std::string intDigits;   // no leading zeros; empty when < 1 in magnitude
  std::string fracDigits;  // no trailing zeros
};

inline std::optional<DecimalParts> parseDecimal(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  std::size_t intStart = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  if (i == intStart) return std::nullopt;
  std::size_t intEnd = i;
  std::size_t fracStart = intEnd, fracEnd = intEnd;
  if (i < text.size() && text[i] == '.') {
    ++i;
    fracStart = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == fracStart) return std::nullopt;
    fracEnd = i;
  }
  if (i != text.size()) return std::nullopt;

  DecimalParts parts;
  std::size_t firstNonZero = intStart;
  while (firstNonZero < intEnd && text[firstNonZero] == '0') ++firstNonZero;
  parts.intDigits = text.substr(firstNonZero, intEnd - firstNonZero);
  std::size_t lastNonZero = fracEnd;
  while (lastNonZero > fracStart && text[lastNonZero - 1] == '0') --lastNonZero;
  parts.fracDigits = text.substr(fracStart, lastNonZero - fracStart);
  if (parts.intDigits.empty() && parts.fracDigits.empty()) {
    parts.sign = 0;
  } else {
    parts.sign = negative ? -1 : 1;
  }
  return parts;
}

/// Digit-string comparison of magnitudes, fraction handled positionally.
inline std::strong_ordering compareMagnitude(const DecimalParts& a, const DecimalParts& b) {
  if (a.intDigits.size() != b.intDigits.size())
    return a.intDigits.size() <=> b.intDigits.size();
  if (int c = a.intDigits.compare(b.intDigits); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  // Fractions carry no trailing zeros, so a strict prefix is strictly smaller.
  if (int c = a.fracDigits.compare(b.fracDigits); c != 0) {
    std::size_t common = std::min(a.fracDigits.size(), b.fracDigits.size());
    if (a.fracDigits.compare(0, common, b.fracDigits, 0, common) == 0)
      return a.fracDigits.size() <=> b.fracDigits.size();
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering compareDecimal(const DecimalParts& a, const DecimalParts& b) {
  if (a.sign != b.sign) return a.sign <=> b.sign;
  if (a.sign == 0) return std::strong_ordering::equal;
  auto mag = compareMagnitude(a, b);
  if (a.sign > 0) return mag;
  if (mag == std::strong_ordering::less) return std::strong_ordering::greater;
  if (mag == std::strong_ordering::greater) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

}  // namespace detail

/// An exactly comparable scalar. Three states:
///   Decimal  an exact decimal number, compared digit-wise (no floating
///            rounding; "10" and "10.0" are equal),
///   Ordinal  a position in a declared label order,
///   Label    an ordinal literal not yet bound to a declared order (as
///            produced by the DSL parser, which has no schema in scope).
class Value {
public:
  enum class Kind { Decimal, Ordinal, Label };

  /// Parses an exact decimal literal. The original text is preserved for
  /// printing. Throws SchemaError on malformed input.
  static Value decimal(std::string text) {
    auto parts = detail::parseDecimal(text);
    if (!parts) throw SchemaError("malformed decimal literal: \"" + text + "\"");
    Value v;
    v.kind_ = Kind::Decimal;
    v.text_ = std::move(text);
    v.decimal_ = *std::move(parts);
    return v;
  }

  static Value ordinal(std::size_t level, LabelOrderPtr order) {
    if (!order || level >= order->size())
      throw SchemaError("ordinal level out of range of its declared order");
    Value v;
    v.kind_ = Kind::Ordinal;
    v.text_ = (*order)[level];
    v.level_ = level;
    v.order_ = std::move(order);
    return v;
  }

  static Value label(std::string text) {
    Value v;
    v.kind_ = Kind::Label;
    v.text_ = std::move(text);
    return v;
  }

  Kind kind() const { return kind_; }

  /// Literal text: the decimal as written, or the label string.
  const std::string& text() const { return text_; }

  std::size_t level() const { return level_; }
  const LabelOrderPtr& order() const { return order_; }

  /// Binds a Label against a declared order, yielding an Ordinal. Other
  /// kinds pass through unchanged. Throws SchemaError if the label is not
  /// in the order.
  Value resolve(const LabelOrderPtr& order) const {
    if (kind_ != Kind::Label) return *this;
    auto it = std::find(order->begin(), order->end(), text_);
    if (it == order->end())
      throw SchemaError("label \"" + text_ + "\" is not in the declared order");
    return ordinal(static_cast<std::size_t>(it - order->begin()), order);
  }

  const detail::DecimalParts& decimalParts() const { return decimal_; }

private:
  Kind kind_ = Kind::Decimal;
  std::string text_;
  detail::DecimalParts decimal_;
  std::size_t level_ = 0;
  LabelOrderPtr order_;
};

namespace detail {

inline std::size_t labelLevel(const std::string& label, const LabelOrder& order) {
  auto it = std::find(order.begin(), order.end(), label);
  if (it == order.end())
    throw SchemaError("label \"" + label + "\" is not in the declared order");
  return static_cast<std::size_t>(it - order.begin());
}

}  // namespace detail

/// Total-order comparison. Both values must be of the same kind: decimals
/// compare exactly, ordinals compare by declared position. A Label is
/// comparable to an Ordinal by resolving it in the ordinal's order. Throws
/// SchemaError on any kind mismatch (two unequal bare Labels included,
/// since no order is in scope to rank them).
inline std::strong_ordering compareValues(const Value& a, const Value& b) {
  using Kind = Value::Kind;
  if (a.kind() == Kind::Decimal && b.kind() == Kind::Decimal)
    return detail::compareDecimal(a.decimalParts(), b.decimalParts());
  if (a.kind() == Kind::Decimal || b.kind() == Kind::Decimal)
    throw SchemaError("cannot compare a decimal with an ordinal value");

  if (a.kind() == Kind::Ordinal && b.kind() == Kind::Ordinal) {
    if (a.order() != b.order() && *a.order() != *b.order())
      throw SchemaError("cannot compare ordinals of different declared orders");
    return a.level() <=> b.level();
  }
  if (a.kind() == Kind::Ordinal)  // b is a Label
    return a.level() <=> detail::labelLevel(b.text(), *a.order());
  if (b.kind() == Kind::Ordinal)  // a is a Label
    return detail::labelLevel(a.text(), *b.order()) <=> b.level();

  // Two bare labels: only equality is decidable without an order.
  if (a.text() == b.text()) return std::strong_ordering::equal;
  throw SchemaError("cannot order labels \"" + a.text() + "\" and \"" + b.text() +
                    "\" without a declared order in scope");
}

/// Semantic equality: comparable and equal. Incomparable values are unequal.
inline bool operator==(const Value& a, const Value& b) {
  try {
    return compareValues(a, b) == std::strong_ordering::equal;
  } catch (const SchemaError&) {
    return false;
  }
}

}  // namespace choiceproc
