#pragma once

#include <string>

#include "gompf/rational.hpp"

namespace gompf {

/// A residue in Q / (modulus Z), always stored by its representative in
/// [0, modulus).
class ModClass {
 public:
  ModClass(const Rational& value, const Rational& modulus);

  static ModClass mod_one(const Rational& value) { return ModClass(value, 1); }
  static ModClass mod_four(const Rational& value) { return ModClass(value, 4); }

  const Rational& value() const noexcept { return value_; }
  const Rational& modulus() const noexcept { return modulus_; }

  /// e.g. "2/3 (mod 1)", "3 (mod 4)".
  std::string to_string() const;

  friend bool operator==(const ModClass& a, const ModClass& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }
  friend bool operator<(const ModClass& a, const ModClass& b) {
    if (a.modulus_ != b.modulus_) return a.modulus_ < b.modulus_;
    return a.value_ < b.value_;
  }

 private:
  Rational value_;
  Rational modulus_;
};

}  // namespace gompf
