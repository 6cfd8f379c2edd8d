#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "revivals/fock.hpp"

namespace revivals {

/// A product of single-mode ladder operators read left to right;
/// true = creation, false = annihilation.
using LadderWord = std::vector<bool>;

/// (creation power, annihilation power) -> integer weight.
using NormalForm = std::map<std::pair<int, int>, std::int64_t>;

/// Rewrites a word into a sum of a^{dag j} a^k using a a^dag = a^dag a + 1.
/// Exact integer arithmetic.
NormalForm normal_order(const LadderWord& word);

/// Normal form of x^k or p^k, with x = (a + a^dag)/sqrt(2) and
/// p = (a - a^dag)/(i sqrt(2)). Coefficients carry the 2^{-k/2} and i factors.
std::map<std::pair<int, int>, Complex> quadrature_normal_form(Quadrature quadrature, int power);

/// One term c * (u^dag)^{j1} u^{j2} (v^dag)^{j3} v^{j4} of a two-mode sum.
struct NormalOrderedTerm {
  Complex coefficient;
  std::array<int, 4> powers{};
};

struct NormalOrderedSum {
  std::vector<NormalOrderedTerm> terms;
};

/// Letters of a two-mode word.
enum class ModeOp : std::uint8_t { u_create, u_annihilate, v_create, v_annihilate };

/// Normal-orders each mode of a two-mode word (the modes commute) and returns
/// the product of the per-mode normal forms as integer-weighted powers.
std::map<std::array<int, 4>, std::int64_t> normal_order_two_mode(const std::vector<ModeOp>& word);

}  // namespace revivals
