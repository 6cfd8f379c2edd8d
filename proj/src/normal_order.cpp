#include "revivals/normal_order.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace revivals {

namespace {

void accumulate(const LadderWord& word, std::int64_t weight, NormalForm& out) {
  // First "a a^dag" pair, if any.
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (!word[i] && word[i + 1]) {
      LadderWord swapped = word;
      swapped[i] = true;
      swapped[i + 1] = false;
      accumulate(swapped, weight, out);

      LadderWord contracted;
      contracted.reserve(word.size() - 2);
      contracted.insert(contracted.end(), word.begin(), word.begin() + static_cast<long>(i));
      contracted.insert(contracted.end(), word.begin() + static_cast<long>(i) + 2, word.end());
      accumulate(contracted, weight, out);
      return;
    }
  }
  int creations = 0;
  for (bool letter : word) creations += letter ? 1 : 0;
  const int annihilations = static_cast<int>(word.size()) - creations;
  out[{creations, annihilations}] += weight;
}

}  // namespace

NormalForm normal_order(const LadderWord& word) {
  NormalForm out;
  accumulate(word, 1, out);
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

std::map<std::pair<int, int>, Complex> quadrature_normal_form(Quadrature quadrature, int power) {
  if (power < 0 || power > 20) {
    throw std::invalid_argument("quadrature_normal_form: power must be in 0..20");
  }
  // Sum over the 2^k words; a creation letter carries -1 for p.
  NormalForm integer_form;
  const std::uint32_t words = 1u << power;
  for (std::uint32_t bits = 0; bits < words; ++bits) {
    LadderWord word(static_cast<std::size_t>(power));
    int sign = 1;
    for (int i = 0; i < power; ++i) {
      word[static_cast<std::size_t>(i)] = ((bits >> i) & 1u) != 0;
      if (quadrature == Quadrature::p && word[static_cast<std::size_t>(i)]) sign = -sign;
    }
    for (const auto& [powers, weight] : normal_order(word)) integer_form[powers] += sign * weight;
  }
  const Complex unit = quadrature == Quadrature::x ? Complex(std::numbers::sqrt2)
                                                   : Complex(0.0, std::numbers::sqrt2);
  const Complex scale = std::pow(1.0 / unit, power);
  std::map<std::pair<int, int>, Complex> out;
  for (const auto& [powers, weight] : integer_form) {
    if (weight != 0) out[powers] = scale * static_cast<double>(weight);
  }
  return out;
}

std::map<std::array<int, 4>, std::int64_t> normal_order_two_mode(const std::vector<ModeOp>& word) {
  LadderWord u_word;
  LadderWord v_word;
  for (ModeOp op : word) {
    switch (op) {
      case ModeOp::u_create: u_word.push_back(true); break;
      case ModeOp::u_annihilate: u_word.push_back(false); break;
      case ModeOp::v_create: v_word.push_back(true); break;
      case ModeOp::v_annihilate: v_word.push_back(false); break;
    }
  }
  const NormalForm u_form = normal_order(u_word);
  const NormalForm v_form = normal_order(v_word);
  std::map<std::array<int, 4>, std::int64_t> out;
  for (const auto& [u_pow, u_weight] : u_form) {
    for (const auto& [v_pow, v_weight] : v_form) {
      out[{u_pow.first, u_pow.second, v_pow.first, v_pow.second}] += u_weight * v_weight;
    }
  }
  return out;
}

}  // namespace revivals
