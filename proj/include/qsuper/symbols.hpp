#pragma once

// Process-wide interning of parameter symbols (q, p, h, h', ...) and algebra
// generators (X, Theta1, a, alpha, ...). Interned ids are small integers so
// monomials and words stay compact. Both tables are thread-safe.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qsuper {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline int as_int(Parity p) { return static_cast<int>(p); }

/// Maximum number of distinct even and odd parameters in one process.
inline constexpr int kMaxEvenParams = 16;
inline constexpr int kMaxOddParams = 24;

struct ParamInfo {
  std::string name;
  Parity parity;
  int index;  // index among parameters of the same parity
};

/// Symbol name reserved for the imaginary unit.
inline constexpr std::string_view kImaginaryUnit = "i";

/// Registers a parameter (idempotent). Throws SignatureError when the name is
/// already registered with the other parity or the table is full.
int register_param(std::string_view name, Parity parity);
std::optional<ParamInfo> find_param(std::string_view name);
const std::string& even_param_name(int index);
const std::string& odd_param_name(int index);
int even_param_count();
int odd_param_count();

using GenId = std::uint16_t;

/// Registers an algebra generator (idempotent); parity must agree with any
/// earlier registration of the same name.
GenId register_generator(std::string_view name, Parity parity);
std::optional<GenId> find_generator(std::string_view name);
const std::string& generator_name(GenId id);
Parity generator_parity(GenId id);

}  // namespace qsuper
