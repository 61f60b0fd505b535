#include "qsuper/symbols.hpp"

#include <array>
#include <atomic>
#include <deque>
#include <mutex>
#include <unordered_map>

#include "qsuper/errors.hpp"

namespace qsuper {
namespace {

struct ParamTable {
  std::mutex mu;
  std::deque<std::string> even_names;
  std::deque<std::string> odd_names;
  std::unordered_map<std::string, ParamInfo> by_name;

  ParamTable() {
    // Fixed registration order keeps printing deterministic across runs.
    for (const char* n : {"q", "p", "hbar1", "hbar2", "E1", "E2", "c"}) add(n, Parity::Even);
    for (const char* n : {"h", "h'", "eps1", "eps2", "eps"}) add(n, Parity::Odd);
  }

  int add(std::string_view name, Parity parity) {
    if (name == kImaginaryUnit) throw SignatureError("'i' is reserved for the imaginary unit");
    std::string key(name);
    if (auto it = by_name.find(key); it != by_name.end()) {
      if (it->second.parity != parity)
        throw SignatureError("parameter '" + key + "' already registered with other parity");
      return it->second.index;
    }
    auto& names = parity == Parity::Even ? even_names : odd_names;
    const int limit = parity == Parity::Even ? kMaxEvenParams : kMaxOddParams;
    if (static_cast<int>(names.size()) >= limit)
      throw SignatureError("too many parameters of one parity (adding '" + key + "')");
    const int index = static_cast<int>(names.size());
    names.push_back(key);
    by_name.emplace(key, ParamInfo{key, parity, index});
    return index;
  }
};

ParamTable& params() {
  static ParamTable table;
  return table;
}

struct GeneratorTable {
  std::mutex mu;
  std::deque<std::string> names;
  std::unordered_map<std::string, GenId> by_name;
  // Lock-free parity lookups; written once before the id is handed out.
  std::array<std::atomic<std::uint8_t>, 0x10000> parities{};
};

GeneratorTable& generators() {
  static GeneratorTable table;
  return table;
}

}  // namespace

int register_param(std::string_view name, Parity parity) {
  auto& t = params();
  std::lock_guard lock(t.mu);
  return t.add(name, parity);
}

std::optional<ParamInfo> find_param(std::string_view name) {
  auto& t = params();
  std::lock_guard lock(t.mu);
  auto it = t.by_name.find(std::string(name));
  if (it == t.by_name.end()) return std::nullopt;
  return it->second;
}

const std::string& even_param_name(int index) {
  auto& t = params();
  std::lock_guard lock(t.mu);
  return t.even_names.at(static_cast<std::size_t>(index));
}

const std::string& odd_param_name(int index) {
  auto& t = params();
  std::lock_guard lock(t.mu);
  return t.odd_names.at(static_cast<std::size_t>(index));
}

int even_param_count() {
  auto& t = params();
  std::lock_guard lock(t.mu);
  return static_cast<int>(t.even_names.size());
}

int odd_param_count() {
  auto& t = params();
  std::lock_guard lock(t.mu);
  return static_cast<int>(t.odd_names.size());
}

GenId register_generator(std::string_view name, Parity parity) {
  auto& t = generators();
  std::lock_guard lock(t.mu);
  std::string key(name);
  if (key.empty()) throw SignatureError("empty generator name");
  if (auto it = t.by_name.find(key); it != t.by_name.end()) {
    if (static_cast<Parity>(t.parities[it->second].load(std::memory_order_relaxed)) != parity)
      throw SignatureError("generator '" + key + "' already registered with other parity");
    return it->second;
  }
  if (t.names.size() >= 0xFFFF) throw SignatureError("generator table full");
  const auto id = static_cast<GenId>(t.names.size());
  t.names.push_back(key);
  t.parities[id].store(static_cast<std::uint8_t>(parity), std::memory_order_release);
  t.by_name.emplace(key, id);
  return id;
}

std::optional<GenId> find_generator(std::string_view name) {
  auto& t = generators();
  std::lock_guard lock(t.mu);
  auto it = t.by_name.find(std::string(name));
  if (it == t.by_name.end()) return std::nullopt;
  return it->second;
}

const std::string& generator_name(GenId id) {
  auto& t = generators();
  std::lock_guard lock(t.mu);
  return t.names.at(id);
}

Parity generator_parity(GenId id) {
  return static_cast<Parity>(generators().parities[id].load(std::memory_order_acquire));
}

}  // namespace qsuper
