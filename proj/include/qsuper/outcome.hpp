#pragma once

#include <string>
#include <vector>

namespace qsuper {

/// Result of one exact verification: pass/fail, a witness expression on
/// failure, and notes on the conventions that were used.
struct Outcome {
  bool pass = true;
  std::string witness;
  std::vector<std::string> notes;

  static Outcome ok(std::vector<std::string> notes = {}) { return {true, "", std::move(notes)}; }
  static Outcome fail(std::string witness, std::vector<std::string> notes = {}) {
    return {false, std::move(witness), std::move(notes)};
  }
  Outcome& note(std::string n) {
    notes.push_back(std::move(n));
    return *this;
  }
};

}  // namespace qsuper
