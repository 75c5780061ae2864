#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cdlab {

enum class TheoremId { T1, C2, C3, T4, T5, T5Cor, T6, PConv };

inline constexpr std::array<TheoremId, 8> kAllTheorems = {
    TheoremId::T1, TheoremId::C2,    TheoremId::C3, TheoremId::T4,
    TheoremId::T5, TheoremId::T5Cor, TheoremId::T6, TheoremId::PConv};

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view s);

enum class Verdict { Pass, Fail, NotApplicable };

std::string to_string(Verdict v);

// Evidence pair: named integer or named subgroup (as sorted element list).
struct Witness {
  std::string name;
  std::variant<std::int64_t, std::vector<int>> value;
};

// Pass/fail evidence for one theorem check on one group. `verdict` is
// NotApplicable exactly when `applicable` is false; a fail always carries a
// concrete counterexample witness.
struct TheoremReport {
  std::string group_label;
  int group_order = 0;
  TheoremId theorem = TheoremId::T1;
  bool applicable = false;
  Verdict verdict = Verdict::NotApplicable;
  bool restricted = false;
  std::vector<Witness> witnesses;
  std::string detail;

  bool passed() const { return verdict != Verdict::Fail; }

  void add_witness(std::string name, std::int64_t v) {
    witnesses.push_back({std::move(name), v});
  }
  void add_witness(std::string name, std::vector<int> v) {
    witnesses.push_back({std::move(name), std::move(v)});
  }
};

}  // namespace cdlab
