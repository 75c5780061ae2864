#include "cdlab/report.hpp"

namespace cdlab {

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "t1";
    case TheoremId::C2: return "c2";
    case TheoremId::C3: return "c3";
    case TheoremId::T4: return "t4";
    case TheoremId::T5: return "t5";
    case TheoremId::T5Cor: return "t5cor";
    case TheoremId::T6: return "t6";
    case TheoremId::PConv: return "pconv";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view s) {
  for (TheoremId id : kAllTheorems)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

}  // namespace cdlab
