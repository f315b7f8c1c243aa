#include "cucalc/report.hpp"

namespace cucalc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::InconclusiveAtCap: return "inconclusive-at-cap";
  }
  return "?";
}

}  // namespace cucalc
