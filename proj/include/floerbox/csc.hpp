#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "floerbox/cfk.hpp"
#include "floerbox/laurent.hpp"

namespace floerbox {

// Cosmetic surgery screen for the twisted satellites. The screen combines
// the second derivative of the Alexander polynomial at one, the satellite's
// concordance invariant when supplied, a quadratic genus/thickness test,
// and finally slope enumeration with a lookup of the known exceptional
// Alexander-polynomial families.

enum class CscStatus { Verified, Exceptional, Inconclusive };

enum class CscObstruction {
  BoyerLines,
  NiWu,
  HanselmanF,
  HanselmanSlopes,
  None,
};

// The pair {+numerator/q, -numerator/q} of surgery slopes that could not be
// distinguished. Only {+-2} and {+-1/q} can survive the screen.
struct SlopePair {
  int64_t numerator = 1;
  int64_t q = 1;
};

struct CscVerdict {
  CscStatus status = CscStatus::Inconclusive;
  CscObstruction obstruction = CscObstruction::None;
  std::vector<SlopePair> candidate_pairs;
  std::string family;  // matched exceptional family id, empty if none

  // Supporting data for reports.
  int64_t genus = 0;
  int64_t thickness = 0;
  LaurentPoly alexander;
  int64_t alexander_second_derivative = 0;
};

const char* to_string(CscStatus s);
const char* to_string(CscObstruction o);
std::string to_string(const SlopePair& p);

// Runs the screen for the twisted Mazur satellite of the companion with the
// given framing. The satellite's own concordance invariant is an optional
// external input; when absent that test is skipped. The strict flag extends
// the concordance side-condition of the exceptional-family table to both
// quadratic families at framing zero instead of the last one only.
CscVerdict check_csc(const CfkModel& companion, int64_t n,
                     std::optional<int64_t> tau_satellite = std::nullopt,
                     bool strict_tau = false);

}  // namespace floerbox
