#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "trifins/scaled.hpp"
#include "trifins/triangle_group.hpp"

namespace trifins {

// Family parameter given either as t or as t^2 (the square of the parameter
// is the triple ratio, so both scales are natural inputs).  Always tagged;
// an untagged number would be ambiguous.
struct FamilyParam {
  enum class Kind { T, T_SQUARED } kind;
  double value;

  static FamilyParam t(double v) { return {Kind::T, v}; }
  static FamilyParam t_squared(double v) { return {Kind::T_SQUARED, v}; }
  double as_t() const;
  std::string describe() const;
};

// Word matrix in scaled-float form; follows the same composition order as the
// exact evaluate paths.
ScaledMat3 evaluate_scaled(const NumericRep& rep, const std::string& word);

// Value of a Laurent polynomial at t > 0 as a scaled float (log-space sum of
// the terms, immune to overflow however large t and the degrees get).
ScaledReal scaled_specialize(const LaurentPoly& poly, double t);

struct JordanPoint {
  double x;  // log |lambda_1|
  double y;  // -log |lambda_3|
};

// Defined for orientation-preserving (even length) words only.
JordanPoint jordan_projection(const NumericRep& rep, const std::string& word);

// Top degrees of the trace of the word and of its inverse, as Laurent
// polynomials in the family parameter.
std::pair<int, int> trace_top_degrees(const SymbolicRep& rep, const std::string& word);

// One representative per conjugacy class of orientation-preserving elements
// represented by reduced words of length <= max_len.  Deterministic: the
// representative is the (length, lex)-least cyclically reduced word in the
// class, and the list is sorted the same way.
std::vector<std::string> enumerate_even_classes(const ElementTable& table, int max_len);

struct ScanRow {
  std::string word;
  int length;
  double x;
  double y;
};

struct ScanResult {
  double t;
  std::vector<ScanRow> rows;  // sorted by (length, word)
};

ScanResult jordan_scan(const Presentation& pres, const FamilyParam& param, int max_len);

// Mean and 90th-percentile distance from the scan points, divided by log t,
// to the nearest integer lattice point.  Undefined at t = 1 (log t = 0).
struct LatticeStats {
  bool defined = false;
  double mean = 0;
  double p90 = 0;
};
LatticeStats lattice_proximity(const ScanResult& scan);

void write_scan_csv(std::ostream& os, const ScanResult& scan);

}  // namespace trifins
