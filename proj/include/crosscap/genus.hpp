#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "crosscap/cf.hpp"
#include "crosscap/knot.hpp"

namespace crosscap {

/// p = q k + a with 0 < a < q.
struct Division {
  Int k = 0;
  Int a = 0;

  friend bool operator==(const Division&, const Division&) = default;
};

struct OddSplit {
  TorusKnot t1;
  TorusKnot t2;

  friend bool operator==(const OddSplit&, const OddSplit&) = default;
};

enum class Gamma4Provenance { None, AllPositivePinches, Batson, IntervalCollapse };

std::string_view to_string(Gamma4Provenance provenance);
std::optional<Gamma4Provenance> parse_provenance(std::string_view text);

struct Gamma4Bounds {
  Int lower = 1;
  Int upper = 1;
  std::optional<Int> exact;
  Gamma4Provenance provenance = Gamma4Provenance::None;

  friend bool operator==(const Gamma4Bounds&, const Gamma4Bounds&) = default;
};

struct GapReport {
  Int gamma3_minus_beta1_F = 0;
  Fraction theorem1_lower_bound;  // k/2

  friend bool operator==(const GapReport&, const GapReport&) = default;
};

/// Everything computed for one nontrivial torus knot.
struct GenusReport {
  explicit GenusReport(const TorusKnot& k) : knot(k) {}

  TorusKnot knot;
  Int k = 0;
  Int a = 0;
  Int ell = 0;
  Int beta1_F = 0;
  Int gamma3 = 0;
  Gamma4Bounds gamma4;
  /// k/2 for p even; 0 for pq odd, where the k/2 bound is not established.
  Fraction gap_lower_bound;
  Int orientable_genus = 0;
  /// Pinches until the first unknot (the construction of F).
  std::vector<PinchRecord> trace;
  /// Present only when pq is odd.
  std::optional<OddSplit> split;
};

Division division_decomposition(const TorusKnot& knot);

/// l of the first unknot T(l, 1) reached by pinching: k if p = k mod 2,
/// otherwise k + 1.
Int terminal_ell(const TorusKnot& knot);

/// Number of pinches to the first unknot.
Int beta1_F(const TorusKnot& knot);

/// N(p, q), pinches down to T(0, 1). Accepts the unknots T(2j, 1).
Int beta1_Sigma(const TorusKnot& knot);

/// Teragaito's split of an odd torus knot along the (m-1)st convergent.
OddSplit odd_split(const TorusKnot& knot);

Int beta1_G(const TorusKnot& knot);

/// Crosscap number.
Int gamma3(const TorusKnot& knot);

Gamma4Bounds gamma4_bounds(const TorusKnot& knot);

GapReport gap_report(const TorusKnot& knot);

/// (p - 1)(q - 1) / 2.
Int orientable_genus(const TorusKnot& knot);

GenusReport make_report(const TorusKnot& knot);

}  // namespace crosscap
