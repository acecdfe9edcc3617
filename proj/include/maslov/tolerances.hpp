#pragma once

namespace maslov {

// Every numerical threshold used by the toolkit lives here so that a single
// scale factor can widen or tighten all of them together (the CLI exposes
// this as --tolerance-scale for convergence studies).
struct Tolerances {
  double isotropy = 1e-8;        // max |B^T omega B| after column normalization
  double unitarity = 1e-8;       // max |U*U - I|
  double rank_rel = 1e-10;       // singular values below rank_rel*sigma_max count as zero
  double closure_angle = 1e-6;   // largest principal angle allowed between loop endpoints
  double degenerate_rel = 1e-8;  // |eigenvalue| below degenerate_rel*max counts as zero
  double intersection = 1e-8;    // 1 - cos(principal angle) below this means shared direction
  double lh_rel = 1e-4;          // LH verdict: |period| < lh_rel * generator length
  double section_margin = 1e-6;  // min singular value of [Q_Z | Q_X] accepted in the Z search

  Tolerances scaled(double s) const {
    Tolerances t = *this;
    t.isotropy *= s;
    t.unitarity *= s;
    t.rank_rel *= s;
    t.closure_angle *= s;
    t.degenerate_rel *= s;
    t.intersection *= s;
    t.lh_rel *= s;
    t.section_margin *= s;
    return t;
  }
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

}  // namespace maslov
