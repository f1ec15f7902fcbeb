#pragma once

#include "diagram.hpp"

namespace adh {

  // Whether `sq` is a pullback of its cospan (g, n). Decided by comparing
  // with the canonical pullback; a failing witness names the defect of the
  // comparison map P -> pullback(g, n).
  // Throws not_composable / not_commuting if sq is not a commuting square.
  Witness is_pullback(Category const& cat, Square const& sq);

  // Whether `sq` is a pushout of its span (m, f), via the comparison map
  // pushout(m, f) -> D.
  Witness is_pushout(Category const& cat, Square const& sq);

  enum class PasteMode { pullback, pushout };

  // Pasting/cancellation for two squares side by side,
  //
  //   X0 --> X1 --> X2
  //   |      |      |
  //   v      v      v
  //   Y0 --> Y1 --> Y2
  //
  // given as left = (X0->Y0, X0->X1, Y0->Y1, X1->Y1) and
  // right = (X1->Y1, X1->X2, Y1->Y2, X2->Y2).
  //   pullback mode: if right is a pullback, left is one iff the outer
  //                  rectangle is one.
  //   pushout mode:  if left is a pushout, right is one iff the outer
  //                  rectangle is one.
  // Throws edge_mismatch if left.n and right.m differ.
  Witness paste_check(Category const& cat,
                      Square const&   left,
                      Square const&   right,
                      PasteMode       mode);

  // The outer rectangle of two pasted squares.
  Square paste(Category const& cat, Square const& left, Square const& right);

}  // namespace adh
