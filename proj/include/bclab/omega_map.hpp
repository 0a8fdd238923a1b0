#pragma once

#include <optional>
#include <vector>

#include "bclab/pl_map.hpp"

namespace bclab {

/// Truncated homeomorphism of [0,1] with countably many breakpoints
/// accumulating at a single dyadic point.
///
/// The map is stored exactly on [0, known_end) and is the identity on
/// [accumulation, 1]. Between the two lies the part past the stored depth;
/// evaluating there throws TruncationExceeded. known_end == accumulation means
/// the map is fully known (a finitely supported PL map).
class OmegaPLMap {
 public:
  static OmegaPLMap identity();
  /// Interval PL map viewed as a fully known element.
  static OmegaPLMap from_pl(const PLMap& f);
  /// Pieces covering [0, known_end); identity on [accumulation, 1].
  static OmegaPLMap from_pieces(std::vector<Piece> pieces, const Dyadic& known_end,
                                const Dyadic& accumulation, int depth);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const Dyadic& known_end() const { return known_end_; }
  const Dyadic& accumulation() const { return accumulation_; }
  int depth() const { return depth_; }
  bool fully_known() const { return known_end_ == accumulation_; }

  Dyadic operator()(const Dyadic& x) const;
  Dyadic inverse_at(const Dyadic& y) const;
  /// Image of known_end under the stored prefix (left limit).
  Dyadic known_image_end() const;
  long slope_exp_at(const Dyadic& x) const;

  /// The finitely supported map, if fully known.
  std::optional<PLMap> to_pl() const;

 private:
  std::vector<Piece> pieces_;
  Dyadic known_end_;
  Dyadic accumulation_;
  int depth_ = 0;
};

OmegaPLMap compose(const OmegaPLMap& f, const OmegaPLMap& g);
OmegaPLMap invert(const OmegaPLMap& f);
OmegaPLMap commutator(const OmegaPLMap& f, const OmegaPLMap& g);

/// Result of comparing two truncated maps on the region where both are known.
struct WindowComparison {
  bool equal = true;
  Dyadic checked_up_to;          // pieces compared on [0, checked_up_to)
  Dyadic identity_from;          // both maps are identity on [identity_from, 1]
  std::optional<Dyadic> first_disagreement;
};

WindowComparison compare_on_window(const OmegaPLMap& a, const OmegaPLMap& b);

/// Restriction of the stored prefix to [0, window); throws TruncationExceeded
/// if the map is not known that far.
std::vector<Piece> restrict_to(const OmegaPLMap& f, const Dyadic& window);

}  // namespace bclab
