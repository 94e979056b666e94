#ifndef SPARSEBSS_PREPROCESS_HPP
#define SPARSEBSS_PREPROCESS_HPP

#include "sparsebss/types.hpp"

namespace sparsebss {

struct WhitenResult {
  SignalMatrix whitened;      // rows pairwise orthogonal, unit norm
  WhiteningMatrix transform;  // whitened.data == transform.entries * input.data
};

/// Classical Gram-Schmidt over channel rows in order 0..N-1, each residual
/// normalised to unit amplitude. The mean is deliberately not subtracted
/// first: differencing downstream removes dc offsets without introducing
/// correlations between the assumed sources.
///
/// Throws Error{rank_deficient} with the channel index when a residual row
/// norm falls below 1e-10 of its pre-projection norm.
WhitenResult gram_schmidt_whiten(const SignalMatrix& input);

/// Adjacent-sample difference vectors v[n] = e[n+1] - e[n] with the
/// acceptance rule: keep sample n iff max_i |v_i[n]| >= vth * vmax, where
/// vmax is the largest Euclidean vector magnitude over all M-1 steps
/// (computed before masking).
///
/// Throws Error{all_rejected} when nothing passes the threshold, including
/// the degenerate all-zero field with vth > 0.
VelocityField velocity_field(const SignalMatrix& whitened, double vth);

/// Unit headings r[n] = v[n]/|v[n]| at accepted indices. Zero-magnitude
/// accepted vectors carry no direction and are dropped; if that empties the
/// set, throws Error{empty_heading_set}.
HeadingSet headings(const VelocityField& field);

}  // namespace sparsebss

#endif
