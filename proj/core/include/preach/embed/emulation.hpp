#pragma once

#include "preach/embed/encoding.hpp"
#include "preach/pam/pam.hpp"

namespace preach::embed {

/// PAM on [1/2, |Q|+1/2] x [0,1]^2 that performs one machine step per
/// application on encoded configurations.
///
/// One piece per (state q, leading left digit d_l, leading right digit d_r)
/// with a rule, on the box [q-1/4, q+1/4] x [d_l/k, (d_l+1)/k] x [d_r/k, (d_r+1)/k].
/// Writing b (digit d_b) and moving:
///   stay:  l' = l,               r' = r + (d_b - d_r)/k
///   right: l' = (d_b + l)/k,     r' = k r - d_r
///   left:  l' = k l - d_l,       r' = r/k + d_l/k + (d_b - d_r)/k^2
/// The state coordinate is set to the index of the next state. Accepting and
/// rejecting states without rules get identity pieces; other missing rules
/// leave the map undefined there.
pam::PamSystem buildPam(const tm::TuringMachine& m, const EncodingScheme& scheme);

}  // namespace preach::embed
