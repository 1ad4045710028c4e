#pragma once

// Target algebras and coalgebras of the builtin worked examples.

#include "linfmap/coalg.hpp"
#include "linfmap/linf.hpp"

namespace linfmap::examples {

/// Regular-sequence space: z (1), u_i (4i-2), y_i (2i-1) for i ≤ i_max, with
/// ℓ_{2i}(z,…,z) = -u_i and ℓ_2(y_i,y_i) = u_i.
LInfinity regular_sequence_target(int i_max);

/// CP^{n+1} # CP^{n+1}: a, b (1), c (2), v (2n); ℓ_2(a,b) = c, ℓ_{n+1}(a^{n+1}) = ℓ_{n+1}(b^{n+1}) = v.
LInfinity connected_sum_target(int n);

/// a_1, b_2, r_2, s_6 with ℓ_3(a,b,r) = s as the only bracket.
LInfinity s3y_target();

/// Free Lie algebra on a1, a2 (degree 2) modulo brackets of length ≥ 4, in the basis
/// a1, a2, a12 = [a1,a2], a112 = [a1,a12], a212 = [a2,a12].
LInfinity free_lie_target();

}  // namespace linfmap::examples
