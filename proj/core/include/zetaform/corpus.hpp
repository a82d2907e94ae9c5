#pragma once

#include <random>

#include "zetaform/elementary.hpp"
#include "zetaform/reduction.hpp"

namespace zetaform {

/// Seeded random elementary sum with depth <= 3, exponents u_j <= 3, shifts
/// p_j <= 4 (the Lemma 1 property-corpus profile).
ElementarySum random_elementary_sum(std::mt19937_64& rng);

/// Seeded random nested sum with depth <= 3, pole orders <= 2, pole shifts
/// <= 3, small Delta, satisfying every Delta-normal contract, I(R_1) <= -1,
/// and the indices condition of Lemma 3 (rejection-sampled; deterministic for
/// a fixed generator state).
NestedSum random_nested_sum(std::mt19937_64& rng);

}  // namespace zetaform
