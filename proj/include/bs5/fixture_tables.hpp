#pragma once

#include "bs5/coeffs.hpp"

namespace bs5::fixtures {

// Hand-transcribed exact coefficient tables for k = 1..5, used as ground-truth
// fixtures for the recursion.
CoeffTable table_k(int k);

}  // namespace bs5::fixtures
