#pragma once

#include "semifrob/exact_linalg.hpp"

namespace semifrob {

/// A point of (1/p^e) M, stored as its integer numerator and the level e.
struct FracPoint {
    IntVec numerator;
    int level = 1;  // e >= 1
    Int prime = 2;

    Int q() const {
        Int out = 1;
        for (int i = 0; i < level; ++i)
            out *= prime;
        return out;
    }
};

} // namespace semifrob
