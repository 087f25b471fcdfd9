#pragma once

#include <doctest.h>

// doctest::Approx adds a unit scale to the magnitude, which turns small-value
// comparisons into absolute ones. Tests compare relatively.
inline doctest::Approx approx(double value) { return doctest::Approx(value).scale(0.0); }
