#pragma once

// Shared test fixtures. Everything is exact; expected values in the tests are
// frozen from hand computations noted next to each use.

#include <cinfty/examples.hpp>

namespace fx = cinfty::examples;
