#pragma once

// Convenience header pulling in the whole library.

#include "schubert/chmod2.hpp"
#include "schubert/cli.hpp"
#include "schubert/cw.hpp"
#include "schubert/error.hpp"
#include "schubert/integer.hpp"
#include "schubert/iring.hpp"
#include "schubert/problems.hpp"
#include "schubert/schur.hpp"
#include "schubert/wring.hpp"
#include "schubert/young.hpp"
