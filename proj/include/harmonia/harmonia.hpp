#pragma once

#include "rational.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "linalg.hpp"
#include "liealg.hpp"
#include "invariants.hpp"
#include "harmonics.hpp"
#include "repthy.hpp"
#include "stabilizers.hpp"
#include "report.hpp"
#include "verify.hpp"
