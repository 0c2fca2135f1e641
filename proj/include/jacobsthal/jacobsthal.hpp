#pragma once

// Umbrella header.

#include "jacobsthal/rational.hpp"
#include "jacobsthal/eisenstein.hpp"
#include "jacobsthal/sequence.hpp"
#include "jacobsthal/closed_forms.hpp"
#include "jacobsthal/series.hpp"
#include "jacobsthal/sums.hpp"
#include "jacobsthal/identities.hpp"
