#pragma once

// Umbrella header.

#include "campaign.hpp"
#include "errors.hpp"
#include "execute.hpp"
#include "fields.hpp"
#include "generate.hpp"
#include "invariants.hpp"
#include "jet.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "poly.hpp"
#include "presentation.hpp"
#include "rng.hpp"
#include "session.hpp"
#include "statements.hpp"
