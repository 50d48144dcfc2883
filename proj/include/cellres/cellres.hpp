#pragma once

// Umbrella header: labeled cell complexes, the chain complexes they support,
// and the machinery for deciding when they give (minimal) free resolutions
// of monomial ideals.

#include "cell_complex.hpp"
#include "chain.hpp"
#include "constructors.hpp"
#include "homology.hpp"
#include "json_io.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "numeric.hpp"
#include "polyhedral.hpp"
#include "random_ideal.hpp"
#include "resolution.hpp"
