#ifndef NCPAIR_NCPAIR_HPP
#define NCPAIR_NCPAIR_HPP

#include "bitstring.hpp"
#include "bounds.hpp"
#include "catalan_words.hpp"
#include "count.hpp"
#include "ginibre.hpp"
#include "pairing.hpp"
#include "parallel.hpp"
#include "phi.hpp"
#include "svg.hpp"
#include "trees.hpp"
#include "verify.hpp"

#endif  // NCPAIR_NCPAIR_HPP
