#ifndef POLARBOUND_POLARBOUND_HPP
#define POLARBOUND_POLARBOUND_HPP

#include "polynomial.hpp"
#include "io.hpp"
#include "roots.hpp"
#include "circle_extrema.hpp"
#include "zero_structure.hpp"
#include "bounds.hpp"
#include "verify.hpp"
#include "report.hpp"

#endif  // POLARBOUND_POLARBOUND_HPP
