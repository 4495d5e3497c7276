#ifndef TROPLEX_TROPLEX_HPP
#define TROPLEX_TROPLEX_HPP

#include "troplex/exactalg.hpp"
#include "troplex/laurent.hpp"
#include "troplex/polymatrix.hpp"
#include "troplex/fpgroup.hpp"
#include "troplex/jumploci.hpp"
#include "troplex/sphere.hpp"
#include "troplex/tropical.hpp"
#include "troplex/bnsreport.hpp"
#include "troplex/io.hpp"

#endif  // TROPLEX_TROPLEX_HPP
