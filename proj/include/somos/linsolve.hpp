#ifndef SOMOS_LINSOLVE_HPP
#define SOMOS_LINSOLVE_HPP

#include <vector>

#include "somos/rational.hpp"

namespace somos {

// Exact solve of M x = rhs for square M over the rationals. Rows are scaled
// to integers and eliminated fraction-free (Bareiss) to control coefficient
// growth; a singular system throws singular_matrix_error carrying rank and
// kernel dimension.
std::vector<Rational> solve_linear_exact(std::vector<std::vector<Rational>> M,
                                         std::vector<Rational> rhs);

}

#endif
