// Dense linear algebra over an exact field.
#ifndef QUATCY_LINALG_HPP
#define QUATCY_LINALG_HPP

#include <vector>

#include "quatcy/field.hpp"

namespace quatcy {

using Matrix = std::vector<std::vector<Element>>;

/// Row rank by Gaussian elimination.
int matrix_rank(const Field& field, Matrix rows);

}  // namespace quatcy

#endif  // QUATCY_LINALG_HPP
