#include "quatcy/linalg.hpp"

namespace quatcy {

int matrix_rank(const Field& field, Matrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && field.is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Element inv = field.inv(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (field.is_zero(rows[r][c])) continue;
      const Element factor = field.mul(rows[r][c], inv);
      for (std::size_t cc = c; cc < cols; ++cc)
        rows[r][cc] = field.sub(rows[r][cc], field.mul(factor, rows[rank][cc]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace quatcy
