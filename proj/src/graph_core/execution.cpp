#include "edgecolor/execution.hpp"

#include <omp.h>

namespace edgecolor {

int available_threads() { return omp_get_max_threads(); }

} // namespace edgecolor
