#include "ehc/parallel.hpp"

#include <omp.h>

namespace ehc {

int max_threads() { return omp_get_max_threads(); }

void set_threads(int count) { omp_set_num_threads(count < 1 ? 1 : count); }

}  // namespace ehc
