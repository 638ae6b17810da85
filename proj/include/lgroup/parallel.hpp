#pragma once

// Include this instead of <omp.h>; the kernels compile serially without OpenMP.

#if defined(_OPENMP)
#include <omp.h>
namespace lgroup {
constexpr bool use_omp = true;
}  // namespace lgroup
#else
#pragma GCC diagnostic ignored "-Wunknown-pragmas"
namespace lgroup {
constexpr bool use_omp = false;
}  // namespace lgroup
#define omp_get_thread_num() 0
#define omp_get_max_threads() 1
#endif

namespace lgroup {

/// Selects between the serial reference kernels and their OpenMP versions.
/// Both produce identical results; the serial path is kept for testing.
enum class Exec { serial, parallel };

}  // namespace lgroup
