#pragma once

namespace absolim {

// Enumeration sweeps (candidate audits, oracle searches, bimorphism counts)
// come in a serial reference flavor and an OpenMP flavor. Results must be
// bit-identical; tests compare the two directly.
enum class ExecMode { serial, openmp };

inline bool use_openmp(ExecMode m) {
#ifdef _OPENMP
  return m == ExecMode::openmp;
#else
  (void)m;
  return false;
#endif
}

}  // namespace absolim
