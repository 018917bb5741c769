#pragma once

namespace torus {

// Kernel selection: `serial` is the reference implementation, `parallel`
// the OpenMP variant. Both must produce identical results; tests compare
// them and the bench target times them against each other.
enum class ExecPolicy {
    serial,
    parallel,
};

}  // namespace torus
