#pragma once

namespace ptspectra {

/// Worker count for the OpenMP kernels: PTSPECTRA_THREADS when set to a positive
/// integer, capped at the OpenMP maximum; otherwise the OpenMP maximum.
int worker_count();

} // namespace ptspectra
