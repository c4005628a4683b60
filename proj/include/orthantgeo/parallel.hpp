#pragma once

// Worker-count policy for the OpenMP kernels.  ORTHANTGEO_THREADS caps the
// number of workers; unset means "whatever OpenMP offers".

namespace og {

int worker_count();

}  // namespace og
