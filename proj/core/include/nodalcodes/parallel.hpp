#pragma once

namespace nodalcodes {

/// Worker count for internal parallel loops: hardware concurrency, capped by the
/// NODALCODES_THREADS environment variable when it holds a positive integer.
unsigned worker_threads();

}  // namespace nodalcodes
