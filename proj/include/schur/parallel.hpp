#pragma once

namespace schur {

// Worker count for the strip-sweep and Monte-Carlo kernels. 0 means use the
// hardware concurrency; 1 forces the serial reference path. Results are
// identical for every setting; only throughput changes.
void set_threads(int n);
int effective_threads();

}  // namespace schur
