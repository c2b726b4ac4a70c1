// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace tev
{

// 0 means one worker per hardware thread.
int resolve_threads(int requested);

// Calls body(i) for i in [0, count) on up to `threads` workers. Indices are
// handed out in contiguous chunks, so a body that writes only slot i gives
// results independent of the thread count. The first exception is rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace tev
