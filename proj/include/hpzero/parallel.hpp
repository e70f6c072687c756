#pragma once

#include <functional>
#include <vector>

namespace hpzero {

// Runs task(item) over all items on `workers` threads (0 = hardware
// concurrency), handing out items in the given order.  Callers sort
// heaviest-first so the stragglers are small.  The first exception thrown by
// any task is rethrown after all threads join.
void parallel_for_items(const std::vector<int>& items, int workers,
                        const std::function<void(int)>& task);

}  // namespace hpzero
