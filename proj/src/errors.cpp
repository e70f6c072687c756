#include "hpzero/errors.hpp"

namespace hpzero {

CapExceeded::CapExceeded(int w, long long nnz, long long cap_)
    : std::runtime_error("matrix cap exceeded in weight " + std::to_string(w) +
                         ": " + std::to_string(nnz) + " nonzeros > cap " +
                         std::to_string(cap_)),
      weight(w),
      nonzeros(nnz),
      cap(cap_) {}

}  // namespace hpzero
