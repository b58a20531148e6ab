#include "apolar/util.hpp"

namespace apolar {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    std::int64_t acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;  // exact at every step
    }
    return acc;
}

}  // namespace apolar
