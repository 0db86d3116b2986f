#include "bowlcert/interval.hpp"

// All interval operations are header-inline; this translation unit exists so
// the library target has a home for the module and future non-inline pieces.

namespace bowlcert {

static_assert(sizeof(Interval) == 2 * sizeof(double));

}  // namespace bowlcert
