#include "macri/rng.hpp"

#include "macri/normal.hpp"

namespace macri {

double CounterRng::next_normal() { return normal_quantile(next_uniform()); }

}  // namespace macri
