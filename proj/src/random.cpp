#include "ufpp/random.hpp"

#include <stdexcept>

namespace ufpp {

Instance gen_random(const RandomParams& params, std::uint64_t seed) {
  if (params.n < 0 || params.m < 1 || params.maxcap < 1 || params.maxdemand < 1)
    throw std::invalid_argument("gen_random: n >= 0 and m, maxcap, maxdemand >= 1 required");
  const bool proportional = params.profit_style == "proportional";
  if (!proportional && params.profit_style != "uniform")
    throw std::invalid_argument("gen_random: profit style must be uniform or proportional");

  XorShift64Star rng(seed);
  Instance inst;
  inst.m = params.m;
  for (i64 e = 0; e < params.m; ++e) inst.capacities.push_back(rng.uniform(1, params.maxcap));
  for (int id = 0; id < params.n; ++id) {
    Task task;
    task.id = id;
    task.s = rng.uniform(0, params.m - 1);
    task.t = rng.uniform(task.s + 1, params.m);
    const i64 b = bottleneck(inst, task).b;
    task.d = rng.uniform(1, params.maxdemand);
    for (int retry = 0; retry < 16 && task.d > b; ++retry) task.d = rng.uniform(1, params.maxdemand);
    if (task.d > b) task.d = b;
    task.w = proportional ? checked_mul(task.d, task.t - task.s) : rng.uniform(1, 100);
    inst.tasks.push_back(task);
  }
  return inst;
}

}  // namespace ufpp
