#include "qmaze/agent/policy.hpp"

#include <cmath>
#include <stdexcept>

namespace qmaze::agent {

double epsilon_at(const EpsilonSchedule& schedule, int episode) {
    if (schedule.eps_end > schedule.eps_start)
        throw std::invalid_argument("epsilon schedule requires eps_end <= eps_start");
    if (!(schedule.tau > 0.0))
        throw std::invalid_argument("epsilon schedule requires tau > 0");
    if (episode < 0) throw std::invalid_argument("episode must be >= 0");
    return schedule.eps_end +
           (schedule.eps_start - schedule.eps_end) * std::exp(-episode / schedule.tau);
}

env::Action greedy_action(const std::array<double, env::kNumActions>& q) {
    int best = 0;
    for (int a = 1; a < env::kNumActions; ++a)
        if (q[a] > q[best]) best = a;
    return static_cast<env::Action>(best);
}

env::Action select_action(const QNetwork& net, const env::Observation& obs,
                          double epsilon, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    if (unif(rng) < epsilon) {
        std::uniform_int_distribution<int> pick(0, env::kNumActions - 1);
        return static_cast<env::Action>(pick(rng));
    }
    return greedy_action(net.q_values(obs));
}

} // namespace qmaze::agent
