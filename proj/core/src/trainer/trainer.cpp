#include "qmaze/trainer/trainer.hpp"

#include <chrono>
#include <stdexcept>

#include "qmaze/env/maze.hpp"
#include "qmaze/errors.hpp"
#include "qmaze/trainer/evaluate.hpp"

namespace qmaze::trainer {

using agent::QNetwork;
using agent::Transition;
using autodiff::Var;

TrainConfig resolve_defaults(TrainConfig config, const env::Maze& maze) {
    const int n = maze.size();
    if (config.max_steps <= 0) config.max_steps = 4 * n * n;
    if (config.replay_capacity <= 0) config.replay_capacity = 10 * n * n * n * n;
    if (config.epsilon.tau <= 0.0)
        config.epsilon.tau = std::max(1.0, config.episodes / 5.0);
    if (config.batch_size < 1) throw config_error("batch_size must be >= 1");
    if (config.batch_size > config.replay_capacity)
        throw config_error("batch_size cannot exceed replay_capacity");
    if (!(config.gamma > 0.0 && config.gamma <= 1.0))
        throw config_error("gamma must lie in (0, 1]");
    if (config.episodes < 0) throw config_error("episodes must be >= 0");
    return config;
}

double win_rate(const TrainReport& report) {
    if (report.episodes.empty()) return 0.0;
    long wins = 0;
    for (const auto& e : report.episodes) wins += e.win ? 1 : 0;
    return 100.0 * static_cast<double>(wins) / static_cast<double>(report.episodes.size());
}

Var q_loss(const QNetwork& net, const QNetwork& target_net,
           const std::vector<Transition>& batch, double gamma) {
    if (batch.empty()) throw std::invalid_argument("q_loss needs a nonempty batch");
    if (net.architecture() != target_net.architecture() ||
        net.maze_size() != target_net.maze_size())
        throw std::invalid_argument("q_loss requires matching online/target architectures");

    const agent::LeafSet leaves = net.make_leaves();
    std::vector<Var> preds;
    preds.reserve(batch.size());
    autodiff::Tensor targets({static_cast<int>(batch.size())});
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const Transition& t = batch[i];
        const Var q = net.forward(t.state, leaves);
        preds.push_back(autodiff::gather(q, static_cast<int>(t.action)));

        double bootstrap = 0.0;
        if (!t.done) {
            const auto q_next = target_net.q_values(t.next_state);
            double best = q_next[0];
            for (int a = 1; a < env::kNumActions; ++a) best = std::max(best, q_next[a]);
            bootstrap = gamma * best;
        }
        targets.values[i] = t.reward + bootstrap;
    }
    return autodiff::mse_loss(autodiff::stack(preds), autodiff::constant(std::move(targets)));
}

TrainResult train(const env::Maze& maze, const TrainConfig& config0,
                  const EpisodeCallback& on_episode) {
    const TrainConfig config = resolve_defaults(config0, maze);
    const auto wall_start = std::chrono::steady_clock::now();

    std::mt19937_64 rng(config.seed);
    QNetwork net = QNetwork::build(config.architecture, maze.size(), rng, config.qnn);
    QNetwork target_net = net.clone();
    autodiff::AdamW optimizer(net.parameter_tensors(), config.optimizer);
    agent::ReplayBuffer buffer(static_cast<std::size_t>(config.replay_capacity));

    TrainReport report;
    report.total_params = net.total_params();
    report.episodes.reserve(static_cast<std::size_t>(config.episodes));

    for (int ep = 0; ep < config.episodes; ++ep) {
        if (config.target_sync_interval > 0 && ep % config.target_sync_interval == 0)
            target_net.copy_from(net);

        const double eps = agent::epsilon_at(config.epsilon, ep);
        const auto ep_start = std::chrono::steady_clock::now();

        env::EnvState state = env::reset(maze, std::nullopt, rng);
        env::Observation obs = env::encode_observation(maze, state);
        int steps = 0;
        while (state.status == env::Status::Ongoing && steps < config.max_steps) {
            const env::Action action = agent::select_action(net, obs, eps, rng);
            env::StepResult result = env::step(maze, state, action);
            const bool done = result.state.status != env::Status::Ongoing;
            buffer.push({obs, action, result.reward, result.observation, done});

            if (buffer.size() >= static_cast<std::size_t>(config.batch_size)) {
                optimizer.zero_grad();
                const auto batch = buffer.sample(static_cast<std::size_t>(config.batch_size), rng);
                const Var loss = q_loss(net, target_net, batch, config.gamma);
                autodiff::backward(loss);
                optimizer.step();
            }

            state = std::move(result.state);
            obs = std::move(result.observation);
            ++steps;
        }

        EpisodeRecord rec;
        rec.episode = ep;
        rec.reward = state.cumulative_reward;
        rec.steps = steps;
        rec.epsilon = eps;
        rec.win = state.status == env::Status::Win;
        if (config.episode_timing) {
            rec.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - ep_start)
                         .count();
        }
        report.episodes.push_back(rec);

        if (config.eval_every > 0 && report.solved_at_episode < 0 &&
            (ep + 1) % config.eval_every == 0) {
            if (evaluate_policy(net, maze).success_fraction == 1.0)
                report.solved_at_episode = ep + 1;
        }
        if (on_episode) on_episode({report.episodes.back(), net, target_net});
    }

    report.final_success_fraction =
        config.episodes > 0 ? evaluate_policy(net, maze).success_fraction : 0.0;
    if (report.solved_at_episode < 0 && config.episodes > 0 &&
        report.final_success_fraction == 1.0)
        report.solved_at_episode = config.episodes;
    report.win_rate_pct = win_rate(report);
    report.train_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
    return {std::move(net), std::move(report)};
}

TrainResult train(const TrainConfig& config, const EpisodeCallback& on_episode) {
    if (config.maze_path.empty()) throw config_error("train config needs a maze path");
    const env::Maze maze = env::load_maze_file(config.maze_path);
    return train(maze, config, on_episode);
}

} // namespace qmaze::trainer
