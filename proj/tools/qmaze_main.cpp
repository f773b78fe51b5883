#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmaze/cli/commands.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t begin = 0;
    while (begin <= s.size()) {
        const auto comma = s.find(',', begin);
        const std::string item = s.substr(begin, comma - begin);
        if (!item.empty()) out.push_back(item);
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid quantum/classical deep Q-learning on grid mazes"};
    app.require_subcommand(1);

    qmaze::cli::TrainArgs train_args;
    std::uint64_t seed_flag = 0;
    std::string out_flag, maze_flag, model_flag;
    int episodes_flag = 0;
    auto* train = app.add_subcommand("train", "train a model from a config file");
    train->add_option("--config", train_args.config_path, "run config file")->required();
    auto* train_seed = train->add_option("--seed", seed_flag, "seed override");
    auto* train_out = train->add_option("--out", out_flag, "output directory override");
    auto* train_maze = train->add_option("--maze", maze_flag, "maze file override");
    auto* train_model = train->add_option("--model", model_flag, "classical or hybrid");
    auto* train_eps = train->add_option("--episodes", episodes_flag, "episode count override");
    train->add_flag("--quiet", train_args.quiet, "suppress progress output");

    qmaze::cli::EvalArgs eval_args;
    std::string eval_out;
    auto* eval = app.add_subcommand("eval", "evaluate a checkpoint and print the policy map");
    eval->add_option("--checkpoint", eval_args.checkpoint_path, "model.json path")->required();
    eval->add_option("--maze", eval_args.maze_path, "maze file")->required();
    auto* eval_out_opt = eval->add_option("--out", eval_out, "also write the map to this file");

    qmaze::cli::BenchmarkArgs bench_args;
    std::string models_csv = "classical,hybrid";
    std::string seeds_csv = "1";
    std::string bench_maze;
    int bench_episodes = 0;
    auto* bench = app.add_subcommand("benchmark", "compare architectures over seeds");
    bench->add_option("--maze-size", bench_args.maze_size, "shipped maze size (3, 4 or 5)");
    bench->add_option("--models", models_csv, "comma-separated: classical,hybrid");
    bench->add_option("--seeds", seeds_csv, "comma-separated seed list");
    auto* bench_eps = bench->add_option("--episodes", bench_episodes, "episodes per run");
    bench->add_option("--out", bench_args.out_dir, "output directory");
    auto* bench_maze_opt = bench->add_option("--maze", bench_maze, "explicit maze file");
    bench->add_option("--jobs", bench_args.jobs, "parallel training runs");
    bench->add_flag("--quiet", bench_args.quiet, "suppress per-run output");

    qmaze::cli::PlotArgs plot_args;
    auto* plot = app.add_subcommand("plot", "render epsilon/reward SVG charts from history CSVs");
    plot->add_option("csv", plot_args.csv_paths, "history.csv files")->required();
    plot->add_option("--out", plot_args.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return qmaze::cli::kExitUsage;
    }

    if (train->parsed()) {
        if (*train_seed) train_args.seed = seed_flag;
        if (*train_out) train_args.out_dir = out_flag;
        if (*train_maze) train_args.maze_path = maze_flag;
        if (*train_model) train_args.model = model_flag;
        if (*train_eps) train_args.episodes = episodes_flag;
        return qmaze::cli::cmd_train(train_args, std::cout, std::cerr);
    }
    if (eval->parsed()) {
        if (*eval_out_opt) eval_args.out_path = eval_out;
        return qmaze::cli::cmd_eval(eval_args, std::cout, std::cerr);
    }
    if (bench->parsed()) {
        bench_args.models = split_csv(models_csv);
        bench_args.seeds.clear();
        for (const auto& s : split_csv(seeds_csv)) {
            try {
                bench_args.seeds.push_back(std::stoull(s));
            } catch (const std::exception&) {
                std::cerr << "error: bad seed \"" << s << "\"\n";
                return qmaze::cli::kExitUsage;
            }
        }
        if (*bench_eps) bench_args.episodes = bench_episodes;
        if (*bench_maze_opt) bench_args.maze_path = bench_maze;
        return qmaze::cli::cmd_benchmark(bench_args, std::cout, std::cerr);
    }
    if (plot->parsed()) return qmaze::cli::cmd_plot(plot_args, std::cout, std::cerr);
    return qmaze::cli::kExitUsage;
}
