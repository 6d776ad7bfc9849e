#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "intprob/cli.hpp"

int main(int argc, char** argv)
{
    namespace cli = intprob::cli;
    CLI::App app{"intersection probability and belief-function geometry toolkit"};
    app.require_subcommand(1);

    std::string input, output, transform = "intersection", utilities, profile = "dense";
    std::uint64_t seed = 42;
    std::size_t trials = 100, max_n = 4, size = 3;
    std::vector<std::string> labels;

    auto* transform_cmd = app.add_subcommand("transform", "apply a probability transform to a document");
    transform_cmd->add_option("--input", input, "mass or interval document")->required();
    transform_cmd->add_option("--transform", transform, "transform name");
    transform_cmd->add_option("--output", output, "output path (default stdout)");

    auto* geometry_cmd = app.add_subcommand("geometry", "export credal-set geometry of a mass function");
    geometry_cmd->add_option("--input", input, "mass document")->required();
    geometry_cmd->add_option("--output", output, "output path (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "run the randomized identity suites");
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--max-n", max_n);

    auto* decide_cmd = app.add_subcommand("decide", "rank options by expected utility");
    decide_cmd->add_option("--input", input, "mass or interval document")->required();
    decide_cmd->add_option("--utilities", utilities, "option -> {label: payoff}")->required();
    decide_cmd->add_option("--transform", transform, "transform name");

    auto* random_cmd = app.add_subcommand("random", "generate a random mass document");
    random_cmd->add_option("--seed", seed);
    random_cmd->add_option("--profile", profile, "dense, singleton-free or k-additive:K");
    random_cmd->add_option("--size", size, "frame size (labels x1..xn)");
    random_cmd->add_option("--labels", labels, "explicit frame labels")->delimiter(',');
    random_cmd->add_option("--output", output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::parse_failure;
    }

    if (transform_cmd->parsed())
        return cli::cmd_transform(input, transform, output, std::cout, std::cerr);
    if (geometry_cmd->parsed())
        return cli::cmd_geometry(input, output, std::cout, std::cerr);
    if (verify_cmd->parsed())
        return cli::cmd_verify(seed, trials, max_n, std::cout, std::cerr);
    if (decide_cmd->parsed())
        return cli::cmd_decide(input, utilities, transform, std::cout, std::cerr);
    try {
        const auto frame = labels.empty() ? intprob::Frame::of_size(size) : intprob::Frame(labels);
        return cli::cmd_random(frame, seed, profile, output, std::cout, std::cerr);
    } catch (const intprob::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::domain_failure;
    }
}
