#include <udg/bruteforce.hh>
#include <udg/dpcounter.hh>
#include <udg/generate.hh>
#include <udg/geometry.hh>
#include <udg/hardnessgen.hh>
#include <udg/kernel.hh>
#include <udg/mainalgo.hh>
#include <udg/pathdecomp.hh>
#include <udg/separations.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace udg;

namespace
{
    struct CountArgs
    {
        std::string pattern, host, mode = "sub", algo = "auto";
        int s_star = 0, case1_width = 0;
    };

    auto run_count(const CountArgs & args) -> BigCount
    {
        auto pattern = read_udg(args.pattern);
        auto host = read_udg(args.host);
        auto p = adjacency_graph(pattern);
        Mode mode = parse_mode(args.mode);

        std::string algo = args.algo;
        if (algo == "auto")
            algo = host.size() <= 12 ? "brute" : "main";

        if (algo == "brute")
            return brute::count_maps(p, adjacency_graph(host), mode);
        if (algo == "dp")
            return dp::count(p, host, mode);
        if (algo == "kernel")
            return kernel::kernelized_count(p, host, mode, kernel::dp_solver());
        if (algo == "main") {
            mainalgo::Options options;
            options.s_star = args.s_star;
            options.case1_width = args.case1_width;
            return mainalgo::count(p, host, mode, options);
        }
        throw InputError{"unknown algorithm '" + args.algo + "'"};
    }

    auto add_count_options(CLI::App * cmd, CountArgs & args) -> void
    {
        cmd->add_option("--pattern", args.pattern, "pattern .udg file")->required();
        cmd->add_option("--host", args.host, "host .udg file")->required();
        cmd->add_option("--mode", args.mode, "sub or ind")->check(CLI::IsMember({"sub", "ind"}));
        cmd->add_option("--algo", args.algo, "auto, brute, dp, kernel or main")
            ->check(CLI::IsMember({"auto", "brute", "dp", "kernel", "main"}));
        cmd->add_option("--s-star", args.s_star, "sparsity cap for --algo main (0 = default)");
        cmd->add_option("--case1-width", args.case1_width, "widest strip solved directly by --algo main (0 = default)");
    }

    auto write_text(const std::string & path, const std::string & text) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw InputError{"cannot write " + path};
        out << text;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Counting and detecting unit disk graph patterns in unit disk graphs"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto count_cmd = app.add_subcommand("count", "print |sub(P,G)| or |ind(P,G)|");
    add_count_options(count_cmd, count_args);

    CountArgs detect_args;
    auto detect_cmd = app.add_subcommand("detect", "print yes if the pattern occurs, no otherwise");
    add_count_options(detect_cmd, detect_args);

    std::string input;
    double tol = 1e-9;
    auto ply_cmd = app.add_subcommand("ply", "print the ply of a drawing");
    ply_cmd->add_option("--input", input, ".udg file")->required();
    ply_cmd->add_option("--tol", tol, "geometric tolerance");

    auto pw_cmd = app.add_subcommand("pathwidth", "print the width of the strip path decomposition");
    pw_cmd->add_option("--input", input, ".udg file")->required();

    int order = 0;
    bool table = false;
    auto sigma_cmd = app.add_subcommand("sigma", "print the number of separation classes of order <= s");
    sigma_cmd->add_option("--pattern", input, "pattern .udg file")->required();
    sigma_cmd->add_option("--s", order, "order cap")->required();
    sigma_cmd->add_flag("--table", table, "also list the classes");

    CountArgs kernel_args;
    std::string solver = "dp";
    auto kernel_cmd = app.add_subcommand("kernelize", "count through the shifting kernel and report block statistics");
    kernel_cmd->add_option("--pattern", kernel_args.pattern, "pattern .udg file")->required();
    kernel_cmd->add_option("--host", kernel_args.host, "host .udg file")->required();
    kernel_cmd->add_option("--mode", kernel_args.mode, "sub or ind")->check(CLI::IsMember({"sub", "ind"}));
    kernel_cmd->add_option("--solver", solver, "dp, brute or main")->check(CLI::IsMember({"dp", "brute", "main"}));

    int n = 0, max_ply = 1;
    long width = 1, height = 1;
    std::uint64_t seed = 0;
    std::string output;
    auto gen_cmd = app.add_subcommand("gen-random", "emit a random drawing");
    gen_cmd->add_option("--n", n, "number of disks")->required();
    gen_cmd->add_option("--width", width, "box width")->required();
    gen_cmd->add_option("--height", height, "box height")->required();
    gen_cmd->add_option("--max-ply", max_ply, "ply bound")->required();
    gen_cmd->add_option("--seed", seed, "random seed");
    gen_cmd->add_option("--output", output, "output file (default: standard output)");

    int length = 3;
    std::string strings, out_dir = ".";
    auto hard_cmd = app.add_subcommand("gen-hardness", "emit pattern.udg, host.udg and manifest.txt for a String 3-Groups instance");
    hard_cmd->add_option("--n", n, "strings per list for random instances");
    hard_cmd->add_option("--length", length, "string length for random instances");
    hard_cmd->add_option("--seed", seed, "random seed");
    hard_cmd->add_option("--strings", strings, "file with lines 'A <bits>', 'B <bits>', 'C <bits>'");
    hard_cmd->add_option("--out-dir", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "udgcount: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*count_cmd)
            std::cout << run_count(count_args) << "\n";
        else if (*detect_cmd)
            std::cout << (run_count(detect_args) > 0 ? "yes" : "no") << "\n";
        else if (*ply_cmd)
            std::cout << ply(read_udg(input), tol) << "\n";
        else if (*pw_cmd)
            std::cout << path_decomposition_from_box(read_udg(input)).width() << "\n";
        else if (*sigma_cmd) {
            auto p = adjacency_graph(read_udg(input));
            if (order < 0 || order > p.size())
                throw InputError{"--s must lie in 0.." + std::to_string(p.size())};
            SeparationCatalog cat(p, order);
            std::cout << cat.size() << "\n";
            if (table)
                for (int c = 0 ; c < cat.size() ; ++c) {
                    auto & cls = cat[c];
                    std::cout << "class " << c << " boundary";
                    for (int v : members(cls.representative.boundary()))
                        std::cout << " " << v;
                    std::cout << " | A";
                    for (int v : members(cls.representative.a))
                        std::cout << " " << v;
                    std::cout << " | size " << cls.size << "\n";
                }
        }
        else if (*kernel_cmd) {
            auto pattern = read_udg(kernel_args.pattern);
            auto host = read_udg(kernel_args.host);
            auto p = adjacency_graph(pattern);
            kernel::Solver leaf = solver == "brute" ? kernel::brute_solver() : kernel::dp_solver();
            if (solver == "main")
                leaf = [] (const Graph & q, const EmbeddedGraph & h, Mode m) { return mainalgo::count_direct(q, h, m); };
            kernel::Stats stats;
            auto result = kernel::kernelized_count(p, host, parse_mode(kernel_args.mode), leaf, &stats);
            std::cout << "period " << kernel::period(p.size()) << "\n"
                      << "shifting_passes " << stats.shifting_passes << "\n"
                      << "block_components " << stats.block_components << "\n"
                      << "solver_calls " << stats.solver_calls << "\n"
                      << "largest_leaf_disks " << stats.largest_leaf << "\n"
                      << "largest_leaf_side " << stats.largest_leaf_side << "\n"
                      << "count " << result << "\n";
        }
        else if (*gen_cmd) {
            if (n < 1)
                throw InputError{"--n must be positive"};
            auto text = emit_udg(gen::random_udg(n, width, height, max_ply, seed));
            if (output.empty())
                std::cout << text;
            else
                write_text(output, text);
        }
        else if (*hard_cmd) {
            hardness::S3GInstance inst;
            if (! strings.empty()) {
                std::ifstream in(strings);
                if (! in)
                    throw InputError{"cannot read " + strings};
                inst = hardness::parse_strings(in);
            }
            else {
                if (n < 1)
                    throw InputError{"--n must be positive (or give --strings)"};
                auto rng = gen::stream("gen-hardness", seed);
                inst = hardness::random_instance(n, length, rng);
            }
            auto r = hardness::build(inst);
            std::filesystem::create_directories(out_dir);
            write_udg(out_dir + "/pattern.udg", r.pattern.embedding);
            write_udg(out_dir + "/host.udg", r.host.embedding);
            write_text(out_dir + "/manifest.txt", hardness::manifest(inst) + "padded\n" + hardness::manifest(r.padded));
        }
    }
    catch (const InputError & e) {
        std::cerr << "udgcount: " << e.what() << "\n";
        return 2;
    }
    catch (const InfeasibleError & e) {
        std::cerr << "udgcount: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
