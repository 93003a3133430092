// Command line front end: enumeration, statistics, the bijections, the
// exhaustive verification suites, the fan/triangulation counts, fiber tables
// and diagram rendering.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cnest/cnest.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"set partitions of the classical types: statistics, bijections, verification"};
    app.require_subcommand(1);

    std::string type_str = "C";
    int rank = 3;
    std::string format = "table";
    int cap = 6;
    int jobs = 1;
    app.add_option("--type", type_str, "partition type: A, B, C or D")->capture_default_str();
    app.add_option("--rank", rank, "rank n")->capture_default_str();
    app.add_option("--format", format, "output format: json, csv or table")
        ->capture_default_str();
    app.add_option("--cap", cap, "enumeration cap")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads for sweeps")->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "list all partitions of a type and rank");

    auto* stats = app.add_subcommand("stats", "pair statistics per partition");
    std::string stats_in;
    stats->add_option("--in", stats_in, "single partition record instead of the enumeration");

    auto* map_cmd = app.add_subcommand("map", "apply a bijection to one partition");
    std::string bijection = "swap", map_in = "-", map_out = "-";
    map_cmd->add_option("--bijection", bijection, "swap, swapB or maxswap")
        ->capture_default_str();
    map_cmd->add_option("--in", map_in, "input partition record (file or '-')");
    map_cmd->add_option("--out", map_out, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run exhaustive verification suites");
    std::vector<std::string> suites;
    bool verify_all = false;
    verify->add_option("--suite", suites, "suite names");
    verify->add_flag("--all", verify_all, "run every suite at its default rank");

    auto* count = app.add_subcommand("count", "triangulation and fan counts");
    std::string object = "triangulations";
    int kval = 1;
    bool table_all = false;
    count->add_option("--object", object, "triangulations or fans")->capture_default_str();
    count->add_option("--k", kval, "chain statistic")->capture_default_str();
    count->add_flag("--table", table_all, "print all k");

    auto* table = app.add_subcommand("table", "opener/closer fiber distribution table");

    auto* render = app.add_subcommand("render", "draw a partition or filling");
    std::string render_in = "-", render_order = "nesting", render_what = "partition";
    render->add_option("--in", render_in, "input record (file or '-')");
    render->add_option("--object", render_what, "partition or filling")->capture_default_str();
    render->add_option("--order", render_order, "nesting or crossing diagram")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        const cnest::Ctype type = cnest::ctype_from_string(type_str);

        if (*enumerate) {
            std::size_t id = 0;
            cnest::for_each_partition(type, rank, [&](const cnest::SetPartition& p) {
                if (format == "csv")
                    std::cout << cnest::stats_csv_row(p, id++) << '\n';
                else
                    std::cout << p.to_json() << '\n';
            }, cap);
            return 0;
        }

        if (*stats) {
            std::cout << "type,n,id,crossings,nestings,maxcross,maxnest,op,cl\n";
            if (!stats_in.empty()) {
                auto p = cnest::SetPartition::from_json(slurp(stats_in));
                std::cout << cnest::stats_csv_row(p, 0) << '\n';
            } else {
                std::size_t id = 0;
                cnest::for_each_partition(type, rank, [&](const cnest::SetPartition& p) {
                    std::cout << cnest::stats_csv_row(p, id++) << '\n';
                }, cap);
            }
            return 0;
        }

        if (*map_cmd) {
            auto p = cnest::SetPartition::from_json(slurp(map_in));
            cnest::SetPartition q = bijection == "swap"    ? cnest::swap_map(p)
                                    : bijection == "swapB" ? cnest::swap_map_B(p)
                                    : bijection == "maxswap"
                                        ? cnest::maxswap_map(p)
                                        : throw std::invalid_argument("unknown bijection: " +
                                                                      bijection);
            emit(map_out, q.to_json() + "\n");
            return 0;
        }

        if (*verify) {
            if (verify_all) suites = cnest::suite_names();
            if (suites.empty()) throw std::invalid_argument("no suite selected");
            bool ok = true;
            for (const auto& name : suites) {
                int n = verify_all ? std::min(rank, name == "fans-triangulations" ? 4 : rank)
                                   : rank;
                auto rep = cnest::verify_suite(name, type, n, cap, jobs);
                ok = ok && rep.pass();
                std::cout << rep.summary() << "  (" << (int)rep.ms << " ms)\n";
            }
            return ok ? 0 : 1;
        }

        if (*count) {
            auto one = [&](int k) -> long long {
                if (object == "triangulations")
                    return cnest::count_k_triangulations(rank, k, jobs, std::max(cap, 5));
                if (object == "fans") return cnest::count_symmetric_fans(rank, k, std::max(cap, 6));
                throw std::invalid_argument("unknown object: " + object);
            };
            if (table_all) {
                std::cout << "k,count\n";
                for (int k = 0; k <= rank; ++k) std::cout << k << ',' << one(k) << '\n';
            } else {
                std::cout << one(kval) << '\n';
            }
            return 0;
        }

        if (*table) {
            std::cout << cnest::distribution_table(type, rank, cap).to_csv();
            return 0;
        }

        if (*render) {
            const auto fmt = cnest::render_format_from_string(
                format == "table" ? std::string("ascii") : format);
            const std::string text = slurp(render_in);
            if (render_what == "filling")
                std::cout << cnest::render_filling(cnest::Filling::from_text(text), fmt);
            else
                std::cout << cnest::render_partition(
                    cnest::SetPartition::from_json(text),
                    render_order == "crossing" ? cnest::Order::crossing : cnest::Order::nesting,
                    fmt);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
