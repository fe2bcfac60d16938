#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lndcert/report.hpp"

namespace {

using lndcert::ModelCheck;

constexpr int kExitAllPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lndcert::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const lndcert::RunReport& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.to_string();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw lndcert::Error("cannot write '" + out_path + "'");
    out << report.to_string();
}

struct CommonArgs {
    std::string model_path;
    std::string out_path;
    lndcert::RunOptions opts;
};

void add_value_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--degree,-d", args.opts.degree, "Ambient total-degree window");
    cmd->add_option("--word-length,-L", args.opts.word_length, "Generator word-length window");
    cmd->add_option("--iter-bound", args.opts.iter_bound, "Iteration bound for nilpotency checks");
    cmd->add_option("--cap", args.opts.cap, "Degree cap for rank witness search");
    cmd->add_option("--out,-o", args.out_path, "Write the JSON report to a file");
    cmd->add_flag("--timings", args.opts.timings, "Include per-check timings in the report");
}

int run_kind(const CommonArgs& args, std::optional<ModelCheck::Kind> filter) {
    lndcert::Model model = lndcert::parse_model(read_file(args.model_path));
    lndcert::RunReport report = lndcert::run_checks(model, filter, args.opts);
    write_output(report, args.out_path);
    if (report.ran == 0) {
        std::cerr << "error: the model contains no matching checks\n";
        return kExitInputError;
    }
    return report.all_pass ? kExitAllPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact certificates for locally nilpotent derivations of polynomial subalgebras"};
    app.require_subcommand(1);

    struct KindCommand {
        const char* name;
        const char* help;
        std::optional<ModelCheck::Kind> kind;
    };
    const std::vector<KindCommand> kinds = {
        {"check-lnd", "Run stability / local-nilpotency checks", ModelCheck::Kind::Lnd},
        {"kernel-basis", "Run bounded kernel-basis checks", ModelCheck::Kind::Kernel},
        {"ml-certificate", "Run kernel-intersection window certificates", ModelCheck::Kind::Ml},
        {"plinth", "Run plinth window and tightness checks", ModelCheck::Kind::Plinth},
        {"lndrank", "Run rank witness checks", ModelCheck::Kind::Rank},
        {"chain", "Run chain certificates", ModelCheck::Kind::Chain},
        {"valuation", "Run valuation non-membership checks", ModelCheck::Kind::Valuation},
    };

    std::vector<std::shared_ptr<CommonArgs>> arg_blocks;
    for (const KindCommand& kc : kinds) {
        auto args = std::make_shared<CommonArgs>();
        arg_blocks.push_back(args);
        CLI::App* cmd = app.add_subcommand(kc.name, kc.help);
        cmd->add_option("model", args->model_path, "Model file (DSL)")->required();
        add_value_flags(cmd, *args);
        if (std::string(kc.name) == "lndrank") {
            cmd->add_flag("--find", args->opts.force_find,
                          "Search for witness elements instead of evaluating listed ones");
        }
        std::optional<ModelCheck::Kind> kind = kc.kind;
        cmd->callback([args, kind] { std::exit(run_kind(*args, kind)); });
    }

    auto catalog_args = std::make_shared<CommonArgs>();
    std::string entry_id;
    bool list_entries = false;
    CLI::App* cat = app.add_subcommand(
        "catalog", "Run the built-in catalog (or all checks of a model file) end to end");
    cat->add_option("model", catalog_args->model_path, "Optional model file; runs all its checks");
    cat->add_option("--entry", entry_id, "Run a single catalog entry by id");
    cat->add_flag("--list", list_entries, "List catalog entry ids and exit");
    add_value_flags(cat, *catalog_args);
    cat->callback([catalog_args, &entry_id, &list_entries] {
        if (list_entries) {
            for (const lndcert::CatalogEntry& e : lndcert::catalog_entries())
                std::cout << e.id << "\n";
            std::exit(kExitAllPass);
        }
        if (!catalog_args->model_path.empty()) {
            std::exit(run_kind(*catalog_args, std::nullopt));
        }
        lndcert::RunReport report = lndcert::run_catalog(catalog_args->opts, entry_id);
        write_output(report, catalog_args->out_path);
        std::exit(report.all_pass ? kExitAllPass : kExitCheckFailed);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitAllPass : kExitInputError;
    } catch (const lndcert::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const lndcert::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitAllPass;
}
