#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triconflict/report.hpp"

namespace {

using namespace triconflict;

std::vector<std::string> split_ids(const std::string &csv) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= csv.size() && !csv.empty()) {
        std::size_t comma = csv.find(',', start);
        std::string id = csv.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!id.empty())
            out.push_back(std::move(id));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

UniverseKind parse_universe(const std::string &name) {
    return name == "agents" ? UniverseKind::agents : UniverseKind::issues;
}

ModelFamily parse_model(const std::string &name) {
    if (name == "smz")
        return ModelFamily::smz;
    if (name == "fqw")
        return ModelFamily::fqw;
    return ModelFamily::generic;
}

//! Both flags or neither; each parsed as an exact decimal in [0,1).
std::optional<ThresholdArgs> parse_thresholds(const std::string &alpha,
                                              const std::string &beta) {
    if (alpha.empty() && beta.empty())
        return std::nullopt;
    if (alpha.empty() || beta.empty())
        throw DomainError("--alpha and --beta must be given together");
    return ThresholdArgs{alpha, beta,
                         Thresholds(parse_decimal(alpha), parse_decimal(beta))};
}

struct Args {
    std::string table;
    std::string universe = "agents";
    std::string model = "smz";
    std::string subject;
    std::string property;
    std::string alpha, beta;
    std::string output = "json";
    bool printed_rejection = false;
};

void add_common(CLI::App *cmd, Args &args, bool with_universe, bool with_model) {
    cmd->add_option("--table", args.table, "situation table (.csv or .json)")
        ->required();
    if (with_universe)
        cmd->add_option("--universe", args.universe,
                        "which universe to trisect")
            ->check(CLI::IsMember({"agents", "issues"}));
    if (with_model)
        cmd->add_option("--model", args.model, "conflict model")
            ->check(CLI::IsMember({"generic", "smz", "fqw"}));
    cmd->add_option("--alpha", args.alpha, "acceptance threshold (decimal)");
    cmd->add_option("--beta", args.beta, "rejection threshold (decimal)");
    cmd->add_option("--output", args.output, "report format")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"three-way conflict analysis over situation tables"};
    app.require_subcommand(1);

    Args trisect_args, sweep_args, audit_args, compare_args;

    auto *trisect = app.add_subcommand(
        "trisect", "trisect one universe against a subject from the other");
    add_common(trisect, trisect_args, true, true);
    trisect->add_option("--subject", trisect_args.subject,
                        "comma-separated ids from the opposite universe");
    trisect->add_flag("--printed-rejection", trisect_args.printed_rejection,
                      "use the as-printed complement reading of the Boolean "
                      "rejection evaluation (generic model only)");

    auto *sweep = app.add_subcommand(
        "sweep", "trisect against every subject, in ascending mask order");
    add_common(sweep, sweep_args, true, true);

    auto *audit = app.add_subcommand(
        "audit", "exhaustively check an equivalence or invariant");
    add_common(audit, audit_args, false, false);
    audit
        ->add_option("--property", audit_args.property,
                     "partition|thm34|thm35|thm44|thm45|compose|reduce-smz|"
                     "reduce-fqw|upper-duality")
        ->required()
        ->check(CLI::IsMember({"partition", "thm34", "thm35", "thm44", "thm45",
                               "compose", "reduce-smz", "reduce-fqw",
                               "upper-duality"}));

    auto *compare = app.add_subcommand(
        "compare", "smz vs fqw region-by-region on one subject");
    add_common(compare, compare_args, true, false);
    compare
        ->add_option("--subject", compare_args.subject,
                     "comma-separated ids from the opposite universe")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(trisect)) {
            const auto src = load_table_source(trisect_args.table);
            const auto report = cmd_trisect(
                src, parse_universe(trisect_args.universe),
                parse_model(trisect_args.model), split_ids(trisect_args.subject),
                parse_thresholds(trisect_args.alpha, trisect_args.beta),
                trisect_args.printed_rejection ? RejectionReading::as_printed
                                               : RejectionReading::theorem_consistent);
            std::cout << report.render(*parse_output_format(trisect_args.output));
            return 0;
        }
        if (app.got_subcommand(sweep)) {
            const auto src = load_table_source(sweep_args.table);
            const auto report =
                cmd_sweep(src, parse_universe(sweep_args.universe),
                          parse_model(sweep_args.model),
                          parse_thresholds(sweep_args.alpha, sweep_args.beta));
            std::cout << report.render(*parse_output_format(sweep_args.output));
            return 0;
        }
        if (app.got_subcommand(audit)) {
            const auto src = load_table_source(audit_args.table);
            const auto report =
                cmd_audit(src, *parse_property(audit_args.property),
                          parse_thresholds(audit_args.alpha, audit_args.beta));
            std::cout << report.render(*parse_output_format(audit_args.output));
            return report.passed() ? 0 : 1;
        }
        const auto src = load_table_source(compare_args.table);
        auto thresholds =
            parse_thresholds(compare_args.alpha, compare_args.beta);
        if (!thresholds)
            throw DomainError("--alpha and --beta are required for compare");
        const auto report =
            cmd_compare(src, parse_universe(compare_args.universe),
                        split_ids(compare_args.subject), *thresholds);
        std::cout << report.render(*parse_output_format(compare_args.output));
        return 0;
    } catch (const TableError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}
