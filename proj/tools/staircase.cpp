// staircase: concave and super-concave partitions from the command line.
//
//   staircase check 4,4,2,2
//   staircase count concave 0..20 --format bfile
//   staircase series Qr --r 3
//   staircase render 4,4,2,2 --with-closure
//   staircase asymptotic 1000 10000 100000
//
// Exit codes: 0 success, 1 usage or parse error, 2 internal check failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <staircase/commands.hpp>
#include <staircase/genfun.hpp>
#include <staircase/records.hpp>

namespace
{

struct CommonOptions {
    std::string format = "plain";
    std::string out;
    std::optional<std::size_t> r;
    std::size_t trunc = 20;
    bool expensive = false;
};

void add_common(CLI::App &cmd, CommonOptions &opts)
{
    cmd.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv", "bfile"}))
        ->capture_default_str();
    cmd.add_option("--out", opts.out, "Write output to FILE instead of stdout");
    cmd.add_option("--r", opts.r, "At most R parts");
    cmd.add_option("--trunc", opts.trunc, "Truncation order N of a series")->capture_default_str();
    cmd.add_flag("--expensive", opts.expensive, "Allow multivariate numerators past r = 4");
}

class Output
{
public:
    explicit Output(const std::string &path)
    {
        if (!path.empty()) {
            m_file = std::make_unique<std::ofstream>(path);
            if (!*m_file) {
                throw staircase::UsageError("cannot open '" + path + "' for writing");
            }
        }
    }
    std::ostream &stream()
    {
        return m_file ? *m_file : std::cout;
    }

private:
    std::unique_ptr<std::ofstream> m_file;
};

} // namespace

int main(int argc, char **argv)
{
    using namespace staircase;

    CLI::App app{"Concave and super-concave integer partitions"};
    app.require_subcommand(1);

    CommonOptions opts;

    auto *check = app.add_subcommand("check", "Concavity predicates and integral closure of a partition");
    std::string partition_text;
    check->add_option("partition", partition_text, "Parts, e.g. 4,4,2,2 (empty or 0 for the empty partition)")
        ->required();
    add_common(*check, opts);

    auto *count = app.add_subcommand("count", "Count partitions of each n in a range");
    std::string kind;
    std::string range_text;
    count->add_option("kind", kind, "all, concave or superconcave")->required();
    count->add_option("range", range_text, "N or A..B")->required();
    add_common(*count, opts);

    auto *series = app.add_subcommand("series", "Generating functions and numerators");
    std::string series_name;
    series->add_option("name", series_name, "PS, PSr, PC, PCr, Qr or Qr-multi")->required();
    add_common(*series, opts);

    auto *render = app.add_subcommand("render", "Draw the diagram and its ideal");
    std::string render_text;
    std::string style = "ascii";
    bool with_closure = false;
    render->add_option("partition", render_text, "Parts, e.g. 4,4,2,2")->required();
    render->add_option("--style", style, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
    render->add_flag("--with-closure", with_closure, "Draw the integral closure alongside");
    add_common(*render, opts);

    auto *asymptotic = app.add_subcommand("asymptotic", "Compare p_sc(n) with its asymptotic estimate");
    std::vector<std::size_t> ns;
    asymptotic->add_option("n", ns, "One or more n >= 1")->required();
    add_common(*asymptotic, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Output output(opts.out);
        auto &out = output.stream();
        RecordWriter writer(out, parse_format(opts.format));
        if (check->parsed()) {
            writer.write(cmd_check(partition_text));
        } else if (count->parsed()) {
            for (const auto &row : cmd_count(kind, CountRange::parse(range_text), opts.r)) {
                writer.write(row);
            }
        } else if (series->parsed()) {
            writer.write(cmd_series(series_name, opts.r, opts.trunc, opts.expensive));
        } else if (render->parsed()) {
            out << cmd_render(render_text, style, with_closure);
        } else if (asymptotic->parsed()) {
            for (const auto &row : cmd_asymptotic(ns)) {
                writer.write(row);
            }
        }
        out.flush();
        return 0;
    } catch (const NumeratorCheckError &e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        // ParseError, UsageError, CostGuardError, FormatError
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
