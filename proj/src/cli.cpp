#include "kvl/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kvl/analysis.hpp"
#include "kvl/construction.hpp"
#include "kvl/interpolation.hpp"
#include "kvl/io.hpp"

namespace kvl {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw DomainError("empty item in list '" + text + "'");
        out.push_back(std::stoi(item));
    }
    if (out.empty())
        throw DomainError("empty list");
    return out;
}

// "1,3;2" -> [{1,3}, {2}]
std::vector<VariableSet> parse_blocks(const std::string& text) {
    std::vector<VariableSet> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        std::vector<int> vars = parse_int_list(part);
        out.emplace_back(vars.begin(), vars.end());
    }
    return out;
}

void emit(const TruthTable& f, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << serialize(f);
    else
        save_file(f, out_path);
}

int run_construct(int k, const std::string& blocks_spec, const std::string& coeffs_spec,
                  const std::string& ranges_spec, const std::string& files_spec,
                  std::uint64_t seed, const std::string& out_path, std::ostream& out) {
    std::vector<VariableSet> blocks = parse_blocks(blocks_spec);
    std::vector<int> coeffs = parse_int_list(coeffs_spec);
    if (coeffs.size() != blocks.size())
        throw PartitionError("need one coefficient per block");

    int n = 0;
    for (const VariableSet& b : blocks)
        n += static_cast<int>(b.size());

    std::vector<TruthTable> fns;
    if (!files_spec.empty()) {
        std::stringstream ss(files_spec);
        std::string path;
        while (std::getline(ss, path, ','))
            fns.push_back(load_file(path));
    } else if (!ranges_spec.empty()) {
        std::vector<int> ranges = parse_int_list(ranges_spec);
        if (ranges.size() != blocks.size())
            throw PartitionError("need one range per block");
        for (std::size_t i = 0; i < blocks.size(); ++i)
            fns.push_back(sample_with_range(k, static_cast<int>(blocks[i].size()), ranges[i],
                                            seed + i));
    } else {
        throw DomainError("construct needs --ranges or --files");
    }
    if (fns.size() != blocks.size())
        throw PartitionError("need one block function per block");

    std::vector<BlockSummand> summands;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        summands.push_back({coeffs[i], blocks[i], fns[i]});
    emit(compose_sum(k, n, summands), out_path, out);
    return 0;
}

int report(const CheckResult& result, std::ostream& out) {
    if (result.ok) {
        out << "holds\n";
        return 0;
    }
    out << "refuted: " << result.witness->to_string() << '\n';
    return 1;
}

} // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-valued logic hypercube toolkit"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a function as a modular sum");
    int k = 0;
    std::string blocks_spec, coeffs_spec, ranges_spec, files_spec, out_path;
    std::uint64_t seed = 0;
    construct->add_option("--k", k, "order of the logic")->required();
    construct->add_option("--blocks", blocks_spec, "partition, e.g. \"1,3;2\"")->required();
    construct->add_option("--coeffs", coeffs_spec, "one coefficient per block")->required();
    construct->add_option("--ranges", ranges_spec, "sample block functions with these ranges");
    construct->add_option("--files", files_spec, "load block functions from KVLF files");
    construct->add_option("--seed", seed, "sampling seed");
    construct->add_option("-o,--out", out_path, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "check a property, print a witness on failure");
    verify->set_help_flag("--help", "print help"); // frees --h for the H-function check
    std::string verify_file;
    bool check_latin = false, check_h = false;
    int hq_target = 0;
    std::string hsq_spec;
    verify->add_flag("--latin", check_latin, "Latin hypercube property");
    verify->add_flag("--h", check_h, "H-function property");
    verify->add_option("--hq", hq_target, "H(q) property for the given q");
    verify->add_option("--hsq", hsq_spec, "H(S,q) property, e.g. \"1,3;2=3,2\"");
    verify->add_option("file", verify_file, "KVLF input")->required();

    // spectrum
    auto* spectrum_cmd = app.add_subcommand("spectrum", "print Spr(M, f) as a sorted set");
    std::string vars_spec, spectrum_file;
    spectrum_cmd->add_option("--vars", vars_spec, "variable positions, e.g. \"1,3\"")->required();
    spectrum_cmd->add_option("file", spectrum_file, "KVLF input")->required();

    // identify
    auto* identify = app.add_subcommand("identify", "substitute one variable for several");
    std::string identify_vars, identify_file, identify_out;
    identify->add_option("--vars", identify_vars, "variables to identify")->required();
    identify->add_option("file", identify_file, "KVLF input")->required();
    identify->add_option("-o,--out", identify_out, "output file (default stdout)");

    // interp
    auto* interp = app.add_subcommand("interp", "polynomial form of a unary function (prime k)");
    std::string interp_file;
    interp->add_option("file", interp_file, "KVLF input")->required();

    // range
    auto* range_cmd = app.add_subcommand("range", "print Rng(f)");
    std::string range_file;
    range_cmd->add_option("file", range_file, "KVLF input")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        if (code == 0) {
            out << msg.str(); // --help
            return 0;
        }
        err << msg.str();
        return 2;
    }

    try {
        if (construct->parsed())
            return run_construct(k, blocks_spec, coeffs_spec, ranges_spec, files_spec, seed,
                                 out_path, out);
        if (verify->parsed()) {
            TruthTable f = load_file(verify_file);
            int selected = int{check_latin} + int{check_h} + int{verify->count("--hq") > 0} +
                           int{!hsq_spec.empty()};
            if (selected != 1)
                throw DomainError("verify needs exactly one of --latin, --h, --hq, --hsq");
            if (check_latin)
                return report(is_latin_hypercube(f), out);
            if (check_h)
                return report(is_h_function(f), out);
            if (verify->count("--hq") > 0)
                return report(check_hq(f, hq_target), out);
            auto eq = hsq_spec.find('=');
            if (eq == std::string::npos)
                throw DomainError("--hsq expects \"blocks=qvec\", e.g. \"1,3;2=3,2\"");
            Partition s = Partition::of(parse_blocks(hsq_spec.substr(0, eq)), f.arity());
            QVector qvec = parse_int_list(hsq_spec.substr(eq + 1));
            return report(check_hsq(f, s, qvec), out);
        }
        if (spectrum_cmd->parsed()) {
            TruthTable f = load_file(spectrum_file);
            std::vector<int> vars = parse_int_list(vars_spec);
            std::set<int> spr = spectrum(VariableSet(vars.begin(), vars.end()), f);
            out << '{';
            bool first = true;
            for (int q : spr) {
                if (!first)
                    out << ',';
                out << q;
                first = false;
            }
            out << "}\n";
            return 0;
        }
        if (identify->parsed()) {
            TruthTable f = load_file(identify_file);
            std::vector<int> vars = parse_int_list(identify_vars);
            emit(identify_variables(f, VariableSet(vars.begin(), vars.end())), identify_out,
                 out);
            return 0;
        }
        if (interp->parsed()) {
            out << interpolate_unary(load_file(interp_file)).to_string() << '\n';
            return 0;
        }
        if (range_cmd->parsed()) {
            out << range(load_file(range_file)) << '\n';
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace kvl
