#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include <algpencil/errors.hpp>
#include <algpencil/report.hpp>

using namespace algpencil;

namespace {

int exit_code_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::ParseError:
        return 1;
    case ErrorCode::NotAssociative:
    case ErrorCode::NotIndexOne:
        return 2;
    case ErrorCode::DegeneratePencil:
    case ErrorCode::BadShift:
        return 3;
    default:
        return 4;
    }
}

void emit(const Report& report, bool json_flag, const std::string& out_path) {
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw Error(ErrorCode::ParseError, "cannot write to " + out_path);
        out << report.machine.dump(2) << "\n";
    }
    if (json_flag)
        std::cout << report.machine.dump(2) << "\n";
    else
        std::cout << report.human;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of associative algebras through the characteristic pencil"};
    app.require_subcommand(1);

    std::string path, functional_arg, mu_arg, out_path, name;
    std::string h_path, hp_path, pairing_path;
    std::uint64_t seed = 0;
    bool json_flag = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", json_flag, "machine-readable JSON on stdout");
        sub->add_option("--out", out_path, "write the JSON report to a file");
    };

    CLI::App* check = app.add_subcommand("check", "associativity and unity report");
    check->add_option("path", path, "algebra document")->required();
    add_common(check);

    CLI::App* analyze = app.add_subcommand("analyze", "pencil, stabilizers, decomposition");
    analyze->add_option("path", path, "algebra document")->required();
    analyze->add_option("--functional", functional_arg, "comma-separated rationals");
    analyze->add_option("--seed", seed, "seed for sampled functionals");
    analyze->add_option("--mu", mu_arg, "explicit shift for the pencil operator");
    add_common(analyze);

    CLI::App* canon = app.add_subcommand("canon", "canonical form (dims 2 and 3)");
    canon->add_option("path", path, "algebra document")->required();
    canon->add_option("--seed", seed, "seed");
    add_common(canon);

    CLI::App* split_cmd = app.add_subcommand("split", "H + K.1 + H' splitting");
    split_cmd->add_option("path", path, "algebra document")->required();
    split_cmd->add_option("--functional", functional_arg, "comma-separated rationals");
    split_cmd->add_option("--seed", seed, "seed");
    add_common(split_cmd);

    CLI::App* build = app.add_subcommand("build", "assemble an index-1 algebra from a dual pair");
    build->add_option("h_path", h_path, "H table document")->required();
    build->add_option("hprime_path", hp_path, "H' table document")->required();
    build->add_option("pairing_path", pairing_path, "pairing matrix JSON")->required();
    add_common(build);

    CLI::App* reg = app.add_subcommand("registry", "emit a named example algebra");
    reg->add_option("name", name, "L1|L2|T2|D|C2|Z<n>|M<n>|T<n>|dsum(a,b)")->required();
    add_common(reg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            Report r = check_report(load_algebra_file(path));
            emit(r, json_flag, out_path);
            return r.machine["associative"].get<bool>() ? 0 : 2;
        }
        if (analyze->parsed()) {
            Algebra a = load_algebra_file(path);
            Functional f = choose_functional(a, functional_arg, seed);
            std::optional<Rational> mu;
            if (!mu_arg.empty()) mu = parse_rational(mu_arg);
            Report r = analyze_report(a, f, seed, mu);
            emit(r, json_flag, out_path);
            return r.machine.contains("degenerate") ? 3 : 0;
        }
        if (canon->parsed()) {
            emit(canon_report(load_algebra_file(path), seed), json_flag, out_path);
            return 0;
        }
        if (split_cmd->parsed()) {
            Algebra a = load_algebra_file(path);
            Functional f = choose_functional(a, functional_arg, seed);
            Report r = split_report(a, f);
            emit(r, json_flag, out_path);
            return r.machine["identities_all_pass"].get<bool>() ? 0 : 2;
        }
        if (build->parsed()) {
            Report r = build_report(load_algebra_file(h_path), load_algebra_file(hp_path),
                                    matrix_from_json(load_json_file(pairing_path)));
            emit(r, json_flag, out_path);
            return 0;
        }
        if (reg->parsed()) {
            Algebra a = registry(name);
            Report r{algebra_to_json(a), ""};
            std::ostringstream human;
            human << name << ": dim " << a.dim() << ", basis";
            for (const auto& n : a.basis_names()) human << " " << n;
            human << "\n";
            r.human = human.str();
            emit(r, json_flag, out_path);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error (" << e.code_name() << "): " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
