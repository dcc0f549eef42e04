#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "credal/compose.hpp"
#include "credal/credal.hpp"
#include "credal/io.hpp"
#include "credal/polytope.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw credal::ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw credal::ParseError("cannot write file: " + path);
    out << text;
}

credal::CredalDocument load(const std::string& path) {
    return credal::parse_credal(read_file(path));
}

// Any input file yields a credal set; H files go through vertex enumeration.
credal::CredalSet load_set(const std::string& path) {
    credal::CredalDocument doc = load(path);
    if (doc.set) return *doc.set;
    return credal::CredalSet(doc.scope, credal::h_to_v(*doc.system));
}

credal::Distribution load_singleton(const std::string& path, const char* what) {
    credal::CredalSet m = load_set(path);
    if (m.hull().points.size() != 1)
        throw credal::InvariantViolationError(std::string(what) + " must contain exactly one row, " +
                                              path + " has " +
                                              std::to_string(m.hull().points.size()));
    return credal::Distribution(m.scope(), m.hull().points[0]);
}

// Reorders b onto a's scope when the two scopes hold the same variables.
credal::CredalSet align_to(const credal::CredalSet& b, const credal::Scope& target) {
    if (b.scope() == target) return b;
    if (!credal::is_sub_scope(b.scope(), target) || !credal::is_sub_scope(target, b.scope()))
        throw credal::ScopeMismatchError("the two files describe different variable sets");
    return credal::CredalSet(target,
                             credal::image(b.hull(), credal::marginal_map(b.scope(), target)));
}

int check_result(bool ok) {
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

struct OutputOptions {
    std::string out_path;
    int digits = -1;  // -1 = exact emission

    std::optional<int> digits_opt() const {
        return digits >= 0 ? std::optional<int>(digits) : std::nullopt;
    }
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("-o,--output", opts.out_path, "Output file (default: stdout)");
    cmd->add_option("--digits", opts.digits, "Emit rounded decimals with this many digits")
        ->check(CLI::Range(0, 50));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact credal-set calculus: composition, marginals, extensions, projections"};
    app.require_subcommand(1);

    std::string in_a, in_b, trace_path, to_rep;
    std::vector<std::string> onto;
    OutputOptions out;

    CLI::App* compose = app.add_subcommand("compose", "Compose two credal sets (A |> B)");
    compose->add_option("A", in_a, "First operand (V or H file)")->required();
    compose->add_option("B", in_b, "Second operand (V or H file)")->required();
    compose->add_option("--trace", trace_path, "Also write the composition trace here");
    add_output_flags(compose, out);

    CLI::App* marg = app.add_subcommand("marginalize", "Marginalize onto a sub-scope");
    marg->add_option("A", in_a, "Input credal file")->required();
    marg->add_option("--onto", onto, "Comma-separated variable names")
        ->required()
        ->delimiter(',');
    add_output_flags(marg, out);

    CLI::App* extend = app.add_subcommand("extend", "Vacuous extension onto a larger scope");
    extend->add_option("A", in_a, "Input credal file")->required();
    extend
        ->add_option("--onto", onto,
                     "Comma-separated variable names; each must be declared in the file")
        ->required()
        ->delimiter(',');
    add_output_flags(extend, out);

    CLI::App* check = app.add_subcommand("check", "Decide a predicate; prints true/false");
    check->require_subcommand(1);
    CLI::App* projective = check->add_subcommand("projective", "Do the common marginals coincide?");
    projective->add_option("A", in_a)->required();
    projective->add_option("B", in_b)->required();
    CLI::App* equal_cmd = check->add_subcommand("equal", "Do the two files describe the same set?");
    equal_cmd->add_option("A", in_a)->required();
    equal_cmd->add_option("B", in_b)->required();
    CLI::App* abscont =
        check->add_subcommand("abscont", "Is P absolutely continuous with respect to Q?");
    abscont->add_option("P", in_a, "Singleton V file")->required();
    abscont->add_option("Q", in_b, "Singleton V file")->required();

    CLI::App* convert = app.add_subcommand("convert", "Convert between V and H representations");
    convert->add_option("A", in_a, "Input credal file")->required();
    convert->add_option("--to", to_rep, "Target representation")
        ->required()
        ->check(CLI::IsMember({"v", "h"}));
    add_output_flags(convert, out);

    CLI::App* project = app.add_subcommand("project", "Euclidean projection of a point onto a set");
    project->add_option("POINT", in_a, "Singleton V file with the point to project")->required();
    project->add_option("A", in_b, "Target credal file")->required();
    add_output_flags(project, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        std::cerr << "error[USAGE]: " << e.what() << "\n";
        return 2;
    }

    try {
        if (compose->parsed()) {
            credal::CredalSet a = load_set(in_a);
            credal::CredalSet b = load_set(in_b);
            credal::CompositionTrace trace;
            credal::CredalSet result = credal::compose(a, b, trace);
            write_output(credal::emit_credal(result, out.digits_opt()), out.out_path);
            if (!trace_path.empty())
                write_output(credal::emit_trace(trace, out.digits_opt()), trace_path);
            return 0;
        }
        if (marg->parsed()) {
            credal::CredalSet a = load_set(in_a);
            credal::CredalSet result = credal::marginalize(a, credal::sub_scope(a.scope(), onto));
            write_output(credal::emit_credal(result, out.digits_opt()), out.out_path);
            return 0;
        }
        if (extend->parsed()) {
            credal::CredalDocument doc = load(in_a);
            credal::CredalSet a = doc.set ? *doc.set
                                          : credal::CredalSet(doc.scope,
                                                              credal::h_to_v(*doc.system));
            credal::Scope target = credal::sub_scope(doc.declared, onto);
            credal::CredalSet result = credal::vacuous_extend(a, target);
            write_output(credal::emit_credal(result, out.digits_opt()), out.out_path);
            return 0;
        }
        if (projective->parsed())
            return check_result(credal::is_projective(load_set(in_a), load_set(in_b)));
        if (equal_cmd->parsed()) {
            credal::CredalSet a = load_set(in_a);
            credal::CredalSet b = align_to(load_set(in_b), a.scope());
            return check_result(credal::equal(a.hull(), b.hull()));
        }
        if (abscont->parsed()) {
            credal::Distribution p = load_singleton(in_a, "P");
            credal::Distribution q = load_singleton(in_b, "Q");
            return check_result(credal::abs_continuous(p, q));
        }
        if (convert->parsed()) {
            credal::CredalDocument doc = load(in_a);
            if (to_rep == "v") {
                credal::CredalSet result =
                    doc.set ? *doc.set
                            : credal::CredalSet(doc.scope, credal::h_to_v(*doc.system));
                write_output(credal::emit_credal(result, out.digits_opt()), out.out_path);
            } else {
                credal::HalfspaceSystem sys =
                    doc.set ? credal::v_to_h(doc.set->hull()) : credal::minimal_h(*doc.system);
                write_output(credal::emit_credal(doc.scope, sys), out.out_path);
            }
            return 0;
        }
        if (project->parsed()) {
            credal::Distribution p = load_singleton(in_a, "POINT");
            credal::CredalSet a = load_set(in_b);
            credal::CredalSet aligned_point =
                align_to(credal::CredalSet(p.scope, std::vector<credal::Point>{p.masses}),
                         a.scope());
            credal::Point proj =
                credal::euclidean_project(aligned_point.hull().points[0], a.hull());
            credal::CredalSet result(a.scope(), std::vector<credal::Point>{std::move(proj)});
            write_output(credal::emit_credal(result, out.digits_opt()), out.out_path);
            return 0;
        }
    } catch (const credal::Error& e) {
        std::cerr << "error[" << credal::error_code_name(e.code()) << "]: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
