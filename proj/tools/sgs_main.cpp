// Command-line surface for the super-graph spectra library: build groups and
// graphs, decompose into H-joins, emit spectra in three provenances,
// cross-validate them, and sweep families.
//
// Exit codes: 0 success, 2 usage error, 3 validation/comparison failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sgs/families.hpp"
#include "sgs/graph.hpp"
#include "sgs/group.hpp"
#include "sgs/hjoin.hpp"
#include "sgs/isomorphism.hpp"
#include "sgs/jacobi.hpp"
#include "sgs/report_io.hpp"
#include "sgs/spectrum.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    std::string group_source;  // "cayley:PATH"
    std::string relation;
    int n = 0;
    std::string n_range;
    int precision = sgs::kDefaultPrecision;
    double tol = 1e-8;
    std::string format;
    std::string out;
    std::string provenance = "closed";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationFailure("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out, std::ios::binary);
    if (!out) throw ValidationFailure("cannot write '" + opt.out + "'");
    out << text;
}

std::string cayley_path(const std::string& source) {
    if (source.rfind("cayley:", 0) != 0)
        throw CLI::ValidationError("--group", "expected the form cayley:PATH");
    return source.substr(7);
}

std::pair<int, int> parse_range(const Options& opt) {
    if (!opt.n_range.empty()) {
        auto dots = opt.n_range.find("..");
        if (dots == std::string::npos)
            throw CLI::ValidationError("--n-range", "expected the form A..B");
        int a = std::stoi(opt.n_range.substr(0, dots));
        int b = std::stoi(opt.n_range.substr(dots + 2));
        if (a > b) throw CLI::ValidationError("--n-range", "empty range");
        return {a, b};
    }
    if (opt.n <= 0) throw CLI::ValidationError("--n", "a value of n (or --n-range) is required");
    return {opt.n, opt.n};
}

// The pipeline inputs resolved from either a built-in family or a Cayley
// table file plus a relation.
struct Instance {
    sgs::FiniteGroup group;
    sgs::Relation relation;
    std::optional<sgs::Family> family;
    int n = 0;
};

Instance resolve_instance(const Options& opt, int n) {
    Instance inst;
    inst.n = n;
    if (!opt.family.empty() && !opt.group_source.empty())
        throw CLI::ValidationError("--family/--group", "exactly one group source is required");
    if (!opt.family.empty()) {
        inst.family = sgs::parse_family(opt.family);
        inst.group = sgs::family_group(*inst.family, n);
        inst.relation = opt.relation.empty() ? sgs::family_relation(*inst.family)
                                             : sgs::parse_relation(opt.relation);
        return inst;
    }
    if (!opt.group_source.empty()) {
        inst.group = sgs::load_cayley_table(read_file(cayley_path(opt.group_source)));
        inst.relation =
            opt.relation.empty() ? sgs::Relation::Equality : sgs::parse_relation(opt.relation);
        return inst;
    }
    throw CLI::ValidationError("--family/--group", "a group source is required");
}

sgs::Graph build_graph(const Instance& inst) {
    return sgs::super_graph(sgs::commuting_graph(inst.group),
                            sgs::equivalence_partition(inst.group, inst.relation));
}

// equality relation -> true-twin parts (the maximal complete-part split);
// conjugacy/order -> the relation's own blocks
sgs::EquivalencePartition decomposition_parts(const Instance& inst, const sgs::Graph& graph) {
    if (inst.relation == sgs::Relation::Equality) return sgs::twin_partition(graph);
    return sgs::equivalence_partition(inst.group, inst.relation);
}

sgs::SpectrumReport numeric_report(const sgs::Graph& graph, double tol) {
    sgs::EigenResult eig = sgs::graph_eigenvalues(graph, tol);
    sgs::SpectrumReport r;
    r.dimension = graph.vertex_count();
    r.provenance = sgs::Provenance::Numeric;
    r.numeric_eigenvalues = std::move(eig.eigenvalues);
    return r;
}

int cmd_group(const Options& opt) {
    Instance inst = resolve_instance(opt, opt.n > 0 ? opt.n : 3);
    write_output(opt, sgs::serialize_cayley_table(inst.group));
    return 0;
}

int cmd_graph(const Options& opt) {
    Instance inst = resolve_instance(opt, opt.n);
    sgs::Graph g = build_graph(inst);
    std::string fmt = opt.format.empty() ? "dot" : opt.format;
    if (fmt == "dot")
        write_output(opt, sgs::to_dot(g));
    else if (fmt == "csv")
        write_output(opt, sgs::to_csv(g));
    else
        throw CLI::ValidationError("--format", "graph supports dot or csv");
    return 0;
}

int cmd_decompose(const Options& opt) {
    Instance inst = resolve_instance(opt, opt.n);
    sgs::Graph g = build_graph(inst);
    sgs::HJoinDecomposition d = sgs::hjoin_decompose(g, decomposition_parts(inst, g));
    std::string fmt = opt.format.empty() ? "dot" : opt.format;
    if (fmt == "dot") {
        sgs::Graph skel = d.skeleton;
        for (int i = 0; i < skel.vertex_count(); ++i)
            skel.labels[i] =
                sgs::vertex_label(d.skeleton, i) + " (" + std::to_string(d.part_sizes[i]) + ")";
        write_output(opt, sgs::to_dot(skel, "skeleton"));
    } else if (fmt == "json") {
        sgs::json parts = sgs::json::array();
        for (int i = 0; i < d.part_count(); ++i)
            parts.push_back(sgs::json{{"representative", sgs::vertex_label(d.skeleton, i)},
                                      {"size", d.part_sizes[i]},
                                      {"members", d.part_members[i]}});
        sgs::json out{{"parts", parts}, {"skeleton_dot", sgs::to_dot(d.skeleton, "skeleton")}};
        write_output(opt, out.dump(2) + "\n");
    } else {
        std::ostringstream ss;
        ss << d.part_count() << " parts:";
        for (int s : d.part_sizes) ss << " " << s;
        ss << "\n";
        write_output(opt, ss.str());
    }
    return 0;
}

sgs::SpectrumReport spectrum_for(const Options& opt, const Instance& inst) {
    if (opt.provenance == "closed") {
        if (!inst.family)
            throw CLI::ValidationError("--provenance",
                                       "closed-form spectra exist only for built-in families");
        return sgs::closed_form_spectrum(*inst.family, inst.n, opt.precision);
    }
    sgs::Graph g = build_graph(inst);
    if (opt.provenance == "quotient") {
        sgs::HJoinDecomposition d = sgs::hjoin_decompose(g, decomposition_parts(inst, g));
        return sgs::spectrum_from_decomposition(d, opt.precision);
    }
    if (opt.provenance == "numeric") return numeric_report(g, opt.tol * 1e-4);
    throw CLI::ValidationError("--provenance", "expected closed, quotient or numeric");
}

int cmd_spectrum(const Options& opt) {
    Options o = opt;
    if (o.provenance == "closed" && o.family.empty()) o.provenance = "quotient";
    Instance inst = resolve_instance(o, o.n);
    sgs::SpectrumReport r = spectrum_for(o, inst);
    std::string fmt = o.format.empty() ? "json" : o.format;
    if (fmt == "json")
        write_output(o, sgs::report_to_json(r, o.precision).dump(2) + "\n");
    else if (fmt == "table")
        write_output(o, sgs::report_to_table(r, 6));
    else if (fmt == "csv" && inst.family)
        write_output(o, sgs::sweep_csv_header() + "\n" +
                            sgs::sweep_csv_line(*inst.family, inst.n, r) + "\n");
    else
        throw CLI::ValidationError("--format", "spectrum supports json, table or csv");
    return 0;
}

int cmd_integrality(const Options& opt) {
    Options o = opt;
    if (o.provenance == "closed" && o.family.empty()) o.provenance = "quotient";
    if (o.provenance == "numeric")
        throw CLI::ValidationError("--provenance", "integrality needs an exact provenance");
    Instance inst = resolve_instance(o, o.n);
    sgs::SpectrumReport r = spectrum_for(o, inst);
    write_output(o, sgs::integrality_to_json(sgs::integrality_report(r)).dump(2) + "\n");
    return 0;
}

int cmd_sweep(const Options& opt) {
    if (opt.family.empty()) throw CLI::ValidationError("--family", "sweep requires a family");
    sgs::Family fam = sgs::parse_family(opt.family);
    auto [lo, hi] = parse_range(opt);
    std::ostringstream out;
    out << sgs::sweep_csv_header() << "\n";
    for (int n = lo; n <= hi; ++n) {
        sgs::check_family_n(fam, n);
        out << sgs::sweep_csv_line(fam, n, sgs::closed_form_spectrum(fam, n, opt.precision))
            << "\n";
    }
    write_output(opt, out.str());
    return 0;
}

int cmd_verify(const Options& opt) {
    std::ostringstream out;
    bool all_ok = true;
    if (!opt.family.empty()) {
        sgs::Family fam = sgs::parse_family(opt.family);
        auto [lo, hi] = parse_range(opt);
        for (int n = lo; n <= hi; ++n) {
            sgs::check_family_n(fam, n);
            sgs::SpectrumReport closed = sgs::closed_form_spectrum(fam, n, opt.precision);
            sgs::SpectrumReport quot = sgs::quotient_spectrum(fam, n, opt.precision);
            bool exact_ok = sgs::reports_equal(closed, quot);
            sgs::EigenResult eig = sgs::graph_eigenvalues(sgs::family_graph(fam, n));
            sgs::SpectrumComparison cmp = sgs::compare_spectra(closed, eig, opt.tol);
            bool ok = exact_ok && cmp.match;
            all_ok = all_ok && ok;
            out << (ok ? "ok " : "FAIL ") << sgs::family_name(fam) << " n=" << n << " ("
                << sgs::family_case(fam, n) << ")"
                << (exact_ok ? "" : " closed!=quotient") << " max_gap="
                << sgs::format_double(cmp.max_gap, 12) << "\n";
        }
    } else {
        Instance inst = resolve_instance(opt, opt.n);
        sgs::Graph g = build_graph(inst);
        sgs::HJoinDecomposition d = sgs::hjoin_decompose(g, decomposition_parts(inst, g));
        sgs::SpectrumReport quot = sgs::spectrum_from_decomposition(d, opt.precision);
        sgs::EigenResult eig = sgs::graph_eigenvalues(g);
        sgs::SpectrumComparison cmp = sgs::compare_spectra(quot, eig, opt.tol);
        all_ok = cmp.match;
        out << (cmp.match ? "ok " : "FAIL ") << "cayley group of order " << inst.group.order
            << " relation=" << sgs::relation_name(inst.relation)
            << " max_gap=" << sgs::format_double(cmp.max_gap, 12) << "\n";
    }
    write_output(opt, out.str());
    if (!all_ok) throw ValidationFailure("verification failed");
    return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool with_relation = true) {
    cmd->add_option("--family", opt.family,
                    "built-in family: escom-dihedral|cscom-dihedral|escom-dicyclic|cscom-dicyclic");
    cmd->add_option("--group", opt.group_source, "Cayley table source, cayley:PATH");
    if (with_relation)
        cmd->add_option("--relation", opt.relation, "equality|conjugacy|order");
    cmd->add_option("--n", opt.n, "family parameter n");
    cmd->add_option("--precision", opt.precision, "decimal digits for isolated roots")
        ->default_val(sgs::kDefaultPrecision);
    cmd->add_option("--tol", opt.tol, "numeric comparison tolerance")->default_val(1e-8);
    cmd->add_option("--format", opt.format, "output format: json|csv|table|dot");
    cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra of equality/conjugacy supercommuting graphs on finite groups"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* group = app.add_subcommand("group", "emit or validate a Cayley table");
    add_common(group, opt, false);
    CLI::App* graph = app.add_subcommand("graph", "build the A-graph or a superA graph");
    add_common(graph, opt);
    CLI::App* decompose = app.add_subcommand("decompose", "H-join decomposition of a super graph");
    add_common(decompose, opt);
    CLI::App* spectrum = app.add_subcommand("spectrum", "spectrum report of one instance");
    add_common(spectrum, opt);
    spectrum->add_option("--provenance", opt.provenance, "closed|quotient|numeric")
        ->default_val("closed");
    CLI::App* verify = app.add_subcommand(
        "verify", "closed form vs quotient vs numeric eigensolver cross-check");
    add_common(verify, opt);
    verify->add_option("--n-range", opt.n_range, "inclusive range A..B");
    CLI::App* sweep = app.add_subcommand("sweep", "closed-form sweep over a range of n, CSV");
    add_common(sweep, opt);
    sweep->add_option("--n-range", opt.n_range, "inclusive range A..B");
    CLI::App* integrality = app.add_subcommand("integrality", "integrality report of one instance");
    add_common(integrality, opt);
    integrality->add_option("--provenance", opt.provenance, "closed|quotient")
        ->default_val("closed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (group->parsed()) return cmd_group(opt);
        if (graph->parsed()) return cmd_graph(opt);
        if (decompose->parsed()) return cmd_decompose(opt);
        if (spectrum->parsed()) return cmd_spectrum(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
        if (integrality->parsed()) return cmd_integrality(opt);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const sgs::CayleyParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const sgs::GroupValidationError& e) {
        std::cerr << "invalid group (" << e.kind << "): " << e.what() << "\n";
        return kExitValidation;
    } catch (const sgs::HJoinError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const ValidationFailure& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
