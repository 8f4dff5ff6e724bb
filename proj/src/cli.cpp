#include "rainbow/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "rainbow/chromatic.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/homology.hpp"
#include "rainbow/io.hpp"
#include "rainbow/manifold.hpp"
#include "rainbow/subdivision.hpp"

namespace rainbow {
namespace {

// Raised for well-formed commands that cannot be carried out on their input.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::vector<FieldSpec> parse_fields(const std::vector<std::string>& names)
{
    std::vector<FieldSpec> fields;
    for (const auto& n : names) {
        const FieldSpec F = FieldSpec::parse(n);
        if (std::find(fields.begin(), fields.end(), F) == fields.end()) fields.push_back(F);
    }
    if (fields.empty()) fields.push_back(FieldSpec::rationals());
    return fields;
}

Instance load(const std::string& path, Io& io)
{
    Instance inst = parse_instance(path, io.in);
    for (const auto& w : inst.warnings) io.err << "warning: " << path << ": " << w << "\n";
    return inst;
}

const Coloring& need_coloring(const Instance& inst, const std::string& path)
{
    if (!inst.coloring) throw UsageError(path + ": instance has no 'classes' (a coloring is required)");
    return *inst.coloring;
}

void emit(const std::string& text, const std::string& out_path, Io& io)
{
    if (out_path.empty() || out_path == "-") {
        io.out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + out_path + "'");
    file << text;
    if (!file) throw UsageError("error writing '" + out_path + "'");
}

std::string simplex_text(const std::vector<std::string>& labels)
{
    std::string s = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
    return s + "}";
}

std::string subset_text(const std::vector<std::size_t>& S)
{
    std::string s = "{";
    for (std::size_t i = 0; i < S.size(); ++i) s += (i ? "," : "") + std::to_string(S[i]);
    return s + "}";
}

std::string evidence_text(const Evidence& e)
{
    std::ostringstream os;
    if (e.field.empty()) {
        if (!e.subset.empty()) os << "S = " << subset_text(e.subset) << ": ";
        os << e.note << " = " << e.value;
        return os.str();
    }
    if (!e.subset.empty()) os << "S = " << subset_text(e.subset) << ": ";
    os << "β̃_" << e.degree << "(" << e.note << ") = " << e.value << " over " << e.field;
    return os.str();
}

int cmd_gen(const std::string& name, const std::string& out_path, Io& io)
{
    const NamedComplex nc = generate(name);
    emit(instance_to_json(nc.complex, std::nullopt, nc.name), out_path, io);
    return k_exit_ok;
}

int cmd_info(const std::string& path, Io& io)
{
    const Instance inst = load(path, io);
    const auto& K = inst.complex;
    auto& os = io.out;
    if (inst.name) os << "name: " << *inst.name << "\n";
    os << "vertices: " << K.num_vertices() << "\n";
    os << "facets: " << K.facets().size() << "\n";
    os << "dimension: " << K.dim() << "\n";
    os << "f-vector: (";
    for (int k = 0; k <= K.dim(); ++k) os << (k ? ", " : "") << K.num_faces(k);
    os << ")\n";
    os << "euler characteristic: " << euler_characteristic(K) << "\n";
    os << "pure: " << (is_pure(K) ? "yes" : "no") << "\n";
    os << "connected components: " << connected_components(K).size() << "\n";
    os << "pseudomanifold: " << pseudomanifold_report(K).summary() << "\n";
    if (inst.coloring) {
        const auto& C = *inst.coloring;
        os << "color classes: " << C.num_classes() << " (sizes";
        for (std::size_t i = 0; i < C.num_classes(); ++i) os << " " << C[i].size();
        os << ")\n";
        os << "rainbow simplices: " << rainbow_simplices(K, C).size() << "\n";
    }
    return k_exit_ok;
}

int cmd_betti(const std::string& path, const std::vector<std::string>& field_names, Io& io)
{
    const Instance inst = load(path, io);
    for (const auto& F : parse_fields(field_names))
        io.out << F.name() << ": β̃ = " << reduced_betti(inst.complex, F).to_string() << "\n";
    return k_exit_ok;
}

int cmd_relbetti(const std::string& path, const std::string& sub_path, const std::vector<std::string>& field_names,
                 Io& io)
{
    if (path == "-" && sub_path == "-") throw UsageError("only one of the inputs can be read from stdin");
    const Instance K = load(path, io);
    const Instance L = load(sub_path, io);
    if (!is_subcomplex(L.complex, K.complex)) throw UsageError(sub_path + " is not a subcomplex of " + path);
    const SimplicialComplex sub = rebase(L.complex, K.complex);
    for (const auto& F : parse_fields(field_names))
        io.out << F.name() << ": β(K, L) = " << relative_betti(K.complex, sub, F).to_string() << "\n";
    return k_exit_ok;
}

int cmd_sd(const std::string& path, int times, const std::string& out_path, Io& io)
{
    if (times < 1) throw UsageError("--times must be at least 1");
    const Instance inst = load(path, io);
    if (inst.complex.empty()) throw UsageError(path + ": cannot subdivide the empty complex");
    if (inst.coloring) io.err << "warning: " << path << ": coloring dropped by subdivision\n";
    const SimplicialComplex K = iterated_subdivision(inst.complex, times);
    std::optional<std::string> name;
    if (inst.name) name = "sd" + (times > 1 ? "^" + std::to_string(times) : std::string()) + "(" + *inst.name + ")";
    emit(instance_to_json(K, std::nullopt, name), out_path, io);
    return k_exit_ok;
}

int cmd_check(const std::string& path, const std::string& theorem_name, const std::vector<std::string>& field_names,
              const std::string& json_path, bool verbose, Io& io)
{
    const TheoremId theorem = parse_theorem(theorem_name);
    const auto fields = parse_fields(field_names);
    const Instance inst = load(path, io);
    const Coloring& C = need_coloring(inst, path);

    const auto start = std::chrono::steady_clock::now();
    const CheckReport report = check_theorem(inst.complex, C, theorem, fields);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    auto& os = io.out;
    os << "theorem: " << to_string(report.theorem) << "\n";
    os << "fields:";
    for (const auto& f : report.fields) os << " " << f;
    os << "\n";
    for (const auto& v : report.verdicts) {
        os << "[" << to_string(v.status) << "] " << v.id;
        if (!v.field.empty()) os << " over " << v.field;
        os << ": " << v.description << "\n";
        if (verbose || !holds(v.status))
            for (const auto& e : v.evidence) os << "    " << evidence_text(e) << "\n";
    }
    if (report.manifold) os << "pseudomanifold: " << report.manifold->summary() << "\n";
    for (const auto& w : report.warnings) os << "warning: " << w << "\n";
    os << "all hypotheses hold: " << (report.all_hold ? "yes" : "no");
    if (report.all_hold) {
        os << " (over";
        for (const auto& f : report.holding_fields) os << " " << f;
        os << ")";
    }
    os << "\n";
    os << "rainbow simplices: " << report.rainbow_witnesses.size() << "\n";
    for (const auto& w : report.rainbow_witnesses) os << "    " << simplex_text(w) << "\n";
    os << "consistent: " << (report.consistent ? "yes" : "no") << "\n";

    if (!json_path.empty()) emit(report_to_json(report, ms).dump(2) + "\n", json_path, io);

    if (!report.consistent) {
        io.err << "error: all hypotheses hold but no rainbow simplex exists\n";
        return k_exit_hypothesis_failed;
    }
    return report.all_hold ? k_exit_ok : k_exit_hypothesis_failed;
}

int cmd_rainbow(const std::string& path, Io& io)
{
    const Instance inst = load(path, io);
    const Coloring& C = need_coloring(inst, path);
    const auto& K = inst.complex;
    if (K.empty() || C.num_classes() != static_cast<std::size_t>(K.dim()) + 1)
        throw UsageError(path + ": " + std::to_string(C.num_classes()) + " color classes on a complex of dimension " +
                         std::to_string(K.dim()) + "; rainbow simplices need dim + 1 classes");
    const auto found = rainbow_simplices(K, C);
    io.out << "rainbow simplices: " << found.size() << "\n";
    for (const auto& s : found) io.out << "    " << to_string(K, s) << "\n";
    return k_exit_ok;
}

int cmd_audit(const std::string& path, const std::vector<std::string>& field_names, Io& io)
{
    const auto fields = parse_fields(field_names);
    const Instance inst = load(path, io);
    const Coloring& C = need_coloring(inst, path);
    bool pass = true;
    for (const auto& F : fields) {
        const DualityAudit audit = alexander_duality_audit(inst.complex, C, F);
        io.out << "field " << audit.field << ", n = " << audit.n << "\n";
        for (const auto& e : audit.entries)
            io.out << "    S = " << subset_text(e.subset) << ": β̃_" << e.degree << "(K_S) = " << e.betti
                   << ", β̃_" << e.dual_degree << "(K_" << subset_text(e.complement) << ") = " << e.dual_betti
                   << (e.equal ? "" : "  MISMATCH") << "\n";
        io.out << "duality " << (audit.pass ? "holds" : "VIOLATED") << " over " << audit.field << "\n";
        pass = pass && audit.pass;
    }
    return pass ? k_exit_ok : k_exit_hypothesis_failed;
}

int cmd_sperner(int n, int depth, const std::string& out_path, Io& io)
{
    const SpernerInstance s = sperner_instance(n, depth);
    const std::string name = "sperner(" + std::to_string(n) + "," + std::to_string(depth) + ")";
    emit(instance_to_json(s.complex, s.coloring, name), out_path, io);
    if (!out_path.empty() && out_path != "-")
        io.out << name << ": " << s.complex.facets().size() << " facets, "
               << rainbow_simplices(s.complex, s.coloring).size() << " rainbow\n";
    return k_exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Io io{in, out, err};
    CLI::App app{"Rainbow simplex criteria for vertex-colored simplicial complexes", "rainbow"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "rainbow 1.0");

    std::string path, sub_path, out_path, json_path, name, theorem;
    std::vector<std::string> fields;
    int times = 1, dim = 0, depth = 0;
    bool verbose = false;
    const std::string field_help = "coefficient field: q, 2, 3, 5 or p:N (repeatable; default q)";

    auto* gen = app.add_subcommand("gen", "write a built-in triangulation as an instance file");
    gen->add_option("name", name, "catalog name, e.g. torus7 or simplex_boundary:2")->required();
    gen->add_option("--out", out_path, "output path (default stdout)");

    auto* info = app.add_subcommand("info", "summarize an instance");
    info->add_option("path", path, "instance file or - for stdin")->required();

    auto* betti = app.add_subcommand("betti", "reduced Betti numbers");
    betti->add_option("path", path, "instance file or - for stdin")->required();
    betti->add_option("--field", fields, field_help);

    auto* relbetti = app.add_subcommand("relbetti", "Betti numbers of the pair (K, L)");
    relbetti->add_option("path", path, "instance file for K")->required();
    relbetti->add_option("--sub", sub_path, "instance file for the subcomplex L")->required();
    relbetti->add_option("--field", fields, field_help);

    auto* sd = app.add_subcommand("sd", "barycentric subdivision");
    sd->add_option("path", path, "instance file or - for stdin")->required();
    sd->add_option("--times", times, "number of subdivisions")->default_val(1);
    sd->add_option("--out", out_path, "output path (default stdout)");

    auto* check = app.add_subcommand("check", "check the hypotheses of a rainbow-simplex criterion");
    check->add_option("path", path, "colored instance file or - for stdin")->required();
    check->add_option("--theorem", theorem, "meshulam, surface, three, four, n or sphere")->default_val("meshulam");
    check->add_option("--field", fields, field_help);
    check->add_option("--json", json_path, "write the machine-readable report here");
    check->add_flag("--verbose,-v", verbose, "print evidence for every verdict");

    auto* rainbow = app.add_subcommand("rainbow", "list rainbow simplices");
    rainbow->add_option("path", path, "colored instance file or - for stdin")->required();

    auto* audit = app.add_subcommand("audit-duality", "compare chromatic Betti numbers across complementary colors");
    audit->add_option("path", path, "colored homology-sphere instance")->required();
    audit->add_option("--field", fields, field_help);

    auto* sperner = app.add_subcommand("sperner", "Sperner-colored iterated subdivision of a simplex");
    sperner->add_option("--dim", dim, "dimension of the simplex (1..4)")->required();
    sperner->add_option("--depth", depth, "number of barycentric subdivisions")->required();
    sperner->add_option("--out", out_path, "output path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? k_exit_ok : k_exit_usage;
    }

    try {
        if (gen->parsed()) return cmd_gen(name, out_path, io);
        if (info->parsed()) return cmd_info(path, io);
        if (betti->parsed()) return cmd_betti(path, fields, io);
        if (relbetti->parsed()) return cmd_relbetti(path, sub_path, fields, io);
        if (sd->parsed()) return cmd_sd(path, times, out_path, io);
        if (check->parsed()) return cmd_check(path, theorem, fields, json_path, verbose, io);
        if (rainbow->parsed()) return cmd_rainbow(path, io);
        if (audit->parsed()) return cmd_audit(path, fields, io);
        if (sperner->parsed()) return cmd_sperner(dim, depth, out_path, io);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ColoringError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return k_exit_usage;
}

} // namespace rainbow
