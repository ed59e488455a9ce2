// polycalc: exact polytope calculus from the command line.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polycalc/errors.hpp"
#include "polycalc/extremal.hpp"
#include "polycalc/face_lattice.hpp"
#include "polycalc/io.hpp"
#include "polycalc/minkowski.hpp"
#include "polycalc/nesterov.hpp"
#include "polycalc/report.hpp"
#include "polycalc/standard.hpp"
#include "polycalc/verify.hpp"

using namespace polycalc;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& s : split(text, ',')) out.push_back(parse_rational(s));
    return out;
}

/// "x1,x2;y1,y2;..." -> points
std::vector<RationalVector> parse_points(const std::string& text) {
    std::vector<RationalVector> out;
    for (const auto& p : split(text, ';')) out.emplace_back(parse_list(p));
    if (out.empty()) throw ParseError("no points given");
    return out;
}

void emit(const Report& report, const std::string& format, bool timing) {
    std::cout << (format == "records" ? report.to_records(timing) : report.to_text(timing));
}

/// Summand list from files, expanding manifests relative to their directory.
std::vector<PolytopeFile> load_summands(const std::vector<std::string>& files) {
    std::vector<PolytopeFile> out;
    for (const auto& f : files) {
        const std::string text = read_text_file(f);
        if (is_manifest(text)) {
            const auto base = std::filesystem::path(f).parent_path();
            for (const auto& entry : parse_manifest(text)) out.push_back(load_polytope((base / entry).string()));
        } else {
            try {
                out.push_back(parse_polytope_json(text));
            } catch (const ParseError& e) {
                throw ParseError(f + ": " + e.what());
            }
        }
    }
    return out;
}

Polytope make_polytope(const std::string& kind, std::optional<std::size_t> dim, const std::string& t,
                       std::size_t axis, std::optional<std::size_t> ambient, const std::string& points) {
    auto need_dim = [&]() {
        if (!dim) throw DomainError("make " + kind + " needs --dim");
        return *dim;
    };
    if (kind == "cube") return cube(need_dim());
    if (kind == "cross") return cross_polytope(need_dim());
    if (kind == "simplex") return simplex(need_dim());
    if (kind == "tetrahedron_pc") return tetrahedron_pc();
    if (kind == "cyclic") return cyclic_polytope(need_dim(), parse_list(t));
    if (kind == "polygon_halfcircle") {
        if (!ambient) throw DomainError("make polygon_halfcircle needs --ambient");
        return polygon_halfcircle(parse_list(t), axis, *ambient);
    }
    if (kind == "segment") {
        const auto pts = parse_points(points);
        if (pts.size() != 2) throw DomainError("make segment needs exactly two endpoints");
        return segment(pts[0], pts[1]);
    }
    if (kind == "from_points") return from_points(parse_points(points));
    throw DomainError("unknown kind '" + kind + "'");
}

std::string f_line(const std::string& label, const std::vector<Integer>& f) {
    return label + format_counts(f) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact convex-polytope calculus: sums, duals, face lattices, rounding, bound checks"};
    app.require_subcommand(1);
    std::string format = "text";
    bool timing = false;

    // make
    auto* make = app.add_subcommand("make", "Construct a standard polytope");
    std::string kind, t_list, points, out_file, name;
    std::optional<std::size_t> dim, ambient;
    std::size_t axis = 0;
    make->add_option("kind", kind,
                     "cube | cross | simplex | tetrahedron_pc | cyclic | polygon_halfcircle | segment | from_points")
        ->required();
    make->add_option("--dim", dim, "Dimension");
    make->add_option("--t", t_list, "Comma-separated rational parameters");
    make->add_option("--axis", axis, "Axis i of span(e_i, e_last) for polygon_halfcircle (0-based)");
    make->add_option("--ambient", ambient, "Ambient dimension for polygon_halfcircle");
    make->add_option("--points", points, "Points as 'x1,x2,...;y1,y2,...'");
    make->add_option("--name", name, "Name stored in the file");
    make->add_option("-o,--output", out_file, "Output file (stdout if omitted)");

    // sum
    auto* sum = app.add_subcommand("sum", "Minkowski sum with face and bound report");
    std::vector<std::string> sum_files;
    std::string sum_out;
    sum->add_option("files", sum_files, "Polytope files or manifests")->required();
    sum->add_option("-o,--output", sum_out, "Write the sum here");
    sum->add_option("--format", format, "text | records")->check(CLI::IsMember({"text", "records"}));

    // dual
    auto* dual = app.add_subcommand("dual", "Polar dual of a centered polytope");
    std::string dual_in, dual_out;
    dual->add_option("file", dual_in)->required();
    dual->add_option("-o,--output", dual_out, "Output file (stdout if omitted)");

    // round
    auto* round = app.add_subcommand("round", "Nesterov rounding P + P*");
    std::string round_in, round_out;
    std::size_t iterations = 1;
    round->add_option("file", round_in)->required();
    round->add_option("-n", iterations, "Number of roundings")->check(CLI::PositiveNumber);
    round->add_option("-o,--output", round_out, "Output file (stdout if omitted)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "f-vector, Euler residual, lattice and OFF export");
    std::string analyze_in, lattice_format, lattice_out, off_out;
    analyze->add_option("file", analyze_in)->required();
    analyze->add_option("--lattice", lattice_format, "Print the face lattice as dot | txt")
        ->check(CLI::IsMember({"dot", "txt"}));
    analyze->add_option("--lattice-out", lattice_out, "Write the lattice to this file instead of stdout");
    analyze->add_option("--off", off_out, "Write OFF geometry (3D only)");

    // check-pc
    auto* check_pc = app.add_subcommand("check-pc", "Perfectly-centered check with per-face witnesses");
    std::string pc_in;
    check_pc->add_option("file", pc_in)->required();
    check_pc->add_option("--format", format, "text | records")->check(CLI::IsMember({"text", "records"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Run a theorem-verification suite");
    std::string suite;
    SuiteOptions opts;
    std::vector<std::string> suite_names{"all"};
    for (const auto& s : suites()) suite_names.push_back(s.first);
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names));
    verify->add_option("--dim", opts.dim, "Dimension knob");
    verify->add_option("--seed", opts.seed, "Random seed");
    verify->add_option("--size", opts.size, "Size knob (instances, iterations or maximum dimension)");
    verify->add_option("--format", format, "text | records")->check(CLI::IsMember({"text", "records"}));
    verify->add_flag("--timing", timing, "Append elapsed time");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Trivial upper bounds on face numbers of a sum");
    std::string f0_text;
    std::optional<std::size_t> bound_k;
    bounds->add_option("--f0", f0_text, "Vertex counts N1,N2,...")->required();
    bounds->add_option("--k", bound_k, "Face dimension k (vertex bound if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*make) {
            const Polytope p = make_polytope(kind, dim, t_list, axis, ambient, points);
            const std::string text = polytope_to_json(p, name.empty() ? kind : name);
            if (out_file.empty()) std::cout << text;
            else write_text_file(out_file, text);
            return 0;
        }
        if (*sum) {
            const auto files = load_summands(sum_files);
            std::vector<Polytope> summands;
            std::vector<std::size_t> f0;
            Report report("sum");
            for (const auto& f : files) {
                summands.push_back(f.polytope);
                f0.push_back(f.polytope.num_vertices());
            }
            const SumContext ctx = minkowski_sum(summands);
            const FaceLattice lattice = build_face_lattice(ctx.sum);
            const auto f = f_vector(lattice);
            for (std::size_t i = 0; i < files.size(); ++i)
                report.add("summand " + std::to_string(i) + " " + files[i].name, Status::Pass, "",
                           "f=" + format_counts(f_vector(build_face_lattice(summands[i]))));
            report.add("sum f-vector", euler_residual(lattice) == 0, "euler residual 0", "f=" + format_counts(f));
            report.add("vertex bound", Integer(f[0]) <= trivial_vertex_bound(f0),
                       "f0<=" + trivial_vertex_bound(f0).str(),
                       "f0=" + f[0].str() + " attained=" + yes_no(f[0] == trivial_vertex_bound(f0)));
            for (std::size_t k = 1; k < f.size(); ++k) {
                const Integer b = trivial_kface_bound(f0, k);
                report.add("k-face bound k=" + std::to_string(k), f[k] <= b, "f" + std::to_string(k) + "<=" + b.str(),
                           "f" + std::to_string(k) + "=" + f[k].str() + " attained=" + yes_no(f[k] == b));
            }
            report.add("general position", Status::Pass, "",
                       yes_no(relatively_in_general_position(ctx).in_general_position));
            if (!sum_out.empty()) save_polytope(sum_out, ctx.sum, "sum");
            emit(report, format, false);
            return report.exit_code();
        }
        if (*dual) {
            const auto in = load_polytope(dual_in);
            const std::string text = polytope_to_json(polar_dual(in.polytope), in.name + " dual");
            if (dual_out.empty()) std::cout << text;
            else write_text_file(dual_out, text);
            return 0;
        }
        if (*round) {
            const auto in = load_polytope(round_in);
            Polytope p = in.polytope;
            for (std::size_t i = 0; i < iterations; ++i) p = nesterov_round(p).sum;
            const std::string text = polytope_to_json(p, in.name + " rounded x" + std::to_string(iterations));
            if (round_out.empty()) std::cout << text;
            else write_text_file(round_out, text);
            return 0;
        }
        if (*analyze) {
            const auto in = load_polytope(analyze_in);
            const FaceLattice lattice = build_face_lattice(in.polytope);
            std::cout << "name: " << in.name << "\n"
                      << "ambient_dim: " << in.polytope.ambient_dim() << "\n"
                      << "dim: " << in.polytope.dim() << "\n"
                      << f_line("f-vector: ", f_vector(lattice)) << "euler residual: " << euler_residual(lattice)
                      << "\n";
            if (!lattice_format.empty()) {
                const std::string text = lattice_format == "dot" ? lattice_to_dot(lattice) : lattice_to_text(lattice);
                if (lattice_out.empty()) std::cout << text;
                else write_text_file(lattice_out, text);
            }
            if (!off_out.empty()) write_text_file(off_out, polytope_to_off(in.polytope));
            return 0;
        }
        if (*check_pc) {
            const auto in = load_polytope(pc_in);
            const PerfectCenterReport pc = perfectly_centered_witnesses(in.polytope);
            Report report("check-pc " + in.name);
            report.add("centered", pc.centered, "origin in relative interior", yes_no(pc.centered));
            for (const auto& entry : pc.faces) {
                const auto ids = pc.lattice.faces[entry.face].vertex_indices();
                std::string label = "face dim=" + std::to_string(entry.dim) + " vertices={";
                for (std::size_t i = 0; i < ids.size(); ++i) label += (i ? "," : "") + std::to_string(ids[i]);
                label += "}";
                report.add(label, entry.witness.has_value(), "witness in face and normal cone",
                           entry.witness ? to_string(*entry.witness) : entry.failure);
            }
            report.add("perfectly centered", pc.overall, "yes", yes_no(pc.overall));
            emit(report, format, false);
            return report.exit_code();
        }
        if (*verify) {
            const Report report = run_suite(suite, opts);
            emit(report, format, timing);
            return report.exit_code();
        }
        if (*bounds) {
            std::vector<std::size_t> f0;
            for (const auto& s : split(f0_text, ',')) {
                const Rational q = parse_rational(s);
                if (denominator_of(q) != 1 || q < 1) throw ParseError("--f0 entries must be positive integers");
                f0.push_back(static_cast<std::size_t>(numerator_of(q)));
            }
            if (f0.empty()) throw ParseError("--f0 needs at least one count");
            if (!bound_k || *bound_k == 0) std::cout << trivial_vertex_bound(f0) << "\n";
            else std::cout << trivial_kface_bound(f0, *bound_k) << "\n";
            return 0;
        }
    } catch (const PolycalcError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
