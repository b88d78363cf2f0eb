// acsinv: exact invariants of almost-complex structures on R^{2n}.
//
// Exit status: 0 the property holds, 1 it is violated, 2 bad input.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "acs/corpus.hpp"
#include "acs/invariants.hpp"
#include "acs/io.hpp"
#include "acs/spencer.hpp"

namespace {

using nlohmann::json;
namespace io = acs::io;

constexpr int kHolds = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;

struct Options {
    std::string structure;
    std::string diffeo;
    std::string at;
    std::string out;
    std::string diffeo_out;
    std::string kind = "constant";
    std::string theta0;
    bool symbolic = false;
    std::size_t n = 1;
    std::size_t degree = 2;
    std::size_t samples = 8;
    std::uint64_t seed = 1;
};

void emit(const json& j, const std::string& out) {
    if (out.empty())
        std::cout << j.dump(2) << '\n';
    else
        io::write_json(j, out);
}

acs::RatVector point_for(const std::string& text, std::size_t dim) {
    if (text.empty()) throw io::InputError("--at is required");
    acs::RatVector p = io::parse_point(text);
    if (p.size() != dim)
        throw io::InputError("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(dim));
    return p;
}

int cmd_check(const Options& o) {
    const acs::TensorField field = io::load_structure(o.structure);
    if (auto defect = acs::acs_defect(field)) {
        std::cout << "not almost-complex: (S^2 + I)[" << defect->row + 1 << "][" << defect->col + 1
                  << "] = " << defect->value.str() << '\n';
        return kViolated;
    }
    std::cout << "ok: S^2 = -I\n";
    return kHolds;
}

int cmd_jet(const Options& o) {
    const acs::TensorField field = io::load_structure(o.structure);
    const acs::Jet1 jet = acs::jet1_at(field, point_for(o.at, field.dim()));
    json j = io::jet_to_json(jet);
    j["in_j1pi"] = acs::jet1_in_j1pi(jet);
    emit(j, o.out);
    return kHolds;
}

template <class PointFn, class SymbolicFn>
int tensor_command(const Options& o, PointFn at_point, SymbolicFn symbolic) {
    acs::TensorField field = io::load_structure(o.structure);
    if (!o.symbolic && o.at.empty()) throw io::InputError("give --at or --symbolic");
    std::optional<acs::Acs> s;
    try {
        s.emplace(std::move(field));
    } catch (const acs::NotAlmostComplex& e) {
        std::cerr << e.what() << '\n';
        return kViolated;
    }
    json j;
    if (o.symbolic) {
        const acs::PolyTwoForm w = symbolic(*s);
        j = json{{"symbolic", true}, {"identically_zero", w.is_zero()}, {"coefficients", io::poly_two_form_to_json(w)}};
    } else {
        const acs::RatVector p = point_for(o.at, s->dim());
        const acs::TwoForm w = at_point(*s, p);
        j = json{{"p", io::rational_list(p)}, {"zero", w.is_zero()}, {"coefficients", io::two_form_to_json(w)}};
    }
    emit(j, o.out);
    return kHolds;
}

int cmd_spencer(const Options& o) {
    if (o.n < 1) throw io::InputError("--n must be at least 1");
    acs::RatMatrix theta0 = acs::standard_structure(o.n);
    if (!o.theta0.empty()) {
        const acs::TensorField field = io::load_structure(o.theta0);
        if (field.chart().half_dim() != o.n) throw io::InputError("structure file does not match --n");
        theta0 = field.at(point_for(o.at, field.dim()));
        try {
            acs::require_almost_complex(theta0);
        } catch (const acs::NotAlmostComplex& e) {
            throw io::InputError(std::string("theta0: ") + e.what());
        }
    }
    const acs::SpencerDimensions dims = acs::spencer_dimensions(theta0);
    std::cout << "n: " << o.n << '\n'
              << "dim g: " << dims.isotropy << '\n'
              << "dim g1: " << dims.prolongation << '\n'
              << "dim delta(g x T*): " << dims.delta_isotropy << '\n'
              << "dim H02: " << dims.h02 << '\n'
              << "dim delta(Im hat x T*): " << dims.delta_complement << '\n'
              << "dim 2-forms: " << dims.two_forms << '\n';
    return kHolds;
}

int cmd_naturality(const Options& o) {
    const acs::Acs s{io::load_structure(o.structure)};
    const acs::PolyDiffeo f = io::load_diffeo(o.diffeo);
    if (!f.has_inverse()) throw io::InputError("diffeo file has no \"f_inv\"");
    if (f.dim() != s.dim()) throw io::InputError("diffeo and structure dimensions differ");
    const acs::RatVector p = point_for(o.at, s.dim());
    bool ok = false;
    try {
        ok = acs::naturality_check(s, f, p);
    } catch (const acs::SingularJacobian& e) {
        throw io::InputError(e.what());
    }
    std::cout << (ok ? "natural: omega(f.S)(f(p)) = f.omega(S)(p)\n" : "not natural at this point\n");
    return ok ? kHolds : kViolated;
}

int cmd_integrability(const Options& o) {
    if (o.samples < 1) throw io::InputError("--samples must be at least 1");
    const acs::Acs s{io::load_structure(o.structure)};
    acs::SeededRng rng(o.seed);
    std::vector<acs::RatVector> points;
    for (std::size_t a = 0; a < o.samples; ++a) points.push_back(acs::random_point(s.dim(), rng));
    const acs::IntegrabilityReport report = acs::integrability_report(s, points);
    emit(io::report_to_json(report), o.out);
    return report.consistent ? kHolds : kViolated;
}

int cmd_gen(const Options& o) {
    if (o.n < 1) throw io::InputError("--n must be at least 1");
    if (o.kind == "constant") {
        emit(io::structure_to_json(acs::constant_structure(o.n)), o.out);
    } else if (o.kind == "gauge") {
        emit(io::structure_to_json(acs::generate_gauge(o.n, o.degree, o.seed).field()), o.out);
    } else if (o.kind == "pullback") {
        const acs::PullbackStructure pb = acs::generate_pullback(o.n, o.degree, o.seed);
        emit(io::structure_to_json(pb.structure.field()), o.out);
        if (!o.diffeo_out.empty()) io::write_json(io::diffeo_to_json(pb.shear), o.diffeo_out);
    } else {
        throw io::InputError("--kind must be constant, gauge or pullback");
    }
    return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of almost-complex structures"};
    app.require_subcommand(1);
    Options o;

    auto structure_arg = [&](CLI::App* sub) {
        sub->add_option("structure", o.structure, "structure file (JSON)")->required()->check(CLI::ExistingFile);
    };
    auto output_arg = [&](CLI::App* sub) { sub->add_option("--out", o.out, "write JSON here instead of stdout"); };

    auto* check = app.add_subcommand("check", "verify S^2 = -I identically");
    structure_arg(check);

    auto* jet = app.add_subcommand("jet", "1-jet of the structure at a point");
    structure_arg(jet);
    jet->add_option("--at", o.at, "point r1,r2,...")->required();
    output_arg(jet);

    auto* omega = app.add_subcommand("omega", "the first-order invariant omega");
    auto* nij = app.add_subcommand("nijenhuis", "the Nijenhuis tensor");
    for (auto* sub : {omega, nij}) {
        structure_arg(sub);
        auto* at = sub->add_option("--at", o.at, "point r1,r2,...");
        sub->add_flag("--symbolic", o.symbolic, "polynomial coefficients")->excludes(at);
        output_arg(sub);
    }

    auto* spencer = app.add_subcommand("spencer", "isotropy, prolongation and H02 dimensions");
    spencer->add_option("--n", o.n, "half dimension")->required();
    auto* th = spencer->add_option("--theta0", o.theta0, "take theta0 from this structure file")->check(CLI::ExistingFile);
    spencer->add_option("--at", o.at, "point for --theta0")->needs(th);

    auto* natural = app.add_subcommand("naturality", "compare omega of f.S with the transport of omega");
    structure_arg(natural);
    natural->add_option("--diffeo", o.diffeo, "diffeo file (JSON)")->required()->check(CLI::ExistingFile);
    natural->add_option("--at", o.at, "point r1,r2,...")->required();

    auto* integ = app.add_subcommand("integrability", "symbolic and sampled omega/N report");
    structure_arg(integ);
    integ->add_option("--samples", o.samples, "number of sample points");
    integ->add_option("--seed", o.seed, "sample seed");
    output_arg(integ);

    auto* gen = app.add_subcommand("gen", "generate a structure file");
    gen->add_option("--kind", o.kind, "constant | gauge | pullback");
    gen->add_option("--n", o.n, "half dimension");
    gen->add_option("--degree", o.degree, "polynomial degree bound");
    gen->add_option("--seed", o.seed, "generator seed");
    output_arg(gen);
    gen->add_option("--diffeo-out", o.diffeo_out, "pullback only: write the shear here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*check) return cmd_check(o);
        if (*jet) return cmd_jet(o);
        if (*omega) return tensor_command(o, acs::omega_field, acs::omega_symbolic);
        if (*nij) return tensor_command(o, acs::nijenhuis, acs::nijenhuis_symbolic);
        if (*spencer) return cmd_spencer(o);
        if (*natural) return cmd_naturality(o);
        if (*integ) return cmd_integrability(o);
        if (*gen) return cmd_gen(o);
    } catch (const io::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const acs::NotAlmostComplex& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
