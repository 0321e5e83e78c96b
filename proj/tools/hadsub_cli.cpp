// Command-line front end: invariant reports for pairs of order-3 complex
// Hadamard matrices, batch sampling, and the seeded verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hadsub/hadsub.hpp"
#include "hadsub/json_io.hpp"

namespace {

struct AngleFlags {
    std::string alpha1 = "0", alpha2 = "0", beta1 = "0", beta2 = "0";

    hadsub::PhasePair pair() const {
        return hadsub::PhasePair(hadsub::parse_angle(alpha1), hadsub::parse_angle(alpha2),
                                 hadsub::parse_angle(beta1), hadsub::parse_angle(beta2));
    }
};

void add_angle_flags(CLI::App* cmd, AngleFlags& f) {
    cmd->add_option("--alpha1", f.alpha1, "alpha1 in radians, or \"p/q\" meaning (p/q)*pi");
    cmd->add_option("--alpha2", f.alpha2, "alpha2 in radians, or \"p/q\" meaning (p/q)*pi");
    cmd->add_option("--beta1", f.beta1, "beta1 in radians, or \"p/q\" meaning (p/q)*pi");
    cmd->add_option("--beta2", f.beta2, "beta2 in radians, or \"p/q\" meaning (p/q)*pi");
}

std::ostream& open_sink(const std::string& out_path, std::ofstream& file) {
    if (out_path.empty()) return std::cout;
    file.open(out_path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + out_path);
    return file;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void print_report_text(std::ostream& os, const hadsub::InvariantReport& r) {
    os << "pair: alpha = (" << fmt(r.pair.alpha1) << ", " << fmt(r.pair.alpha2) << "), beta = ("
       << fmt(r.pair.beta1) << ", " << fmt(r.pair.beta2) << ")\n";
    if (!r.distinct) {
        os << "distinct: false (u ~ v; invariants not applicable)\n";
        return;
    }
    os << "distinct: true\n"
       << "pp_lambda: " << r.pp_lambda.str() << "\n"
       << "zeta: " << fmt(r.zeta_value.real()) << (r.zeta_value.imag() < 0 ? " - " : " + ")
       << fmt(std::abs(r.zeta_value.imag())) << "i\n"
       << "cos_interior: " << fmt(r.cos_interior) << "\n"
       << "angle_interior: " << fmt(r.angle_interior) << "\n"
       << "angle_sw: " << fmt(r.angle_sw) << (r.sw_right_angle ? "  [pi/2, commuting square]" : "")
       << "\n"
       << "entropy_h: " << fmt(r.entropy_h) << " nats (" << fmt(r.entropy_h_log3) << " x ln 3)\n"
       << "entropy_H: in [" << fmt(r.entropy_big_h_bounds[0]) << ", "
       << fmt(r.entropy_big_h_bounds[1]) << "] (exact value open)\n"
       << "commuting_square: " << (r.commuting_square ? "true" : "false") << "\n"
       << "rel_commutant_dim: " << r.rel_commutant_dim << "\n";
    for (const hadsub::Verdict& v : r.verdicts)
        os << (v.pass ? "  PASS " : "  FAIL ") << v.name << " (residual " << fmt(v.residual)
           << ")\n";
}

int cmd_report(const AngleFlags& f, bool as_json, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    const hadsub::InvariantReport r = hadsub::full_report(f.pair());
    if (as_json)
        os << hadsub::report_to_json(r).dump(2) << "\n";
    else
        print_report_text(os, r);
    return r.distinct && !r.all_pass() ? 1 : 0;
}

int cmd_verify(int samples, std::uint64_t seed, bool as_json, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    const std::vector<hadsub::SuiteResult> results = hadsub::run_verification(samples, seed);
    bool ok = true;
    if (as_json) {
        hadsub::json j = hadsub::json::array();
        for (const auto& r : results) {
            ok = ok && r.pass;
            j.push_back(hadsub::json{{"name", r.name},
                                     {"pass", r.pass},
                                     {"worst_residual", r.worst_residual},
                                     {"samples", r.samples}});
        }
        os << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            ok = ok && r.pass;
            os << (r.pass ? "PASS " : "FAIL ") << r.name << " (worst residual "
               << fmt(r.worst_residual) << " over " << r.samples << " samples)\n";
        }
        os << (ok ? "verification passed\n" : "verification FAILED\n");
    }
    return ok ? 0 : 1;
}

int cmd_batch(int samples, std::uint64_t seed, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    hadsub::PairSampler sampler(seed);
    bool ok = true;
    for (int i = 0; i < samples; ++i) {
        const hadsub::InvariantReport r = hadsub::full_report(sampler.distinct_pair());
        ok = ok && r.all_pass();
        hadsub::json j = hadsub::report_to_json(r);
        j["sample_index"] = i;
        os << j.dump() << "\n";  // one JSON line per sample
    }
    return ok ? 0 : 1;
}

int cmd_angle(const AngleFlags& f, bool as_json, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    const hadsub::PhasePair p = f.pair();
    const hadsub::InteriorAngle ia = hadsub::interior_angle(p);
    const hadsub::SwAngle sw = hadsub::sw_angle(p);
    if (as_json) {
        hadsub::json j{{"cos_interior", ia.cos_closed},
                       {"cos_interior_basis_formula", ia.cos_basis},
                       {"angle_interior", std::acos(std::clamp(ia.cos_closed, -1.0, 1.0))},
                       {"angle_sw", sw.angle}};
        if (sw.right_angle_marker) j["angle_sw_marker"] = "pi/2 (commuting square)";
        os << j.dump(2) << "\n";
    } else {
        os << "cos_interior: " << fmt(ia.cos_closed) << " (basis formula " << fmt(ia.cos_basis)
           << ")\n"
           << "angle_sw: " << fmt(sw.angle) << (sw.right_angle_marker ? "  [pi/2]" : "") << "\n";
    }
    return 0;
}

int cmd_entropy(const AngleFlags& f, bool as_json, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    const hadsub::PhasePair p = f.pair();
    const double h = hadsub::entropy_h(p);
    if (as_json) {
        os << hadsub::json{{"entropy_h", h},
                           {"entropy_h_log3", h / std::log(3.0)},
                           {"entropy_H_bounds", {h, std::log(3.0)}}}
                  .dump(2)
           << "\n";
    } else {
        os << "entropy_h: " << fmt(h) << " nats (" << fmt(h / std::log(3.0)) << " x ln 3)\n";
    }
    return 0;
}

int cmd_commutant(const AngleFlags& f, bool as_json, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    const hadsub::AlgebraBasis rc = hadsub::relative_commutant(f.pair());
    if (as_json) {
        hadsub::json basis = hadsub::json::array();
        for (const auto& b : rc.basis) basis.push_back(hadsub::cmat_to_json(b));
        os << hadsub::json{{"dim", rc.dim()}, {"basis", std::move(basis)}}.dump(2) << "\n";
    } else {
        os << "relative commutant dimension: " << rc.dim() << " (span = diagonal Masa)\n";
    }
    return 0;
}

int cmd_witness(const AngleFlags& f, bool as_json, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    const hadsub::VertexWitness vw = hadsub::vertex_witness(f.pair());
    const hadsub::Depth2Report graph = hadsub::depth2_report(vw.perm_part);
    if (as_json) {
        os << hadsub::json{{"factor_check", vw.factor_check},
                           {"factor_residual", vw.factor_residual},
                           {"perm_part", hadsub::perm_biunitary_to_json(vw.perm_part)},
                           {"principal_graph", hadsub::depth2_report_to_json(graph)},
                           {"biunitary", hadsub::cmat_to_json(vw.biunitary)}}
                  .dump(2)
           << "\n";
    } else {
        os << "factor_check: " << (vw.factor_check ? "true" : "false") << " (residual "
           << fmt(vw.factor_residual) << ")\n"
           << "perm codec: rho = (id,id,id), lam = (id,(123),(132))\n"
           << "principal graph: K_{3,3}, depth " << graph.depth << ", " << graph.edges.size()
           << " edges\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of pairs of order-3 complex Hadamard matrices"};
    app.require_subcommand(1);

    AngleFlags flags;
    bool as_json = false;
    int samples = 100;
    std::uint64_t seed = 0;
    std::string out_path;

    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_option("--out", out_path, "write output to FILE instead of stdout");

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit JSON instead of text");
        cmd->add_option("--out", out_path, "write output to FILE instead of stdout");
    };

    auto* report = app.add_subcommand("report", "full invariant report for one pair");
    add_angle_flags(report, flags);
    add_common(report);
    auto* verify = app.add_subcommand("verify", "run the verification suite on seeded samples");
    verify->add_option("--samples", samples, "number of sampled pairs");
    verify->add_option("--seed", seed, "RNG seed");
    add_common(verify);
    auto* batch = app.add_subcommand("batch", "stream one JSON report line per sampled pair");
    batch->add_option("--samples", samples, "number of sampled pairs");
    batch->add_option("--seed", seed, "RNG seed");
    add_common(batch);
    auto* angle = app.add_subcommand("angle", "interior and Sano-Watatani angles for one pair");
    add_angle_flags(angle, flags);
    add_common(angle);
    auto* entropy = app.add_subcommand("entropy", "relative entropy h for one pair");
    add_angle_flags(entropy, flags);
    add_common(entropy);
    auto* commutant = app.add_subcommand("commutant", "relative commutant of the intersection");
    add_angle_flags(commutant, flags);
    add_common(commutant);
    auto* witness = app.add_subcommand("witness", "vertex-model witness and principal graph");
    add_angle_flags(witness, flags);
    add_common(witness);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (report->parsed()) return cmd_report(flags, as_json, out_path);
        if (verify->parsed()) return cmd_verify(samples, seed, as_json, out_path);
        if (batch->parsed()) return cmd_batch(samples, seed, out_path);
        if (angle->parsed()) return cmd_angle(flags, as_json, out_path);
        if (entropy->parsed()) return cmd_entropy(flags, as_json, out_path);
        if (commutant->parsed()) return cmd_commutant(flags, as_json, out_path);
        if (witness->parsed()) return cmd_witness(flags, as_json, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
