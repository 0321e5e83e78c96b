#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hadsub/biunitary.hpp"
#include "hadsub/cmat.hpp"
#include "hadsub/hadamard.hpp"
#include "hadsub/invariants.hpp"

namespace hadsub {

using json = nlohmann::ordered_json;

/// Matrix format shared by every tool:
/// {"rows": r, "cols": c, "re": [[...]], "im": [[...]]}, row-major.
inline json cmat_to_json(const CMat& m) {
    json re = json::array(), im = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json rrow = json::array(), irow = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            rrow.push_back(m(i, j).real());
            irow.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

inline CMat cmat_from_json(const json& j) {
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != rows || im.size() != rows)
        throw std::invalid_argument("cmat_from_json: row count mismatch");
    CMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (re[i].size() != cols || im[i].size() != cols)
            throw std::invalid_argument("cmat_from_json: column count mismatch");
        for (std::size_t j2 = 0; j2 < cols; ++j2)
            m(i, j2) = cplx(re[i][j2].get<double>(), im[i][j2].get<double>());
    }
    return m;
}

/// Angles are plain radians, or "p/q" meaning (p/q)·π so that exact roots of
/// unity are representable (e.g. "-2/3" gives e^{iθ} = ω exactly).
inline double parse_angle(const std::string& s) {
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash != std::string::npos) {
        const long long p = std::stoll(s.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("parse_angle: bad numerator in " + s);
        const long long q = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1 || q == 0)
            throw std::invalid_argument("parse_angle: bad denominator in " + s);
        return std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
    }
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("parse_angle: trailing characters in " + s);
    return v;
}

inline json phase_pair_to_json(const PhasePair& p) {
    return json{{"alpha1", p.alpha1}, {"alpha2", p.alpha2}, {"beta1", p.beta1}, {"beta2", p.beta2}};
}

inline PhasePair phase_pair_from_json(const json& j) {
    const auto angle = [&](const char* key) {
        const auto& v = j.at(key);
        if (v.is_string()) return parse_angle(v.get<std::string>());
        return v.get<double>();
    };
    return PhasePair(angle("alpha1"), angle("alpha2"), angle("beta1"), angle("beta2"));
}

/// {"n": 3, "rho": [[...],...], "lam": [[...],...]} with 1-indexed images.
inline json perm_biunitary_to_json(const PermBiunitary& pb) {
    return json{{"n", pb.n}, {"rho", pb.rho}, {"lam", pb.lam}};
}

inline PermBiunitary perm_biunitary_from_json(const json& j) {
    PermBiunitary pb;
    pb.n = j.at("n").get<std::size_t>();
    pb.rho = j.at("rho").get<std::vector<std::vector<int>>>();
    pb.lam = j.at("lam").get<std::vector<std::vector<int>>>();
    validate(pb);
    return pb;
}

inline json report_to_json(const InvariantReport& r) {
    json j;
    j["phase_pair"] = phase_pair_to_json(r.pair);
    j["distinct"] = r.distinct;
    if (!r.distinct) {
        j["note"] = "u ~ v: the two towers coincide; invariants not applicable";
        return j;
    }
    j["pp_lambda"] = r.pp_lambda.str();
    j["zeta"] = json{{"re", r.zeta_value.real()}, {"im", r.zeta_value.imag()}};
    j["cos_interior"] = r.cos_interior;
    j["angle_interior"] = r.angle_interior;
    j["angle_sw"] = r.angle_sw;
    if (r.sw_right_angle) j["angle_sw_marker"] = "pi/2 (commuting square)";
    j["entropy_h"] = r.entropy_h;
    j["entropy_h_log3"] = r.entropy_h_log3;
    j["entropy_H_bounds"] = json::array({r.entropy_big_h_bounds[0], r.entropy_big_h_bounds[1]});
    j["commuting_square"] = r.commuting_square;
    j["rel_commutant_dim"] = r.rel_commutant_dim;
    json verdicts = json::array();
    for (const Verdict& v : r.verdicts)
        verdicts.push_back(json{{"name", v.name}, {"pass", v.pass}, {"residual", v.residual}});
    j["verdicts"] = std::move(verdicts);
    return j;
}

inline json depth2_report_to_json(const Depth2Report& r) {
    json edges = json::array();
    for (const auto& [a, b] : r.edges) edges.push_back(json::array({a, b}));
    return json{{"upper", r.upper}, {"lower", r.lower}, {"depth", r.depth}, {"edges", std::move(edges)}};
}

}  // namespace hadsub
