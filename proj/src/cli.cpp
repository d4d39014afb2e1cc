/*
 * Copyright 2026 The Orbitlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "orbitlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitlab/coadjoint.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/finite_gabor.hpp"
#include "orbitlab/kernels.hpp"
#include "orbitlab/lattice.hpp"
#include "orbitlab/polarization.hpp"
#include "orbitlab/schrodinger.hpp"
#include "orbitlab/workspace.hpp"

namespace orbitlab {

namespace {

using ojson = nlohmann::ordered_json;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct CommonOpts {
    std::string algebra_file;
    std::string ell_name;
    std::string lattice_name;
    bool json = false;
    std::uint64_t seed = 1;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ORBITLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw InputError("ORBITLAB_SEED must be an unsigned integer");
        }
    }
    return 1;
}

GridSpec make_grid(double r, int n) {
    GridSpec g{r, n};
    g.validate();
    return g;
}

StateVector make_eta(const std::string& spec, const GridSpec& grid) {
    if (spec == "gaussian") return gaussian_state(grid);
    if (spec.rfind("hermite:", 0) == 0)
        return hermite_state(grid, std::stoi(spec.substr(8)));
    if (spec.rfind("smooth:", 0) == 0)
        return random_smooth_state(grid, 8, std::stoull(spec.substr(7)));
    if (spec.rfind("rough:", 0) == 0)
        return random_rough_state(grid, std::stoull(spec.substr(6)));
    throw InputError("unknown window spec '" + spec +
                     "' (use gaussian, hermite:K, smooth:SEED, rough:SEED)");
}

CVec make_finite_eta(const std::string& spec, int n, std::uint64_t seed) {
    if (spec == "gaussian") {
        CVec v(n);
        for (int k = 0; k < n; ++k) {
            const double d = k - n / 2.0;
            v[k] = std::exp(-std::acos(-1.0) * d * d / n);
        }
        return v;
    }
    if (spec == "ones") return CVec(n, cdouble(1.0, 0.0));
    if (spec == "e0" || spec == "delta") {
        CVec v(n, 0.0);
        v[0] = 1.0;
        return v;
    }
    if (spec == "random") {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g(0.0, 1.0);
        CVec v(n);
        for (cdouble& x : v) x = cdouble(g(rng), g(rng));
        return v;
    }
    throw InputError("unknown finite window '" + spec +
                     "' (use gaussian, ones, e0, random)");
}

std::vector<std::pair<int, int>> parse_subgroup_generators(std::string text) {
    if (text.rfind("gen=", 0) == 0) text = text.substr(4);
    std::vector<std::pair<int, int>> gens;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        int a = 0, b = 0;
        if (std::sscanf(item.c_str(), " ( %d , %d )", &a, &b) != 2)
            throw InputError("cannot parse subgroup generator '" + item +
                             "'; expected e.g. \"gen=(1,1);(0,2)\"");
        gens.emplace_back(a, b);
    }
    if (gens.empty()) throw InputError("empty subgroup generator list");
    return gens;
}

Workspace load_and_name(const CommonOpts& o) {
    if (o.algebra_file.empty()) throw InputError("missing --algebra FILE");
    return load_workspace(o.algebra_file);
}

ojson validation_to_json(const ValidationReport& rep) {
    ojson j;
    j["antisymmetry_ok"] = rep.antisymmetry_ok;
    j["jacobi_ok"] = rep.jacobi_ok;
    j["nilpotent"] = rep.nilpotent;
    if (rep.nilpotent) j["nilpotency_class"] = rep.nilpotency_class;
    auto dump = [](const std::vector<std::array<int, 3>>& v) {
        ojson arr = ojson::array();
        for (const auto& t : v) arr.push_back({t[0], t[1], t[2]});
        return arr;
    };
    j["antisymmetry_violations"] = dump(rep.antisymmetry_violations);
    j["jacobi_violations"] = dump(rep.jacobi_violations);
    return j;
}

int cmd_validate(const CommonOpts& o, std::ostream& out) {
    Workspace ws = load_and_name(o);
    ValidationReport rep = ws.algebra.validate();
    if (o.json) {
        ojson j;
        j["workspace"] = ws.name;
        j["validation"] = validation_to_json(rep);
        out << j.dump(2) << "\n";
    } else {
        out << "workspace: " << ws.name << " (dim " << ws.algebra.dim() << ")\n";
        out << "antisymmetry: " << (rep.antisymmetry_ok ? "ok" : "VIOLATED") << "\n";
        for (const auto& t : rep.antisymmetry_violations)
            out << "  violation at (i,j,k) = (" << t[0] << "," << t[1] << "," << t[2] << ")\n";
        out << "jacobi: " << (rep.jacobi_ok ? "ok" : "VIOLATED") << "\n";
        for (const auto& t : rep.jacobi_violations)
            out << "  violation at (i,j,k) = (" << t[0] << "," << t[1] << "," << t[2] << ")\n";
        if (rep.nilpotent)
            out << "nilpotent: yes, class " << rep.nilpotency_class << "\n";
        else
            out << "nilpotent: no\n";
    }
    return rep.ok() ? 0 : 2;
}

ojson orbit_to_json(const LieAlgebra& alg, const OrbitAnalysis& orbit) {
    ojson j;
    j["orbit_dim"] = orbit.orbit_dim;
    j["flat"] = orbit.flat;
    j["status"] = orbit.status;
    j["stabilizer_dim"] = orbit.stabilizer.dim();
    j["stabilizer_basis"] = format_subspace(alg, orbit.stabilizer);
    if (orbit.flat && orbit.orbit_dim > 0) {
        j["pfaffian"] = orbit.pfaffian.to_string();
        j["formal_dimension"] = orbit.formal_dimension.to_string();
    }
    j["normalization"] = orbit.normalization_tag;
    return j;
}

int cmd_analyze(const CommonOpts& o, std::ostream& out) {
    Workspace ws = load_and_name(o);
    ws.algebra.require_valid();
    const Functional& ell = ws.functional(o.ell_name);
    ClassificationVerdict v = classify_representation(ws.algebra, ell, o.seed);
    if (o.json) {
        ojson j;
        j["workspace"] = ws.name;
        j["ell"] = format_functional(ws.algebra, ell.coords);
        j["orbit"] = orbit_to_json(ws.algebra, v.orbit);
        j["pker_dim"] = v.kernel.pker.dim();
        j["pker_basis"] = format_subspace(ws.algebra, v.kernel.pker);
        j["pker_samples"] = v.kernel.samples_used;
        j["verdict"] = v.text;
        out << j.dump(2) << "\n";
    } else {
        out << "ell = " << format_functional(ws.algebra, ell.coords) << "\n";
        out << "orbit_dim " << v.orbit.orbit_dim << ", flat "
            << (v.orbit.flat ? "true" : "false");
        if (v.orbit.flat && v.orbit.orbit_dim > 0)
            out << ", d_pi " << v.orbit.formal_dimension.to_string();
        out << "\n";
        out << "pker dim " << v.kernel.pker.dim() << ": {";
        bool first = true;
        for (const std::string& s : format_subspace(ws.algebra, v.kernel.pker)) {
            out << (first ? " " : ", ") << s;
            first = false;
        }
        out << " }\n" << v.text << "\n";
    }
    return 0;
}

int cmd_polarize(const CommonOpts& o, std::ostream& out) {
    Workspace ws = load_and_name(o);
    ws.algebra.require_valid();
    const Functional& ell = ws.functional(o.ell_name);
    PolarizationResult p = vergne_polarization(ws.algebra, ell);
    if (o.json) {
        ojson j;
        j["workspace"] = ws.name;
        j["ell"] = format_functional(ws.algebra, ell.coords);
        j["polarization_basis"] = format_subspace(ws.algebra, p.subalgebra);
        j["dim"] = p.subalgebra.dim();
        j["subordinate_ok"] = p.subordinate_ok;
        j["dimension_ok"] = p.dimension_ok;
        j["closed_under_bracket"] = p.closed_ok;
        out << j.dump(2) << "\n";
    } else {
        out << "polarization for ell = " << format_functional(ws.algebra, ell.coords)
            << " (dim " << p.subalgebra.dim() << ")\n";
        for (const std::string& s : format_subspace(ws.algebra, p.subalgebra))
            out << "  " << s << "\n";
        out << "subordinate: " << (p.subordinate_ok ? "ok" : "FAILED")
            << ", dimension: " << (p.dimension_ok ? "ok" : "FAILED")
            << ", subalgebra: " << (p.closed_ok ? "ok" : "FAILED") << "\n";
    }
    return 0;
}

int cmd_pker(const CommonOpts& o, std::ostream& out) {
    Workspace ws = load_and_name(o);
    ws.algebra.require_valid();
    const Functional& ell = ws.functional(o.ell_name);
    KernelAnalysis k = projective_kernel(ws.algebra, ell, o.seed);
    if (o.json) {
        ojson j;
        j["workspace"] = ws.name;
        j["ell"] = format_functional(ws.algebra, ell.coords);
        j["pker_dim"] = k.pker.dim();
        j["pker_basis"] = format_subspace(ws.algebra, k.pker);
        j["equals_stabilizer"] = k.equals_stabilizer;
        j["samples_used"] = k.samples_used;
        j["verified"] = k.verified;
        j["note"] = "connected (Lie-algebra level) data only";
        out << j.dump(2) << "\n";
    } else {
        out << "pker(pi) for ell = " << format_functional(ws.algebra, ell.coords) << ": dim "
            << k.pker.dim() << "\n";
        for (const std::string& s : format_subspace(ws.algebra, k.pker)) out << "  " << s << "\n";
        out << "equals stabilizer: " << (k.equals_stabilizer ? "yes" : "no") << " (samples "
            << k.samples_used << ", verified " << (k.verified ? "yes" : "no") << ")\n";
        out << "note: connected (Lie-algebra level) data only\n";
    }
    return 0;
}

int cmd_classify(const CommonOpts& o, std::ostream& out) {
    Workspace ws = load_and_name(o);
    ws.algebra.require_valid();
    const Functional& ell = ws.functional(o.ell_name);
    ClassificationVerdict v = classify_representation(ws.algebra, ell, o.seed);
    if (o.json) {
        ojson j;
        j["workspace"] = ws.name;
        j["ell"] = format_functional(ws.algebra, ell.coords);
        j["kind"] = v.kind == RepKind::CoherentState     ? "coherent-state"
                    : v.kind == RepKind::NotCoherentState ? "not-coherent-state"
                                                          : "character";
        j["flat"] = v.flat;
        j["orbit_dim"] = v.orbit_dim;
        if (v.kind == RepKind::CoherentState) j["d_pi"] = v.d_pi.to_string();
        j["pker_dim"] = v.kernel.pker.dim();
        j["verdict"] = v.text;
        out << j.dump(2) << "\n";
    } else {
        out << v.text << "\n";
    }
    return 0;
}

int cmd_density(const CommonOpts& o, const std::string& scale_text, std::ostream& out) {
    Workspace ws = load_and_name(o);
    ws.algebra.require_valid();
    const Functional& ell = ws.functional(o.ell_name);
    const LatticeSpec& lattice = ws.lattice(o.lattice_name);
    Rational scale = Rational::parse(scale_text);
    DensityReport r = density_report(ws.algebra, ell, lattice, scale, o.seed);
    const bool incomplete = r.verdict == DensityVerdict::IncompleteByTheorem;
    if (o.json) {
        ojson j;
        j["workspace"] = ws.name;
        j["ell"] = format_functional(ws.algebra, ell.coords);
        j["lattice"] = o.lattice_name;
        j["covol_G"] = r.covol_G.to_string();
        j["covol_G_exact"] = r.covol_G_exact;
        j["covol_quotient"] = r.covol_quotient.to_string();
        j["d_pi"] = r.d_pi.to_string();
        j["product"] = r.product.to_string();
        j["verdict"] = incomplete ? "IncompleteByTheorem" : "NotExcluded";
        j["normalization"] = r.normalization_tag;
        out << j.dump(2) << "\n";
    } else {
        out << "covol(Gamma) = " << r.covol_G.to_string()
            << (r.covol_G_exact ? " (exact)" : " (chart determinant; class >= 3, see covolume note)")
            << "\n";
        out << "covol(p(Gamma)) = " << r.covol_quotient.to_string() << "\n";
        out << "d_pi = " << r.d_pi.to_string() << "\n";
        out << "density product covol(p(Gamma)) * d_pi = " << r.product.to_string() << "\n";
        if (incomplete)
            out << "verdict: IncompleteByTheorem -- covol(p(Gamma)) * d_pi <= 1 fails, so every "
                   "admissible coherent subsystem over this lattice orbit is incomplete\n";
        else
            out << "verdict: NotExcluded -- the necessary condition covol(p(Gamma)) * d_pi <= 1 "
                   "holds; completeness is not excluded (the condition is not sufficient)\n";
    }
    return 0;
}

int cmd_moment_map(const std::string& lambda_text, const std::string& eta_spec, double grid_r,
                   int grid_n, bool json, std::ostream& out) {
    Rational lambda = Rational::parse(lambda_text);
    GridSpec grid = make_grid(grid_r, grid_n);
    StateVector eta = make_eta(eta_spec, grid);
    MomentMapResult m = moment_map(lambda, eta);
    if (json) {
        ojson j;
        j["lambda"] = lambda.to_string();
        j["eta"] = eta_spec;
        j["moment_normalized"] = {fmt_double(m.normalized[0]), fmt_double(m.normalized[1]),
                                  fmt_double(m.normalized[2])};
        j["moment_raw"] = {fmt_double(m.raw[0]), fmt_double(m.raw[1]), fmt_double(m.raw[2])};
        j["tail_warning"] = m.tail_warning;
        out << j.dump(2) << "\n";
    } else {
        out << "J~ = (" << fmt_double(m.normalized[0]) << ", " << fmt_double(m.normalized[1])
            << ", " << fmt_double(m.normalized[2]) << ") on (X, Y, Z)\n";
        out << "raw J = 2*pi*J~\n";
        if (m.tail_warning) out << "warning: heavy spectral tails; values may be inaccurate\n";
    }
    return 0;
}

int cmd_orbit_test(const std::string& lambda_text, const std::string& eta_spec, double grid_r,
                   int grid_n, bool json, std::ostream& out) {
    Rational lambda = Rational::parse(lambda_text);
    GridSpec grid = make_grid(grid_r, grid_n);
    StateVector eta = make_eta(eta_spec, grid);
    SymplecticOrbitReport s = symplectic_orbit_test(lambda, eta);
    ComplexOrbitReport c = complex_orbit_test(lambda, eta);
    if (json) {
        ojson j;
        j["lambda"] = lambda.to_string();
        j["eta"] = eta_spec;
        j["moment_normalized"] = {fmt_double(s.moment.normalized[0]),
                                  fmt_double(s.moment.normalized[1]),
                                  fmt_double(s.moment.normalized[2])};
        j["symplectic"] = {{"membership", s.membership_pass ? "PASS" : "FAIL"},
                           {"stabilizer", s.stabilizer_pass ? "PASS" : "FAIL"},
                           {"numeric_stabilizer_dim", s.numeric_stabilizer_dim},
                           {"pker_dim", s.pker_dim}};
        j["complex"] = {{"dim_s", c.dim_s},
                        {"dim_s_plus_conj", c.dim_s_plus_conj},
                        {"verdict", c.complex_orbit ? "complex orbit" : "not complex"}};
        out << j.dump(2) << "\n";
    } else {
        out << "symplectic orbit test: membership " << (s.membership_pass ? "PASS" : "FAIL")
            << ", stabilizer " << (s.stabilizer_pass ? "PASS" : "FAIL") << " (numeric dim "
            << s.numeric_stabilizer_dim << ", pker dim " << s.pker_dim << ")\n";
        out << "complex orbit test: dim s = " << c.dim_s << ", dim(s + conj s) = "
            << c.dim_s_plus_conj << " => " << (c.complex_orbit ? "complex orbit" : "not complex")
            << "\n";
    }
    return 0;
}

int cmd_admissibility(const std::string& lambda_text, const std::string& eta_spec, double grid_r,
                      int grid_n, bool json, std::ostream& out) {
    Rational lambda = Rational::parse(lambda_text);
    GridSpec grid = make_grid(grid_r, grid_n);
    StateVector eta = make_eta(eta_spec, grid).normalized();
    const double d = admissibility_constant(lambda, eta);
    if (json) {
        ojson j;
        j["lambda"] = lambda.to_string();
        j["eta"] = eta_spec;
        j["admissibility_constant"] = fmt_double(d);
        out << j.dump(2) << "\n";
    } else {
        out << "d_{pi,eta} ~= " << fmt_double(d) << " (quadrature over |p|,|q| <= R/2)\n";
    }
    return 0;
}

int cmd_subsystem(const std::string& lambda_text, double alpha, double beta,
                  const std::string& eta_spec, int probes, double grid_r, int grid_n,
                  const std::string& section_text, const std::string& csv_path, bool json,
                  std::ostream& out) {
    Rational lambda = Rational::parse(lambda_text);
    GridSpec grid = make_grid(grid_r, grid_n);
    StateVector eta = make_eta(eta_spec, grid);
    Section section;
    if (section_text == "pq")
        section = Section::PQ;
    else if (section_text == "qp")
        section = Section::QP;
    else
        throw InputError("--section must be pq or qp");
    SubsystemReport r = subsystem_completeness(lambda, alpha, beta, eta, probes, section);
    const char* signal = r.signal == SubsystemSignal::Completeness    ? "completeness signal"
                         : r.signal == SubsystemSignal::Incompleteness ? "incompleteness signal"
                                                                       : "inconclusive";
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw InputError("cannot open CSV output '" + csv_path + "'");
        csv << "probes,sigma_min\n";
        for (std::size_t i = 0; i < r.sigma_min.size(); ++i)
            csv << r.probe_counts[i] << "," << fmt_double(r.sigma_min[i]) << "\n";
    }
    if (json) {
        ojson j;
        j["lambda"] = lambda.to_string();
        j["alpha"] = fmt_double(alpha);
        j["beta"] = fmt_double(beta);
        j["eta"] = eta_spec;
        j["lattice_points"] = r.lattice_points;
        ojson curve = ojson::array();
        for (std::size_t i = 0; i < r.sigma_min.size(); ++i)
            curve.push_back({{"probes", r.probe_counts[i]},
                             {"sigma_min", fmt_double(r.sigma_min[i])}});
        j["curve"] = curve;
        j["signal"] = signal;
        j["note"] = r.note;
        out << j.dump(2) << "\n";
    } else {
        out << "lattice points in window: " << r.lattice_points << "\n";
        for (std::size_t i = 0; i < r.sigma_min.size(); ++i)
            out << "  probes " << r.probe_counts[i] << ": sigma_min = "
                << fmt_double(r.sigma_min[i]) << "\n";
        out << signal << ": " << r.note << "\n";
    }
    return 0;
}

int cmd_gabor_finite(int n, bool scan, const std::string& subgroup_text,
                     const std::string& eta_spec, int panel, std::uint64_t seed,
                     const std::string& csv_path, bool json, std::ostream& out) {
    if (scan) {
        ScanReport report = density_scan(n, panel, seed);
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            if (!csv) throw InputError("cannot open CSV output '" + csv_path + "'");
            csv << "n,order,covol_times_d,complete_any,complete_count,panel\n";
            for (const ScanRow& row : report.rows)
                csv << row.n << "," << row.subgroup.order() << ","
                    << row.covol_times_d.to_string() << "," << (row.complete_any ? 1 : 0) << ","
                    << row.complete_count << "," << row.panel_size << "\n";
        }
        if (json) {
            ojson j;
            j["n_max"] = report.n_max;
            j["necessity_violations"] = report.necessity_violations;
            ojson rows = ojson::array();
            for (const ScanRow& row : report.rows)
                rows.push_back({{"n", row.n},
                                {"order", row.subgroup.order()},
                                {"covol_times_d", row.covol_times_d.to_string()},
                                {"complete_any", row.complete_any},
                                {"complete_count", row.complete_count},
                                {"panel", row.panel_size}});
            j["rows"] = rows;
            out << j.dump(2) << "\n";
        } else {
            out << "scan n <= " << report.n_max << ": " << report.rows.size()
                << " subgroups, necessity violations: " << report.necessity_violations << "\n";
            if (report.necessity_violations > 0) out << "counterexample: " << report.counterexample << "\n";
            for (const ScanRow& row : report.rows) {
                out << "n=" << row.n << " |L|=" << row.subgroup.order()
                    << " covol*d=" << row.covol_times_d.to_string()
                    << (row.complete_any ? " complete for some window"
                                         : " incomplete for every panel window")
                    << " (" << row.complete_count << "/" << row.panel_size << ")\n";
            }
        }
        return report.necessity_violations == 0 ? 0 : 4;
    }
    if (subgroup_text.empty())
        throw InputError("gabor-finite needs --scan or --subgroup \"gen=(a,b);(c,d)\"");
    FiniteWH wh(n);
    SubgroupSpec sub = subgroup_from_generators(n, parse_subgroup_generators(subgroup_text));
    CVec eta = make_finite_eta(eta_spec, n, seed);
    const int rank = system_rank(wh, sub, eta);
    const Rational covol_d(n, sub.order());
    if (json) {
        ojson j;
        j["n"] = n;
        j["subgroup_order"] = sub.order();
        j["covol_times_d"] = covol_d.to_string();
        j["eta"] = eta_spec;
        j["rank"] = rank;
        j["complete"] = rank == n;
        out << j.dump(2) << "\n";
    } else {
        out << "subgroup order " << sub.order() << ", covol*d = " << covol_d.to_string() << "\n";
        out << "rank of the system: " << rank << " of " << n << " => "
            << (rank == n ? "complete" : "incomplete") << "\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"orbitlab: coadjoint orbits, coherent-state density conditions, and "
                 "Weyl-Heisenberg completeness checks"};
    app.require_subcommand(1);

    CommonOpts common;
    try {
        common.seed = default_seed();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::string lambda_text = "1";
    std::string eta_spec = "gaussian";
    std::string scale_text = "1";
    std::string section_text = "pq";
    std::string csv_path;
    std::string subgroup_text;
    double grid_r = 12.0;
    int grid_n = 4096;
    double alpha = 1.0, beta = 1.0;
    int probes = 24;
    int finite_n = 8;
    int panel = 20;
    bool scan = false;

    auto add_workspace_opts = [&](CLI::App* cmd, bool need_ell, bool need_lattice) {
        cmd->add_option("--algebra", common.algebra_file, "workspace JSON file")->required();
        if (need_ell) cmd->add_option("--ell", common.ell_name, "functional name")->required();
        if (need_lattice)
            cmd->add_option("--lattice", common.lattice_name, "lattice name")->required();
        cmd->add_flag("--json", common.json, "machine-readable output");
        cmd->add_option("--seed", common.seed, "sampling seed (also ORBITLAB_SEED)");
    };
    auto add_grid_opts = [&](CLI::App* cmd) {
        cmd->add_option("--lambda", lambda_text, "central parameter, rational p/q");
        cmd->add_option("--eta", eta_spec, "window: gaussian|hermite:K|smooth:SEED|rough:SEED");
        cmd->add_option("--grid-R", grid_r, "grid half-width (default 12)");
        cmd->add_option("--grid-N", grid_n, "grid samples, power of two (default 4096)");
        cmd->add_flag("--json", common.json, "machine-readable output");
    };

    CLI::App* validate = app.add_subcommand("validate", "check structure constants");
    add_workspace_opts(validate, false, false);
    CLI::App* analyze = app.add_subcommand("analyze", "orbit analysis for a functional");
    add_workspace_opts(analyze, true, false);
    CLI::App* polarize = app.add_subcommand("polarize", "Vergne polarization");
    add_workspace_opts(polarize, true, false);
    CLI::App* pker = app.add_subcommand("pker", "projective kernel");
    add_workspace_opts(pker, true, false);
    CLI::App* classify = app.add_subcommand("classify", "coherent-state classification");
    add_workspace_opts(classify, true, false);
    CLI::App* density = app.add_subcommand("density", "density report for a lattice");
    add_workspace_opts(density, true, true);
    density->add_option("--scale", scale_text, "measure-scale parameter (rational)");

    CLI::App* moment = app.add_subcommand("moment-map", "moment map on the sampled grid");
    add_grid_opts(moment);
    CLI::App* orbit_test = app.add_subcommand("orbit-test", "symplectic/complex orbit tests");
    add_grid_opts(orbit_test);
    CLI::App* admissibility = app.add_subcommand("admissibility", "admissibility quadrature");
    add_grid_opts(admissibility);
    CLI::App* subsystem = app.add_subcommand("subsystem", "coherent subsystem completeness");
    add_grid_opts(subsystem);
    subsystem->add_option("--alpha", alpha, "translation step")->required();
    subsystem->add_option("--beta", beta, "modulation step")->required();
    subsystem->add_option("--probes", probes, "number of Hermite probes (default 24)");
    subsystem->add_option("--section", section_text, "cross-section: pq or qp");
    subsystem->add_option("--csv", csv_path, "dump sigma_min-vs-truncation curve");

    CLI::App* gabor = app.add_subcommand("gabor-finite", "finite Weyl-Heisenberg oracle");
    gabor->add_option("--n", finite_n, "dimension (scan: up to this n)")->required();
    gabor->add_flag("--scan", scan, "exhaustive subgroup scan for all n' <= n");
    gabor->add_option("--subgroup", subgroup_text, "generators, e.g. \"gen=(1,1);(0,2)\"");
    gabor->add_option("--eta", eta_spec, "window: gaussian|ones|e0|random");
    gabor->add_option("--panel", panel, "random windows per scan panel (default 20)");
    gabor->add_option("--seed", common.seed, "panel seed (also ORBITLAB_SEED)");
    gabor->add_option("--csv", csv_path, "dump scan rows as CSV");
    gabor->add_flag("--json", common.json, "machine-readable output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(common, out);
        if (app.got_subcommand(analyze)) return cmd_analyze(common, out);
        if (app.got_subcommand(polarize)) return cmd_polarize(common, out);
        if (app.got_subcommand(pker)) return cmd_pker(common, out);
        if (app.got_subcommand(classify)) return cmd_classify(common, out);
        if (app.got_subcommand(density)) return cmd_density(common, scale_text, out);
        if (app.got_subcommand(moment))
            return cmd_moment_map(lambda_text, eta_spec, grid_r, grid_n, common.json, out);
        if (app.got_subcommand(orbit_test))
            return cmd_orbit_test(lambda_text, eta_spec, grid_r, grid_n, common.json, out);
        if (app.got_subcommand(admissibility))
            return cmd_admissibility(lambda_text, eta_spec, grid_r, grid_n, common.json, out);
        if (app.got_subcommand(subsystem))
            return cmd_subsystem(lambda_text, alpha, beta, eta_spec, probes, grid_r, grid_n,
                                 section_text, csv_path, common.json, out);
        if (app.got_subcommand(gabor))
            return cmd_gabor_finite(finite_n, scan, subgroup_text, eta_spec, panel, common.seed,
                                    csv_path, common.json, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

} // namespace orbitlab
