// modnet: command-line front end; every subcommand prints one JSON report and exits 0 iff all checks pass.

#include "modnet/algebra_json.hpp"
#include "modnet/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace modnet;
using nlohmann::ordered_json;
namespace su = modnet::suite;

namespace {

struct Output {
    std::string path;
    bool timing = false;
};

int emit(const ordered_json& j, const Output& o, bool pass) {
    std::string text = j.dump(2) + "\n";
    if (o.path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + o.path);
        f << text;
    }
    return pass ? 0 : 1;
}

int emit(const su::Report& r, const Output& o) { return emit(su::to_json(r, o.timing), o, r.pass()); }

int emit(const su::Section& s, const Output& o) { return emit(su::Report{{s}}, o); }

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void add_output(CLI::App* app, Output& o) {
    app->add_option("--out", o.path, "write the report here instead of stdout");
    app->add_flag("--timing", o.timing, "include wall-clock fields (reports are then not reproducible)");
}

void add_grid(CLI::App* app, GridSpec& g) {
    app->add_option("--n-lam", g.n_lam, "lambda nodes");
    app->add_option("--lam-min", g.lam_min);
    app->add_option("--lam-max", g.lam_max);
    app->add_option("--n-x", g.n_x, "x nodes per axis");
    app->add_option("--x-max", g.X, "x box half width");
}

ordered_json grid_json(const GridSpec& g) {
    return {{"n", g.n}, {"n_lam", g.n_lam}, {"lam_min", g.lam_min}, {"lam_max", g.lam_max}, {"n_x", g.n_x}, {"X", g.X}};
}

Phase parse_phase(const std::string& p) {
    if (p == "literal") return Phase::Literal;
    if (p == "kms") return Phase::Kms;
    if (p == "none") return Phase::None;
    throw CLI::ValidationError("--phase", "expected literal, kms or none");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modnet: exact and numerical checks for Jacobi-type Lie algebras and their nets"};
    app.require_subcommand(1);
    Output out;
    int rc = 0;

    // algebra
    auto* alg = app.add_subcommand("algebra", "structure constants");
    alg->require_subcommand(1);
    std::string alg_name = "hsp", alg_file;
    std::size_t alg_n = 1;
    auto* alg_build = alg->add_subcommand("build", "print structure constants of a named algebra");
    alg_build->add_option("--name", alg_name, "hsp, hcsp, sp, heis, sl2");
    alg_build->add_option("--n", alg_n, "rank parameter");
    add_output(alg_build, out);
    alg_build->callback([&] {
        auto a = named_algebra(alg_name, alg_n);
        rc = emit(algebra_to_json(a), out, true);
    });
    auto* alg_check = alg->add_subcommand("check", "Jacobi and antisymmetry of a JSON algebra");
    alg_check->add_option("file", alg_file, "algebra JSON (labels, brackets [i, j, k, \"c\"] with i < j)")->required();
    add_output(alg_check, out);
    alg_check->callback([&] {
        auto a = algebra_from_json(slurp(alg_file));
        su::Section s{"algebra"};
        s.checks.push_back(su::detail::exact("antisymmetric", "c(i,j,k) = -c(j,i,k)", a.antisymmetric()));
        s.checks.push_back(su::detail::exact("jacobi", "Jacobi identity on structure constants", jacobi_check(a),
                                             "dim " + std::to_string(a.dim())));
        auto c = center(a);
        s.checks.push_back(su::detail::exact("center", "dimension of the center", true, std::to_string(c.cols())));
        rc = emit(s, out);
    });

    // euler
    auto* eul = app.add_subcommand("euler", "Euler elements and 3-gradings");
    eul->require_subcommand(1);
    std::size_t eul_n = 1;
    std::string eul_alg = "hcsp";
    auto euler_report = [&](bool grade) {
        LieAlgebra a;
        Vec h;
        if (eul_alg == "hcsp") {
            a = hcsp_algebra(eul_n);
            h = hcsp_euler_element(eul_n);
        } else if (eul_alg == "sp") {
            a = sp_algebra(eul_n).algebra;
            h = su::detail::hs_coords(eul_n);
        } else {
            throw CLI::ValidationError("--algebra", "expected hcsp or sp");
        }
        su::Section s{"euler"};
        bool eu = is_euler(a, h);
        s.checks.push_back(su::detail::exact("euler", "ad h diagonalizable with spectrum in {-1,0,1}", eu));
        if (eu && grade) {
            auto g = grading(a, h);
            std::ostringstream d;
            d << g.dim_of(-1) << "," << g.dim_of(0) << "," << g.dim_of(1);
            s.checks.push_back(su::detail::exact("dims", "dimensions of g_-1, g_0, g_1", true, d.str()));
            s.checks.push_back(su::detail::exact("graded law", "[g_a, g_b] in g_{a+b}", graded_bracket_law(a, g)));
            s.checks.push_back(su::detail::exact("tau", "tau = e^{i pi ad h} is an involutive automorphism",
                                                 is_isomorphism(a, a, tau_involution(g).matrix)));
        }
        return s;
    };
    for (auto [name, grade] : {std::pair{"verify", false}, std::pair{"grade", true}}) {
        auto* c = eul->add_subcommand(name, grade ? "grading pieces and bracket law" : "Euler element test");
        c->add_option("--algebra", eul_alg, "hcsp or sp");
        c->add_option("--n", eul_n);
        add_output(c, out);
        c->callback([&, grade = grade] { rc = emit(euler_report(grade), out); });
    }

    // parabolic
    auto* par = app.add_subcommand("parabolic", "parabolic embedding");
    par->require_subcommand(1);
    std::size_t par_n = 1;
    auto* par_v = par->add_subcommand("verify", "Euler element and eigenspace formula inside sp(2n+2)");
    par_v->add_option("--n", par_n);
    add_output(par_v, out);
    par_v->callback([&] { rc = emit(su::parabolic_section({par_n}), out); });

    // jordan
    auto* jor = app.add_subcommand("jordan", "Jordan structure of g_1");
    jor->require_subcommand(1);
    std::size_t jor_n = 2;
    std::string jor_amb = "sp";
    auto* jor_k = jor->add_subcommand("kkt", "KKT Jordan algebra of the standard triple");
    jor_k->add_option("--ambient", jor_amb, "sp");
    jor_k->add_option("--n", jor_n);
    add_output(jor_k, out);
    jor_k->callback([&] {
        if (jor_amb != "sp") throw CLI::ValidationError("--ambient", "only sp is available");
        auto k = kkt_sp(jor_n);
        auto f = jordan_frame(k.algebra);
        su::Section s{"jordan"};
        s.checks.push_back(su::detail::exact("dim", "dim g_1 = n(n+1)/2", k.algebra.dim() == jor_n * (jor_n + 1) / 2,
                                             std::to_string(k.algebra.dim())));
        s.checks.push_back(su::detail::exact("axioms", "commutative, Jordan identity, unit",
                                             is_commutative(k.algebra) && jordan_identity_holds(k.algebra) &&
                                                 unit_acts_as_identity(k.algebra)));
        s.checks.push_back(su::detail::exact("frame rank", "rank of a Jordan frame", frame_ok(k.algebra, f),
                                             std::to_string(f.rank())));
        rc = emit(s, out);
    });
    int wal_r = 2, wal_d = 1;
    std::vector<std::string> wal_alpha{"-1/2", "0", "1/4", "1/2", "3/4", "1", "2"};
    auto* jor_w = jor->add_subcommand("wallach", "Wallach set membership table");
    jor_w->add_option("--r", wal_r);
    jor_w->add_option("--d", wal_d);
    jor_w->add_option("--alpha", wal_alpha, "rationals to classify");
    add_output(jor_w, out);
    jor_w->callback([&] {
        ordered_json t = ordered_json::array();
        for (const auto& a : wal_alpha) t.push_back({{"alpha", a}, {"member", wallach_contains(parse_scalar(a), wal_r, wal_d)}});
        rc = emit(ordered_json{{"r", wal_r}, {"d", wal_d}, {"table", t}}, out, true);
    });

    // stdspace
    auto* std_ = app.add_subcommand("stdspace", "finite-dimensional standard subspaces");
    std_->require_subcommand(1);
    su::Config scfg;
    for (auto name : {"fd", "tensor"}) {
        auto* c = std_->add_subcommand(name, "random modular pairs");
        c->add_option("--pairs", scfg.modular_pairs);
        c->add_option("--seed", scfg.seed);
        add_output(c, out);
        c->callback([&] { rc = emit(su::stdspace_section(scfg), out); });
    }

    // rep
    auto* rep = app.add_subcommand("rep", "the representation on the grid");
    rep->require_subcommand(1);
    su::Config rcfg;
    std::vector<std::string> rep_suites{"unitarity", "grouplaw", "jnu", "energy"};
    auto* rep_c = rep->add_subcommand("check", "unitarity, group law, J covariance, positive energy");
    rep_c->add_option("--suite", rep_suites)->check(CLI::IsMember({"unitarity", "grouplaw", "jnu", "energy"}));
    rep_c->add_option("--words", rcfg.words);
    rep_c->add_option("--seed", rcfg.seed);
    rep_c->add_option("--n", rcfg.n)->check(CLI::Range(1, 2));
    add_grid(rep_c, rcfg.grid);
    add_output(rep_c, out);
    rep_c->callback([&] {
        rcfg.grid.validate();
        auto s = su::rep_section(rcfg, rep_suites);
        auto j = su::to_json(su::Report{{s}}, out.timing);
        j["grid"] = grid_json(rcfg.n == 1 ? rcfg.grid : su::rep_grid(2));
        rc = emit(j, out, s.pass());
    });

    // dist
    auto* dis = app.add_subcommand("dist", "distribution vectors");
    dis->require_subcommand(1);
    double dis_s = 1.5, dis_t = 0.4;
    std::string dis_phase = "kms", dis_law = "b";
    auto* dis_p = dis->add_subcommand("pair", "pair the Gaussian e^{-lam^2 - x^2/2} against eta~_s");
    dis_p->add_option("--s", dis_s);
    dis_p->add_option("--phase", dis_phase, "literal, kms, none");
    add_output(dis_p, out);
    dis_p->callback([&] {
        DistributionVector d{dis_s, 1, parse_phase(dis_phase)};
        auto g = pairing_grid();
        auto f = GridFunction::sample(g, [](double l, const Eigen::Vector2d& x) {
            return cd(std::exp(-l * l - x[0] * x[0] / 2));
        });
        cd e = eta_pair(dis_s, f), v = pair(d, f);
        double want = gaussian_pairing_closed_form(dis_s);
        su::Section s{"dist"};
        s.checks.push_back(su::detail::bound("gaussian pairing", "eta_s = Gamma(s/2) sqrt(2 pi)/2",
                                             std::abs(e - want) / want, 1e-6));
        auto j = su::to_json(su::Report{{s}}, out.timing);
        j["eta_s"] = {e.real(), e.imag()};
        j["eta_tilde"] = {v.real(), v.imag()};
        j["phase"] = dis_phase;
        rc = emit(j, out, s.pass());
    });
    auto* dis_c = dis->add_subcommand("covariance", "one covariance law over templates");
    dis_c->add_option("--law", dis_law)->check(CLI::IsMember({"a", "b", "c", "d"}));
    dis_c->add_option("--s", dis_s);
    dis_c->add_option("--t", dis_t, "modular time for law b");
    add_output(dis_c, out);
    dis_c->callback([&] {
        Law law = dis_law == "a" ? Law::GL : dis_law == "b" ? Law::Dilation : dis_law == "c" ? Law::V1Sp1 : Law::Tau;
        LawParams p;
        p.t = dis_t;
        GridSpec g;
        double worst = 0;
        for (const auto& f : su::dist_battery(g)) worst = std::max(worst, verify_covariance(dis_s, law, f, p));
        su::Section s{"dist"};
        s.checks.push_back(su::detail::bound(std::string("law ") + law_name(law), "predicted scalar of the law", worst,
                                             1e-5, "4 templates"));
        auto j = su::to_json(su::Report{{s}}, out.timing);
        j["grid"] = grid_json(g);
        rc = emit(j, out, s.pass());
    });

    // net
    auto* net = app.add_subcommand("net", "smeared vectors and the net of real subspaces");
    net->require_subcommand(1);
    su::Config ncfg;
    for (auto name : {"locality", "kms", "covariance"}) {
        auto* c = net->add_subcommand(name, std::string("net ") + name + " battery");
        c->add_option("--s", ncfg.s);
        c->add_option("--seed", ncfg.seed);
        if (std::string(name) == "locality") c->add_option("--pairs", ncfg.locality_pairs);
        add_output(c, out);
        c->callback([&, name] {
            auto s = su::net_section(ncfg, {name});
            auto j = su::to_json(su::Report{{s}}, out.timing);
            j["grid"] = grid_json(ncfg.net);
            rc = emit(j, out, s.pass());
        });
    }

    // verify all
    auto* ver = app.add_subcommand("verify", "aggregate reports");
    ver->require_subcommand(1);
    su::Config vcfg;
    auto* ver_all = ver->add_subcommand("all", "every battery");
    ver_all->add_option("--n", vcfg.n)->check(CLI::Range(1, 2));
    ver_all->add_option("--seed", vcfg.seed);
    add_output(ver_all, out);
    ver_all->callback([&] { rc = emit(su::verify_all(vcfg), out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const AlgebraParseError& e) {
        std::cerr << e.to_json().dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << ordered_json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    }
    return rc;
}
