// Command-line front end: build/inspect complexes, enumerate loop-space
// skeleta, compute edge groups and homology, run the verification suites.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "simploop/corpus.hpp"
#include "simploop/gen.hpp"
#include "simploop/groups.hpp"
#include "simploop/jsonio.hpp"
#include "simploop/verify.hpp"
#include "simploop/version.hpp"

using namespace simploop;

namespace {

struct CommonOpts {
    std::string input;
    std::string out;
    std::string format = "json";
    int max_len = 4;
    int max_dim = 2;
    long long budget = 100000;
    std::uint64_t seed = 7;
    int workers = 1;
};

std::string read_input(const std::string& spec) {
    // bundled name or file path
    for (const auto& e : bundled_corpus())
        if (e.name == spec) return e.text;
    std::ifstream in(spec);
    if (!in) throw ValidationError("cannot open input '" + spec + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const CommonOpts& opts, const Json& artifact, const std::string& text_form) {
    std::string payload = opts.format == "text" ? text_form : artifact.dump(2) + "\n";
    if (opts.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(opts.out, std::ios::binary);
        if (!out) throw ValidationError("cannot write '" + opts.out + "'");
        out << payload;
    }
}

Json config_json(const CommonOpts& o, const std::string& command) {
    Json j;
    j["command"] = command;
    j["max_len"] = o.max_len;
    j["max_dim"] = o.max_dim;
    j["budget"] = o.budget;
    j["seed"] = o.seed;
    j["workers"] = o.workers;
    return j;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
    if (with_input) cmd->add_option("--input", o.input, "facet-list file or bundled name")->required();
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--max-len", o.max_len, "loop length cap");
    cmd->add_option("--max-dim", o.max_dim, "simplex dimension cap");
    cmd->add_option("--budget", o.budget, "search budget");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--workers", o.workers, "worker threads (1 keeps certificates reproducible)");
}

int run(int argc, char** argv) {
    CLI::App app{"combinatorial loop spaces of finite simplicial complexes"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonOpts o;

    auto* cmd_build = app.add_subcommand("build", "load, maximalize and export a complex");
    add_common(cmd_build, o);

    auto* cmd_omega = app.add_subcommand("omega", "enumerate the loop-space skeleton");
    add_common(cmd_omega, o);

    auto* cmd_edge = app.add_subcommand("edge-group", "spanning-tree presentation and invariants");
    add_common(cmd_edge, o);
    bool simplify = false;
    cmd_edge->add_flag("--simplify", simplify, "apply generator elimination first");

    auto* cmd_hom = app.add_subcommand("homology", "integer homology of X, the loop-space "
                                                   "truncation, or the chain approximation");
    add_common(cmd_hom, o);
    std::string target = "x";
    int kcap = 3, dim = 2;
    cmd_hom->add_option("--target", target, "x|omega|stone")->check(CLI::IsMember({"x", "omega", "stone"}));
    cmd_hom->add_option("--k", kcap, "truncation length");
    cmd_hom->add_option("--dim", dim, "top homology dimension");

    auto* cmd_phi = app.add_subcommand("phi", "loop-space image of a face sphere");
    add_common(cmd_phi, o);
    std::string sphere_path;
    cmd_phi->add_option("--sphere", sphere_path, "grid JSON (rows of labels)")->required();

    auto* cmd_fs = app.add_subcommand("face-sphere", "validate and operate on grid spheres");
    std::string fs_action = "validate", sphere_a, sphere_b;
    add_common(cmd_fs, o);
    cmd_fs->add_option("action", fs_action, "validate|product|equiv")
        ->check(CLI::IsMember({"validate", "product", "equiv"}));
    cmd_fs->add_option("--sphere", sphere_a, "grid JSON")->required();
    cmd_fs->add_option("--sphere2", sphere_b, "second grid JSON");

    auto* cmd_verify = app.add_subcommand("verify", "run a bundled verification suite");
    std::string suite = "all";
    cmd_verify->add_option("--suite", suite, "contiguity|omega|components|facegroup|phi|stone|all");
    o.format = "text";
    std::string vin;
    cmd_verify->add_option("--input", vin, "override complex for input-aware checks");
    cmd_verify->add_option("--out", o.out, "output path (default stdout)");
    cmd_verify->add_option("--format", o.format, "json|text")->check(CLI::IsMember({"json", "text"}));
    int vmax_len = -1;
    cmd_verify->add_option("--max-len", vmax_len, "loop length cap");
    cmd_verify->add_option("--budget", o.budget, "search budget");
    cmd_verify->add_option("--seed", o.seed, "random seed");
    cmd_verify->add_option("--workers", o.workers, "worker threads");

    app.parse(argc, argv);

    if (cmd_build->parsed()) {
        auto text = read_input(o.input);
        auto x = SimplicialComplex::load(text);
        Json j = artifact_envelope(config_json(o, "build"), text);
        j["complex"] = complex_to_json(x);
        emit(o, j, x.to_text());
        return 0;
    }
    if (cmd_omega->parsed()) {
        auto text = read_input(o.input);
        auto x = SimplicialComplex::load(text);
        auto s = OmegaSkeleton::build(x, o.max_len, o.max_dim, {}, o.workers);
        Json j = artifact_envelope(config_json(o, "omega"), text);
        j["skeleton"] = skeleton_to_json(s);
        j["components"] = components_to_json(s);
        std::ostringstream txt;
        txt << "vertices " << s.vertex_count() << ", simplices " << s.simplex_count()
            << ", components " << s.components().count() << "\n";
        emit(o, j, txt.str());
        return 0;
    }
    if (cmd_edge->parsed()) {
        auto text = read_input(o.input);
        auto x = SimplicialComplex::load(text);
        auto data = edge_group_presentation(x);
        Presentation pres = simplify ? tietze_simplify(data.presentation) : data.presentation;
        auto inv = abelianization(data.presentation);
        Json j = artifact_envelope(config_json(o, "edge-group"), text);
        j["presentation"] = presentation_to_json(pres);
        j["abelian_invariants"] = abelian_to_json(inv);
        emit(o, j, inv.to_string() + "\n");
        return 0;
    }
    if (cmd_hom->parsed()) {
        auto text = read_input(o.input);
        auto x = SimplicialComplex::load(text);
        HomologyResult h;
        if (target == "x") {
            h = simplicial_homology(x, dim);
        } else if (target == "omega") {
            auto s = OmegaSkeleton::build(x, kcap, dim + 1, {}, o.workers);
            h = simplicial_homology(s, dim);
        } else {
            h = chain_complex_of_stone(x, kcap, dim + 1).graded.homology(dim);
        }
        Json j = artifact_envelope(config_json(o, "homology"), text);
        j["target"] = target;
        j["k"] = kcap;
        j["homology"] = homology_to_json(h);
        emit(o, j, h.to_string() + "\n");
        return 0;
    }
    if (cmd_phi->parsed()) {
        auto text = read_input(o.input);
        auto x = SimplicialComplex::load(text);
        std::ifstream sf(sphere_path);
        if (!sf) throw ValidationError("cannot open sphere '" + sphere_path + "'");
        Json gj = Json::parse(sf);
        auto f = sphere_from_json(x, gj);
        // the image loop and its component only need the 1-skeleton
        auto s = OmegaSkeleton::build(x, std::max(o.max_len, f.m), 1, {}, o.workers);
        auto path = phi_path(f, s);
        auto comps = s.components();
        Json j = artifact_envelope(config_json(o, "phi"), text);
        Json loops = Json::array();
        for (int id : path) loops.push_back(s.loop(id).to_literal());
        j["loop"] = loops;
        j["component"] = comps.comp_of[static_cast<size_t>(path.front())];
        std::ostringstream txt;
        txt << "length " << path.size() - 1 << ", component "
            << comps.comp_of[static_cast<size_t>(path.front())] << "\n";
        emit(o, j, txt.str());
        return 0;
    }
    if (cmd_fs->parsed()) {
        auto text = read_input(o.input);
        auto x = SimplicialComplex::load(text);
        auto load_sphere = [&x](const std::string& path) {
            std::ifstream in(path);
            if (!in) throw ValidationError("cannot open sphere '" + path + "'");
            return sphere_from_json(x, Json::parse(in));
        };
        Json j = artifact_envelope(config_json(o, "face-sphere " + fs_action), text);
        if (fs_action == "validate") {
            auto f = load_sphere(sphere_a);
            j["sphere"] = sphere_to_json(f);
            j["valid"] = true;
            emit(o, j, "valid\n");
            return 0;
        }
        if (sphere_b.empty()) throw ValidationError("face-sphere " + fs_action + " needs --sphere2");
        auto f = load_sphere(sphere_a);
        auto g = load_sphere(sphere_b);
        if (fs_action == "product") {
            j["sphere"] = sphere_to_json(fs_product(f, g));
            emit(o, j, "ok\n");
            return 0;
        }
        CycleClassifier h2(x, 2);
        auto r = fs_equivalent(f, g, SphereSearchCaps{-1, -1, o.budget}, &h2);
        const char* verdict = r.status == SphereEquivStatus::Found              ? "equivalent"
                              : r.status == SphereEquivStatus::DistinctClass    ? "distinct"
                              : r.status == SphereEquivStatus::ExhaustedNotFound ? "distinct-within-caps"
                                                                                  : "inconclusive";
        j["verdict"] = verdict;
        j["dequeued"] = r.dequeued;
        emit(o, j, std::string(verdict) + "\n");
        return r.status == SphereEquivStatus::BudgetNotFound ? 2 : 0;
    }
    if (cmd_verify->parsed()) {
        VerifyConfig cfg;
        cfg.seed = o.seed;
        cfg.budget = o.budget;
        cfg.workers = o.workers;
        cfg.max_len = vmax_len;
        if (!vin.empty()) {
            cfg.input_text = read_input(vin);
            cfg.input_name = vin;
        }
        auto r = run_suite(suite, cfg);
        if (o.format == "json") {
            Json j = artifact_envelope(config_json(o, "verify " + suite), cfg.input_text.value_or(""));
            j["report"] = report_to_json(r);
            emit(o, j, "");
        } else {
            emit(o, Json{}, report_to_text(r));
        }
        return r.exit_code();
    }
    return 4;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help, --version
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const CapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
