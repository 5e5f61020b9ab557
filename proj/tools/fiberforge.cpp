// fiberforge: build, inspect, and verify classical triangulations of circle
// bundles over triangulated bases.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fiberforge/bundle.hpp"
#include "fiberforge/euler_lcf.hpp"
#include "fiberforge/game.hpp"
#include "fiberforge/homology.hpp"
#include "fiberforge/json_io.hpp"
#include "fiberforge/presets.hpp"
#include "fiberforge/sphere_enum.hpp"
#include "fiberforge/total_space.hpp"

namespace ff = fiberforge;
namespace fs = std::filesystem;

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ff::ValidationError("cannot open '" + path + "' for reading");
        buffer << in.rdbuf();
    }
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ff::ValidationError("cannot open '" + path + "' for writing");
    out << text;
}

std::string dump(const ff::Json& j) { return j.dump(2) + "\n"; }

// A base argument is stdin ("-"), a JSON file path, or a preset name
// (optionally "suspension_ngon:6").
ff::SimplicialComplex load_base(const std::string& value) {
    if (value == "-" || fs::exists(value))
        return ff::complex_from_json(ff::parse_json(read_input(value)));
    std::string name = value;
    int n = 0;
    if (auto colon = value.find(':'); colon != std::string::npos) {
        name = value.substr(0, colon);
        try {
            n = std::stoi(value.substr(colon + 1));
        } catch (const std::exception&) {
            throw ff::ValidationError("cannot parse preset parameter in '" + value + "'");
        }
    }
    const auto names = ff::preset_names();
    if (std::find(names.begin(), names.end(), name) != names.end())
        return ff::generate(name, n);
    throw ff::ValidationError("'" + value +
                              "' is neither a readable file nor a preset name");
}

ff::NecklaceBundle load_bundle(const std::string& value) {
    return ff::bundle_from_json(ff::parse_json(read_input(value)));
}

std::string h1_description(const ff::HomologyGroup& h) {
    if (h.betti == 0 && h.torsion.empty()) return "trivial";
    return ff::homology_to_string(h);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical triangulations of circle bundles over simplicial bases"};
    app.require_subcommand(1);
    bool json_errors = false;
    app.add_flag("--json-errors", json_errors,
                 "report errors as machine-readable JSON on stdout");
    [[maybe_unused]] const char* seed = std::getenv("FIBERFORGE_SEED"); // reserved

    std::function<int()> run;

    // gen
    {
        auto* cmd = app.add_subcommand("gen", "generate a preset base complex");
        auto preset = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>("-");
        cmd->add_option("--preset", *preset, "preset name")->required();
        cmd->add_option("-n", *n, "size parameter (suspension_ngon)");
        cmd->add_option("-o", *out, "output file ('-' = stdout)");
        cmd->callback([=, &run] {
            run = [=] {
                write_output(*out, dump(ff::complex_to_json(ff::generate(*preset, *n))));
                return 0;
            };
        });
    }

    // build
    {
        auto* cmd = app.add_subcommand(
            "build", "build a classical bundle with prescribed Euler number");
        auto base = std::make_shared<std::string>("-");
        auto euler = std::make_shared<long long>(0);
        auto out = std::make_shared<std::string>("-");
        cmd->add_option("--base", *base, "base complex (file, preset name, or '-')");
        cmd->add_option("--euler", *euler, "Euler number")->required();
        cmd->add_option("-o", *out, "output file ('-' = stdout)");
        cmd->callback([=, &run] {
            run = [=] {
                ff::SimplicialComplex b = load_base(*base);
                ff::NecklaceBundle bundle = ff::build_with_euler(b, *euler);
                write_output(*out, dump(ff::bundle_to_json(bundle)));
                return 0;
            };
        });
    }

    // trivial
    {
        auto* cmd = app.add_subcommand("trivial", "build the trivial bundle");
        auto base = std::make_shared<std::string>("-");
        auto out = std::make_shared<std::string>("-");
        cmd->add_option("--base", *base, "base complex (file, preset name, or '-')");
        cmd->add_option("-o", *out, "output file ('-' = stdout)");
        cmd->callback([=, &run] {
            run = [=] {
                ff::NecklaceBundle bundle = ff::trivial_bundle(load_base(*base));
                write_output(*out, dump(ff::bundle_to_json(bundle)));
                return 0;
            };
        });
    }

    // general
    {
        auto* cmd = app.add_subcommand(
            "general", "build a bundle over an arbitrary base from an orientation cochain");
        auto base = std::make_shared<std::string>("-");
        auto orientation = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>("-");
        cmd->add_option("--base", *base, "base complex (file, preset name, or '-')");
        cmd->add_option("--orientation", *orientation, "±1-valued 1-cochain JSON file")
            ->required();
        cmd->add_option("-o", *out, "output file ('-' = stdout)");
        cmd->callback([=, &run] {
            run = [=] {
                ff::SimplicialComplex b = load_base(*base);
                ff::Cochain a = ff::cochain_from_json(ff::parse_json(read_input(*orientation)));
                bool two_torsion = false;
                ff::NecklaceBundle bundle = ff::build_general(b, a, &two_torsion);
                if (two_torsion)
                    std::cerr << "warning: H^2(B;Z) has 2-torsion; not every Euler class "
                                 "need be realizable this way\n";
                write_output(*out, dump(ff::bundle_to_json(bundle)));
                return 0;
            };
        });
    }

    // euler
    {
        auto* cmd = app.add_subcommand("euler", "per-triangle local formula report");
        auto bundle_path = std::make_shared<std::string>("-");
        auto out = std::make_shared<std::string>("-");
        cmd->add_option("--bundle", *bundle_path, "bundle JSON (file or '-')");
        cmd->add_option("-o", *out, "output file ('-' = stdout)");
        cmd->callback([=, &run] {
            run = [=] {
                ff::LcfResult r = ff::lcf_report(load_bundle(*bundle_path));
                write_output(*out, dump(ff::lcf_report_to_json(r)));
                return 0;
            };
        });
    }

    // total-space
    {
        auto* cmd = app.add_subcommand("total-space",
                                       "reconstruct the total space of a bundle");
        auto bundle_path = std::make_shared<std::string>("-");
        auto out = std::make_shared<std::string>("-");
        auto check = std::make_shared<bool>(false);
        cmd->add_option("--bundle", *bundle_path, "bundle JSON (file or '-')");
        cmd->add_option("-o", *out, "output file ('-' = stdout)");
        cmd->add_flag("--check", *check, "verify the triangulation and report");
        cmd->callback([=, &run] {
            run = [=] {
                ff::NecklaceBundle bundle = load_bundle(*bundle_path);
                ff::TotalSpace t = ff::reconstruct(bundle);
                if (*check) {
                    ff::BundleCheckReport report = ff::verify_bundle_triangulation(t, bundle);
                    ff::HomologyGroup h1 = ff::homology(t.complex, 1);
                    std::ostringstream line;
                    line << "total space: " << t.complex.vertex_count() << " vertices, ";
                    if (t.complex.dimension() == 3)
                        line << t.complex.count(3) << " tetrahedra, ";
                    else
                        line << t.complex.maximal_simplices().size()
                             << " maximal simplices (dimension " << t.complex.dimension()
                             << "), ";
                    line << "H1 " << h1_description(h1);
                    std::cout << line.str() << "\n";
                    if (!report.ok()) {
                        for (const std::string& v : report.violations)
                            std::cout << "check failed: " << v << "\n";
                        return 2;
                    }
                    std::cout << "all checks passed\n";
                    if (*out != "-") write_output(*out, dump(ff::total_space_to_json(t)));
                } else {
                    write_output(*out, dump(ff::total_space_to_json(t)));
                }
                return 0;
            };
        });
    }

    // homology
    {
        auto* cmd = app.add_subcommand("homology", "integral simplicial homology");
        auto complex_path = std::make_shared<std::string>("-");
        auto dim = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>("-");
        cmd->add_option("--complex", *complex_path, "complex JSON (file or '-')");
        cmd->add_option("--dim", *dim, "homology degree k")->required();
        cmd->add_option("-o", *out, "output file ('-' = stdout)");
        cmd->callback([=, &run] {
            run = [=] {
                ff::SimplicialComplex x =
                    ff::complex_from_json(ff::parse_json(read_input(*complex_path)));
                write_output(*out, dump(ff::homology_to_json(ff::homology(x, *dim))));
                return 0;
            };
        });
    }

    // game
    {
        auto* cmd = app.add_subcommand("game", "coloring game on a triangulated sphere");
        auto base = std::make_shared<std::string>("-");
        auto exhaustive = std::make_shared<bool>(false);
        auto certify = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--base", *base, "base sphere (file, preset name, or '-')");
        cmd->add_flag("--exhaustive", *exhaustive, "exact search instead of greedy");
        cmd->add_flag("--certify", *certify, "emit a winning-strategy certificate");
        cmd->add_option("-o", *out, "certificate output file");
        cmd->callback([=, &run] {
            run = [=] {
                ff::SimplicialComplex b = load_base(*base);
                ff::SolveResult r = ff::solve(b, *exhaustive);
                std::cout << "best green " << r.best_green << ", "
                          << (r.winning ? "winning" : "not winning") << "\n";
                if (*certify) {
                    ff::EulerBoundCertificate cert = ff::euler_bound(b, r.strategy);
                    std::string text = dump(ff::certificate_to_json(b, cert));
                    if (out->empty())
                        std::cout << text;
                    else
                        write_output(*out, text);
                }
                return 0;
            };
        });
    }

    // verify
    {
        auto* cmd = app.add_subcommand("verify", "check bundle consistency");
        auto bundle_path = std::make_shared<std::string>("-");
        cmd->add_option("--bundle", *bundle_path, "bundle JSON (file or '-')");
        cmd->callback([=, &run] {
            run = [=] {
                ff::NecklaceBundle bundle = load_bundle(*bundle_path);
                ff::ConsistencyReport report = ff::verify_consistency(bundle);
                if (!report.ok()) {
                    for (const std::string& v : report.violations)
                        std::cout << "violation: " << v << "\n";
                    return 2;
                }
                std::cout << "bundle consistent\n";
                ff::ClassicalCheck classical = ff::check_bundle_classical(bundle);
                if (classical.ok)
                    std::cout << "classical: yes\n";
                else
                    std::cout << "classical: no (" << classical.reason << ")\n";
                return 0;
            };
        });
    }

    // enumerate-spheres
    {
        auto* cmd = app.add_subcommand("enumerate-spheres",
                                       "triangulated 2-spheres up to isomorphism");
        auto max_vertices = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--max-vertices", *max_vertices, "largest vertex count (4..8)")
            ->required();
        cmd->add_option("-o", *out, "directory for one JSON file per sphere");
        cmd->callback([=, &run] {
            run = [=] {
                std::vector<ff::SimplicialComplex> spheres =
                    ff::enumerate_spheres(*max_vertices);
                std::map<int, int> by_vertices;
                for (const auto& s : spheres) ++by_vertices[s.vertex_count()];
                for (const auto& [v, count] : by_vertices)
                    std::cout << "v=" << v << ": " << count << "\n";
                std::cout << "total: " << spheres.size() << "\n";
                if (!out->empty()) {
                    fs::create_directories(*out);
                    std::map<int, int> index;
                    for (const auto& s : spheres) {
                        int k = index[s.vertex_count()]++;
                        fs::path file = fs::path(*out) /
                                        ("sphere_" + std::to_string(s.vertex_count()) +
                                         "v_" + std::to_string(k) + ".json");
                        write_output(file.string(), dump(ff::complex_to_json(s)));
                    }
                }
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto report_error = [&](const std::string& type, const std::string& message) {
        if (json_errors) {
            ff::Json j;
            j["error"] = {{"type", type}, {"message", message}};
            std::cout << dump(j);
        }
        std::cerr << "error: " << message << "\n";
    };

    try {
        return run();
    } catch (const ff::ObstructionError& e) {
        report_error("obstruction", e.what());
        return 3;
    } catch (const ff::ValidationError& e) {
        report_error("validation", e.what());
        return 2;
    } catch (const std::exception& e) {
        report_error("internal", e.what());
        return 1;
    }
}
