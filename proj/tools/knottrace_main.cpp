// Command-line front end: computes concordance invariants, surgery ranks,
// trace profiles, trace comparisons, satellite exoticness certificates and
// shake-genus bounds from bigraded complex files or the built-in library.

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knottrace/cache.hpp"
#include "knottrace/errors.hpp"
#include "knottrace/formulas.hpp"
#include "knottrace/invariants.hpp"
#include "knottrace/library.hpp"
#include "knottrace/report.hpp"
#include "knottrace/surgery.hpp"
#include "knottrace/trace_logic.hpp"

namespace kt = knottrace;

namespace {

struct GlobalOpts {
    bool json = false;
    bool no_cache = false;
};

// Computes-or-fetches a body, then prints the full report.
void emit(const GlobalOpts& g, const std::string& command,
          const std::vector<std::string>& digest_parts,
          const std::function<std::string()>& make_text,
          const std::function<kt::ordered_json()>& make_json) {
    std::vector<std::string> parts = digest_parts;
    parts.push_back(g.json ? "json" : "text");
    kt::Report r;
    r.command = command;
    r.digest = kt::digest_hex(parts);

    kt::ResultCache cache(!g.no_cache);
    if (auto cached = cache.lookup(r.digest)) {
        r.body = *cached;
    } else {
        r.body = g.json ? make_json().dump(2) + "\n" : make_text();
        cache.store(r.digest, r.body);
    }
    std::cout << (g.json ? kt::render_json_document(r) : kt::render_text(r));
}

std::string echo(const std::vector<std::string>& words) {
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += " ";
        out += w;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knot Floer concordance invariants and knot-trace calculus"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "machine-readable reports");
    app.add_flag("--no-cache", g.no_cache, "skip the result cache");

    std::string input, input_b, lib_name;
    int framing = 0;
    std::optional<int> truncation, tb, rot, gsh;
    std::optional<int> adj_g, adj_self, adj_c1;
    std::string adj_kind = "closed";

    auto* inv = app.add_subcommand("invariants", "tau, nu, epsilon of a complex");
    inv->add_option("input", input, "complex file or lib:<name>")->required();

    auto* surg = app.add_subcommand("surgery", "per-spin^c ranks of n-surgery");
    surg->add_option("input", input)->required();
    surg->add_option("-n,--framing", framing, "surgery framing")->required();
    surg->add_option("--truncation", truncation, "override the truncation width");

    auto* prof = app.add_subcommand("profile", "trace profile (n, s_max, s'_max)");
    prof->add_option("input", input)->required();
    prof->add_option("-n,--framing", framing)->required();
    prof->add_option("--truncation", truncation);

    auto* cmp = app.add_subcommand("compare", "compare two oriented knot traces");
    cmp->add_option("inputA", input)->required();
    cmp->add_option("inputB", input_b)->required();
    cmp->add_option("-n,--framing", framing)->required();
    cmp->add_option("--truncation", truncation);

    auto* pq = app.add_subcommand("pq", "satellite-trace exoticness certificate");
    pq->add_option("input", input)->required();
    pq->add_option("-n,--framing", framing)->required();

    auto* bounds = app.add_subcommand("bounds", "shake-genus and Bennequin bounds");
    bounds->add_option("input", input)->required();
    bounds->add_option("-n,--framing", framing)->required();
    bounds->add_option("--tb", tb, "Thurston-Bennequin number");
    bounds->add_option("--rot", rot, "rotation number");
    bounds->add_option("--gsh", gsh, "known n-shake genus");
    bounds->add_option("--adj-g", adj_g, "adjunction: genus slot");
    bounds->add_option("--adj-self-int", adj_self, "adjunction: self-intersection");
    bounds->add_option("--adj-c1", adj_c1, "adjunction: Chern pairing / L1 norm");
    bounds->add_option("--adj-kind", adj_kind, "closed | disk")
        ->check(CLI::IsMember({"closed", "disk"}));

    auto* lib = app.add_subcommand("library", "built-in complexes");
    auto* lib_list = lib->add_subcommand("list", "list entries");
    auto* lib_show = lib->add_subcommand("show", "print an entry in wire format");
    lib_show->add_option("name", lib_name, "entry name or expression")->required();
    lib->require_subcommand(1);

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) {
        sc->fallthrough();
        for (auto* nested : sc->get_subcommands([](const CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*inv) {
            kt::KnotComplex c = kt::resolve_input(input);
            emit(g, echo({"invariants", input}), {"invariants", c.to_text()},
                 [&] { return kt::body_invariants(c.name(), kt::bundle(c), c.hfk_ranks()); },
                 [&] { return kt::json_invariants(c.name(), kt::bundle(c), c.hfk_ranks()); });
        } else if (*surg) {
            kt::KnotComplex c = kt::resolve_input(input);
            std::vector<std::string> cmd = {"surgery", input, "-n", std::to_string(framing)};
            if (truncation) {
                cmd.push_back("--truncation");
                cmd.push_back(std::to_string(*truncation));
            }
            kt::ConeResult cone = kt::cone_ranks(c, framing, truncation);
            emit(g, echo(cmd), {"surgery", c.to_text(), std::to_string(framing)},
                 [&] { return kt::body_cone(cone); }, [&] { return kt::json_cone(cone); });
        } else if (*prof) {
            kt::KnotComplex c = kt::resolve_input(input);
            std::vector<std::string> cmd = {"profile", input, "-n", std::to_string(framing)};
            if (truncation) {
                cmd.push_back("--truncation");
                cmd.push_back(std::to_string(*truncation));
            }
            kt::TraceProfile p = kt::trace_profile(c, framing, truncation);
            kt::InferenceOutcome infr = kt::infer_from_profile(p);
            emit(g, echo(cmd), {"profile", c.to_text(), std::to_string(framing)},
                 [&] { return kt::body_profile(p, infr); },
                 [&] { return kt::json_profile(p, infr); });
        } else if (*cmp) {
            kt::KnotComplex a = kt::resolve_input(input);
            kt::KnotComplex b = kt::resolve_input(input_b);
            std::vector<std::string> cmd = {"compare", input, input_b, "-n",
                                            std::to_string(framing)};
            if (truncation) {
                cmd.push_back("--truncation");
                cmd.push_back(std::to_string(*truncation));
            }
            kt::TraceProfile pa = kt::trace_profile(a, framing, truncation);
            kt::TraceProfile pb = kt::trace_profile(b, framing, truncation);
            kt::CompareResult r = kt::compare_traces(pa, pb);
            emit(g, echo(cmd),
                 {"compare", a.to_text(), b.to_text(), std::to_string(framing)},
                 [&] { return kt::body_compare(pa, pb, r); },
                 [&] { return kt::json_compare(pa, pb, r); });
        } else if (*pq) {
            kt::KnotComplex c = kt::resolve_input(input);
            kt::PqCertificate cert = kt::pq_verdict(c, framing);
            emit(g, echo({"pq", input, "-n", std::to_string(framing)}),
                 {"pq", c.to_text(), std::to_string(framing)},
                 [&] { return kt::body_pq(cert); }, [&] { return kt::json_pq(cert); });
        } else if (*bounds) {
            kt::KnotComplex c = kt::resolve_input(input);
            kt::BoundReport r;
            r.n = framing;
            r.nu = kt::nu(c);
            r.genus = c.genus();
            r.shake = kt::shake_bounds(r.nu, framing);
            for (const auto& sb : r.shake)
                if (sb.bound > r.genus) r.genus_warning = true;
            if (tb || rot || gsh) {
                r.tb = tb;
                r.rot = rot;
                r.g_sh = gsh;
                r.bennequin =
                    kt::bennequin_check(tb.value_or(0), rot.value_or(0), r.nu, framing, gsh);
            }
            if (adj_g) {
                kt::SurfaceKind kind =
                    adj_kind == "disk" ? kt::SurfaceKind::Disk : kt::SurfaceKind::Closed;
                r.adj_kind = kind;
                r.adj_g = adj_g;
                r.adj_self_int = adj_self.value_or(0);
                r.adj_c1 = adj_c1.value_or(0);
                r.adjunction =
                    kt::adjunction_allows(*adj_g, *r.adj_self_int, *r.adj_c1, kind);
            }
            std::vector<std::string> cmd = {"bounds", input, "-n", std::to_string(framing)};
            std::vector<std::string> digest = {"bounds", c.to_text(), std::to_string(framing)};
            auto push_opt = [&](const char* flag, const std::optional<int>& v) {
                if (v) {
                    cmd.push_back(flag);
                    cmd.push_back(std::to_string(*v));
                    digest.push_back(std::string(flag) + "=" + std::to_string(*v));
                }
            };
            push_opt("--tb", tb);
            push_opt("--rot", rot);
            push_opt("--gsh", gsh);
            push_opt("--adj-g", adj_g);
            push_opt("--adj-self-int", adj_self);
            push_opt("--adj-c1", adj_c1);
            if (adj_g) digest.push_back("kind=" + adj_kind);
            emit(g, echo(cmd), digest, [&] { return kt::body_bounds(r); },
                 [&] { return kt::json_bounds(r); });
        } else if (*lib) {
            if (*lib_list) {
                for (const auto& e : kt::builtin_library()) {
                    std::cout << e.name << ": " << e.complex.size() << " generators, genus "
                              << e.complex.genus();
                    if (!e.published.empty()) {
                        std::cout << " [";
                        bool first = true;
                        for (const auto& [k, v] : e.published) {
                            if (!first) std::cout << ", ";
                            std::cout << k << "=" << v.value;
                            first = false;
                        }
                        std::cout << "]";
                    }
                    std::cout << "\n";
                }
            } else if (*lib_show) {
                std::cout << kt::resolve_library_expr(lib_name).to_text();
            }
        }
    } catch (const kt::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const kt::ConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
