#include "knottrace/report.hpp"

#include <sstream>

namespace knottrace {

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string digest_hex(const std::vector<std::string>& parts) {
    std::uint64_t h = fnv1a64(kVersion);
    for (const auto& p : parts) {
        h = fnv1a64("\x1f", h);  // field separator so concatenations cannot collide
        h = fnv1a64(p, h);
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

std::string render_text(const Report& r) {
    std::ostringstream out;
    out << "knottrace " << kVersion << "\n";
    out << "command: " << r.command << "\n";
    out << "digest: " << r.digest << "\n";
    out << "--- results\n";
    out << r.body;
    return out.str();
}

std::string render_json_document(const Report& r) {
    ordered_json doc;
    doc["version"] = std::string(kVersion);
    doc["command"] = r.command;
    doc["digest"] = r.digest;
    doc["results"] = ordered_json::parse(r.body);
    return doc.dump(2) + "\n";
}

namespace {

std::string opt_str(const std::optional<int>& v, const char* absent = "undefined") {
    return v ? std::to_string(*v) : std::string(absent);
}

ordered_json opt_json(const std::optional<int>& v) {
    if (v) return *v;
    return nullptr;
}

const char* kind_label(const ConeResult& cone) {
    return cone.n == 0 ? "alexander" : "residue";
}

std::string verdict_str(TraceComparison v) {
    return v == TraceComparison::NotDiffeomorphic ? "NotDiffeomorphic" : "Inconclusive";
}

}  // namespace

std::string body_invariants(const std::string& name, const InvariantBundle& inv,
                            const std::map<int, int>& hfk) {
    std::ostringstream out;
    out << "knot: " << name << "\n";
    out << "tau: " << inv.tau << "\n";
    out << "nu: " << inv.nu << "\n";
    out << "epsilon: " << inv.epsilon << "\n";
    out << "genus: " << inv.genus << "\n";
    out << "tau_mirror: " << inv.tau_mirror << "\n";
    out << "nu_mirror: " << inv.nu_mirror << "\n";
    for (const auto& [s, r] : hfk) out << "hfk[" << s << "]: " << r << "\n";
    return out.str();
}

ordered_json json_invariants(const std::string& name, const InvariantBundle& inv,
                             const std::map<int, int>& hfk) {
    ordered_json j;
    j["knot"] = name;
    j["tau"] = inv.tau;
    j["nu"] = inv.nu;
    j["epsilon"] = inv.epsilon;
    j["genus"] = inv.genus;
    j["tau_mirror"] = inv.tau_mirror;
    j["nu_mirror"] = inv.nu_mirror;
    ordered_json ranks;
    for (const auto& [s, r] : hfk) ranks[std::to_string(s)] = r;
    j["hfk_ranks"] = std::move(ranks);
    return j;
}

std::string body_cone(const ConeResult& cone) {
    std::ostringstream out;
    out << "framing: " << cone.n << "\n";
    out << "spinc_labels: " << kind_label(cone) << "\n";
    for (const auto& [label, rank] : cone.spinc_ranks)
        out << "rank[" << label << "]: " << rank << "\n";
    out << "total_rank: " << cone.total_rank << "\n";
    out << "nonzero_inclusions:";
    if (cone.nonzero_inclusions.empty()) {
        out << " (none)";
    } else {
        for (int s : cone.nonzero_inclusions) out << " " << s;
    }
    out << "\n";
    out << "s_max: " << opt_str(cone.s_max) << "\n";
    return out.str();
}

ordered_json json_cone(const ConeResult& cone) {
    ordered_json j;
    j["framing"] = cone.n;
    j["spinc_labels"] = kind_label(cone);
    ordered_json ranks;
    for (const auto& [label, rank] : cone.spinc_ranks) ranks[std::to_string(label)] = rank;
    j["ranks"] = std::move(ranks);
    j["total_rank"] = cone.total_rank;
    j["nonzero_inclusions"] = cone.nonzero_inclusions;
    j["s_max"] = opt_json(cone.s_max);
    return j;
}

namespace {

void profile_lines(std::ostringstream& out, const TraceProfile& p,
                   const InferenceOutcome& inf, const std::string& prefix) {
    out << prefix << "s_max: " << opt_str(p.s_max) << "\n";
    out << prefix << "s_prime_max: " << opt_str(p.s_prime_max) << "\n";
    out << prefix << "inferred_nu: " << opt_str(inf.nu, "undetermined") << "\n";
    out << prefix << "inferred_abs_epsilon: " << opt_str(inf.abs_epsilon, "undetermined")
        << "\n";
    out << prefix << "rows:";
    if (inf.rows_applied.empty()) out << " (none)";
    for (int r : inf.rows_applied) out << " " << r;
    out << "\n";
}

ordered_json profile_json(const TraceProfile& p, const InferenceOutcome& inf) {
    ordered_json j;
    j["s_max"] = opt_json(p.s_max);
    j["s_prime_max"] = opt_json(p.s_prime_max);
    j["inferred_nu"] = opt_json(inf.nu);
    j["inferred_abs_epsilon"] = opt_json(inf.abs_epsilon);
    j["rows"] = inf.rows_applied;
    return j;
}

}  // namespace

std::string body_profile(const TraceProfile& p, const InferenceOutcome& inf) {
    std::ostringstream out;
    out << "framing: " << p.n << "\n";
    profile_lines(out, p, inf, "");
    return out.str();
}

ordered_json json_profile(const TraceProfile& p, const InferenceOutcome& inf) {
    ordered_json j;
    j["framing"] = p.n;
    j.update(profile_json(p, inf));
    return j;
}

std::string body_compare(const TraceProfile& a, const TraceProfile& b,
                         const CompareResult& r) {
    std::ostringstream out;
    out << "framing: " << a.n << "\n";
    profile_lines(out, a, r.inference_a, "a.");
    profile_lines(out, b, r.inference_b, "b.");
    out << "verdict: " << verdict_str(r.verdict) << "\n";
    out << "note: " << r.note << "\n";
    if (r.verdict == TraceComparison::NotDiffeomorphic)
        out << "USES nu-trace-invariance\n";
    return out.str();
}

ordered_json json_compare(const TraceProfile& a, const TraceProfile& b,
                          const CompareResult& r) {
    ordered_json j;
    j["framing"] = a.n;
    j["a"] = profile_json(a, r.inference_a);
    j["b"] = profile_json(b, r.inference_b);
    j["verdict"] = verdict_str(r.verdict);
    j["note"] = r.note;
    if (r.verdict == TraceComparison::NotDiffeomorphic)
        j["uses"] = std::vector<std::string>{"USES nu-trace-invariance"};
    return j;
}

std::string body_pq(const PqCertificate& cert) {
    std::ostringstream out;
    out << "framing: " << cert.n << "\n";
    out << "tau: " << cert.tau_k << "\n";
    out << "nu: " << cert.nu_k << "\n";
    out << "verdict: " << (cert.exotic ? "Exotic" : "NotApplicable") << "\n";
    if (cert.exotic) {
        out << "nu_P_lower: " << cert.nu_p_lower << "\n";
        out << "nu_Q: " << cert.nu_q << "\n";
        for (const auto& line : cert.uses) out << line << "\n";
    } else {
        out << "failed_hypothesis: " << cert.failed_hypothesis << "\n";
    }
    return out.str();
}

ordered_json json_pq(const PqCertificate& cert) {
    ordered_json j;
    j["framing"] = cert.n;
    j["tau"] = cert.tau_k;
    j["nu"] = cert.nu_k;
    j["verdict"] = cert.exotic ? "Exotic" : "NotApplicable";
    if (cert.exotic) {
        j["nu_P_lower"] = cert.nu_p_lower;
        j["nu_Q"] = cert.nu_q;
        j["uses"] = cert.uses;
    } else {
        j["failed_hypothesis"] = cert.failed_hypothesis;
    }
    return j;
}

std::string body_bounds(const BoundReport& r) {
    std::ostringstream out;
    out << "framing: " << r.n << "\n";
    out << "nu: " << r.nu << "\n";
    out << "genus: " << r.genus << "\n";
    for (const auto& sb : r.shake) {
        out << "shake_lower_bound: " << sb.bound << " rule=" << sb.rule;
        if (!sb.condition.empty()) out << " if " << sb.condition;
        out << "\n";
    }
    if (r.genus_warning)
        out << "warning: a shake bound exceeds the Seifert genus; check inputs\n";
    if (r.bennequin) {
        const auto& ben = *r.bennequin;
        out << "bennequin.tb: " << opt_str(r.tb, "-") << "\n";
        out << "bennequin.rot: " << opt_str(r.rot, "-") << "\n";
        out << "bennequin.weak: "
            << (ben.weak_applicable
                    ? (ben.weak_holds ? (*ben.weak_holds ? "holds" : "violated") : "applicable")
                    : "inapplicable")
            << "\n";
        out << "bennequin.strong: "
            << (ben.strong_applicable
                    ? (ben.strong_holds ? (*ben.strong_holds ? "holds" : "violated")
                                        : "applicable")
                    : "inapplicable")
            << "\n";
        if (ben.inconsistent_inputs) out << "bennequin.inconsistent_inputs: true\n";
    }
    if (r.adjunction) {
        out << "adjunction.kind: "
            << (r.adj_kind == SurfaceKind::Disk ? "disk" : "closed") << "\n";
        out << "adjunction.g: " << opt_str(r.adj_g, "-") << "\n";
        out << "adjunction.self_int: " << opt_str(r.adj_self_int, "-") << "\n";
        out << "adjunction.c1: " << opt_str(r.adj_c1, "-") << "\n";
        out << "adjunction.allows: " << (*r.adjunction ? "true" : "false") << "\n";
    }
    return out.str();
}

ordered_json json_bounds(const BoundReport& r) {
    ordered_json j;
    j["framing"] = r.n;
    j["nu"] = r.nu;
    j["genus"] = r.genus;
    ordered_json bounds = ordered_json::array();
    for (const auto& sb : r.shake) {
        ordered_json e;
        e["bound"] = sb.bound;
        e["rule"] = sb.rule;
        e["condition"] = sb.condition;
        bounds.push_back(std::move(e));
    }
    j["shake_lower_bounds"] = std::move(bounds);
    j["genus_warning"] = r.genus_warning;
    if (r.bennequin) {
        ordered_json ben;
        ben["tb"] = opt_json(r.tb);
        ben["rot"] = opt_json(r.rot);
        ben["g_sh"] = opt_json(r.g_sh);
        ben["weak_applicable"] = r.bennequin->weak_applicable;
        ben["strong_applicable"] = r.bennequin->strong_applicable;
        ben["weak_holds"] =
            r.bennequin->weak_holds ? ordered_json(*r.bennequin->weak_holds) : nullptr;
        ben["strong_holds"] =
            r.bennequin->strong_holds ? ordered_json(*r.bennequin->strong_holds) : nullptr;
        ben["inconsistent_inputs"] = r.bennequin->inconsistent_inputs;
        j["bennequin"] = std::move(ben);
    }
    if (r.adjunction) {
        ordered_json adj;
        adj["kind"] = r.adj_kind == SurfaceKind::Disk ? "disk" : "closed";
        adj["g"] = opt_json(r.adj_g);
        adj["self_int"] = opt_json(r.adj_self_int);
        adj["c1"] = opt_json(r.adj_c1);
        adj["allows"] = *r.adjunction;
        j["adjunction"] = std::move(adj);
    }
    return j;
}

}  // namespace knottrace
