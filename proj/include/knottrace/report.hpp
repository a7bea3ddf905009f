#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knottrace/formulas.hpp"
#include "knottrace/invariants.hpp"
#include "knottrace/surgery.hpp"
#include "knottrace/trace_logic.hpp"

#include <json.hpp>

namespace knottrace {

inline constexpr std::string_view kVersion = "0.1.0";

// Reports are deterministic byte for byte: the header echoes the command and
// an input digest, the body carries only the structured results.  Inputs like
// the truncation width live in the echo, never in the body, so results that
// are mathematically stable stay byte-stable.
struct Report {
    std::string command;
    std::string digest;
    std::string body;  // text mode: key-value lines; json mode: a dumped object
};

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ull);
std::string digest_hex(const std::vector<std::string>& parts);

std::string render_text(const Report& r);
std::string render_json_document(const Report& r);  // body must hold a JSON object

using ordered_json = nlohmann::ordered_json;

// Body builders, one per command, text and JSON flavors.
std::string body_invariants(const std::string& name, const InvariantBundle& inv,
                            const std::map<int, int>& hfk);
ordered_json json_invariants(const std::string& name, const InvariantBundle& inv,
                             const std::map<int, int>& hfk);

std::string body_cone(const ConeResult& cone);
ordered_json json_cone(const ConeResult& cone);

std::string body_profile(const TraceProfile& p, const InferenceOutcome& inf);
ordered_json json_profile(const TraceProfile& p, const InferenceOutcome& inf);

std::string body_compare(const TraceProfile& a, const TraceProfile& b, const CompareResult& r);
ordered_json json_compare(const TraceProfile& a, const TraceProfile& b, const CompareResult& r);

std::string body_pq(const PqCertificate& cert);
ordered_json json_pq(const PqCertificate& cert);

struct BoundReport {
    int n = 0;
    int nu = 0;
    int genus = 0;
    std::vector<ShakeBound> shake;
    std::optional<BennequinReport> bennequin;
    std::optional<int> tb, rot, g_sh;
    std::optional<bool> adjunction;  // verdict, when adjunction inputs were given
    std::optional<int> adj_g, adj_self_int, adj_c1;
    std::optional<SurfaceKind> adj_kind;
    bool genus_warning = false;  // some bound exceeded the Seifert genus
};

std::string body_bounds(const BoundReport& r);
ordered_json json_bounds(const BoundReport& r);

}  // namespace knottrace
