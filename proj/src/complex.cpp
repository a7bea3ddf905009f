#include "knottrace/complex.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "knottrace/f2.hpp"

namespace knottrace {

const char* violation_name(Violation v) {
    switch (v) {
        case Violation::Parse: return "parse";
        case Violation::Grading: return "grading";
        case Violation::Differential: return "differential";
        case Violation::Symmetry: return "symmetry";
        case Violation::Normalization: return "normalization";
    }
    return "unknown";
}

namespace {

[[noreturn]] void fail(Violation kind, const std::string& msg) {
    throw ValidationError(kind, std::string(violation_name(kind)) + " violation: " + msg);
}

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        if (pos > start) out.emplace_back(line.substr(start, pos - start));
    }
    return out;
}

int parse_int(std::string_view tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        fail(Violation::Parse, "bad integer '" + std::string(tok) + "' on line " +
                                   std::to_string(line_no));
    return value;
}

int parse_graded_field(const std::string& tok, char label, int line_no) {
    if (tok.size() < 3 || tok[0] != label || tok[1] != '=')
        fail(Violation::Parse, std::string("expected ") + label + "=<int>, got '" + tok +
                                   "' on line " + std::to_string(line_no));
    return parse_int(std::string_view(tok).substr(2), line_no);
}

}  // namespace

int KnotComplex::index_of(std::string_view id) const {
    for (int k = 0; k < size(); ++k)
        if (generators_[k].id == id) return k;
    return -1;
}

KnotComplex KnotComplex::parse(std::string_view text) {
    KnotComplex c;
    std::vector<std::pair<std::string, std::string>> arrow_ids;
    std::vector<int> arrow_lines;
    bool saw_header = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto toks = tokenize(line);
        if (toks.empty()) {
            if (pos > text.size()) break;
            continue;
        }

        if (toks[0] == "knot") {
            if (saw_header) fail(Violation::Parse, "duplicate 'knot' header on line " +
                                                       std::to_string(line_no));
            if (toks.size() != 2)
                fail(Violation::Parse, "'knot' expects a single name on line " +
                                           std::to_string(line_no));
            c.name_ = toks[1];
            saw_header = true;
        } else if (toks[0] == "gen") {
            if (!saw_header) fail(Violation::Parse, "'gen' before 'knot' header");
            if (toks.size() != 4)
                fail(Violation::Parse, "'gen' expects <id> A=<int> M=<int> on line " +
                                           std::to_string(line_no));
            if (c.index_of(toks[1]) >= 0)
                fail(Violation::Parse, "duplicate generator id '" + toks[1] + "'");
            GeneratorInfo g;
            g.id = toks[1];
            g.alexander = parse_graded_field(toks[2], 'A', line_no);
            g.maslov = parse_graded_field(toks[3], 'M', line_no);
            c.generators_.push_back(std::move(g));
        } else if (toks[0] == "arr") {
            if (!saw_header) fail(Violation::Parse, "'arr' before 'knot' header");
            if (toks.size() != 3)
                fail(Violation::Parse, "'arr' expects <from> <to> on line " +
                                           std::to_string(line_no));
            arrow_ids.emplace_back(toks[1], toks[2]);
            arrow_lines.push_back(line_no);
        } else {
            fail(Violation::Parse, "unknown directive '" + toks[0] + "' on line " +
                                       std::to_string(line_no));
        }
        if (pos > text.size()) break;
    }

    if (!saw_header) fail(Violation::Parse, "missing 'knot' header");

    for (std::size_t k = 0; k < arrow_ids.size(); ++k) {
        const auto& [from, to] = arrow_ids[k];
        int fi = c.index_of(from);
        int ti = c.index_of(to);
        if (fi < 0 || ti < 0)
            fail(Violation::Parse, "arrow references unknown generator '" +
                                       (fi < 0 ? from : to) + "' on line " +
                                       std::to_string(arrow_lines[k]));
        if (!c.arrows_.emplace(fi, ti).second)
            fail(Violation::Parse, "duplicate arrow " + from + " -> " + to);
    }

    c.validate();
    return c;
}

KnotComplex KnotComplex::make(std::string name, std::vector<GeneratorInfo> generators,
                              std::set<std::pair<int, int>> arrows) {
    KnotComplex c;
    c.name_ = std::move(name);
    c.generators_ = std::move(generators);
    c.arrows_ = std::move(arrows);
    for (int k = 0; k < c.size(); ++k) {
        for (int j = k + 1; j < c.size(); ++j)
            if (c.generators_[k].id == c.generators_[j].id)
                fail(Violation::Parse, "duplicate generator id '" + c.generators_[k].id + "'");
    }
    for (const auto& [f, t] : c.arrows_)
        if (f < 0 || f >= c.size() || t < 0 || t >= c.size())
            fail(Violation::Parse, "arrow endpoint out of range");
    c.validate();
    return c;
}

void KnotComplex::validate() {
    // Grading legality of every arrow.
    for (const auto& [f, t] : arrows_) {
        const auto& x = generators_[f];
        const auto& y = generators_[t];
        int twice_a = y.maslov - x.maslov + 1;
        if (twice_a % 2 != 0)
            fail(Violation::Grading, "arrow " + x.id + " -> " + y.id +
                                         " has non-integer i-drop (M(y)-M(x)+1 is odd)");
        int a = twice_a / 2;
        if (a < 0)
            fail(Violation::Grading,
                 "arrow " + x.id + " -> " + y.id + " has negative i-drop " + std::to_string(a));
        int d = a + x.alexander - y.alexander;
        if (d < 0)
            fail(Violation::Grading,
                 "arrow " + x.id + " -> " + y.id + " has negative j-drop " + std::to_string(d));
    }

    // d^2 = 0 as a plain matrix identity: path counts mod 2 vanish.
    int n = size();
    std::vector<std::vector<int>> out(n);
    for (const auto& [f, t] : arrows_) out[f].push_back(t);
    for (int x = 0; x < n; ++x) {
        std::map<int, int> paths;
        for (int mid : out[x])
            for (int z : out[mid]) paths[z] ^= 1;
        for (const auto& [z, parity] : paths)
            if (parity)
                fail(Violation::Differential, "d^2 != 0 from " + generators_[x].id + " to " +
                                                  generators_[z].id);
    }

    // Graded homology ranks: only arrows preserving both gradings survive in
    // the associated graded of B, and those split by Alexander grading.
    hfk_ranks_.clear();
    std::map<int, std::vector<int>> by_alex;
    for (int k = 0; k < n; ++k) by_alex[generators_[k].alexander].push_back(k);
    for (const auto& [s, gens] : by_alex) {
        std::map<int, int> local;
        for (std::size_t k = 0; k < gens.size(); ++k) local[gens[k]] = static_cast<int>(k);
        F2ColMatrix d(static_cast<int>(gens.size()));
        for (int g : gens) {
            F2Vec col(static_cast<int>(gens.size()));
            for (int t : out[g])
                if (idrop(g, t) == 0 && jdrop(g, t) == 0) col.flip(local.at(t));
            d.add_col(std::move(col));
        }
        int rank = column_rank(d);
        int dim = static_cast<int>(gens.size()) - 2 * rank;
        if (dim != 0) hfk_ranks_[s] = dim;
    }
    for (const auto& [s, r] : hfk_ranks_) {
        auto it = hfk_ranks_.find(-s);
        if (it == hfk_ranks_.end() || it->second != r)
            fail(Violation::Symmetry, "graded rank " + std::to_string(r) + " at A=" +
                                          std::to_string(s) + " has no matching rank at A=" +
                                          std::to_string(-s));
    }

    // dim H(B) = 1: the i = 0 subquotient keeps arrows with i-drop 0.
    F2ColMatrix db(n);
    for (int x = 0; x < n; ++x) {
        F2Vec col(n);
        for (int t : out[x])
            if (idrop(x, t) == 0) col.flip(t);
        db.add_col(std::move(col));
    }
    int hb = n - 2 * column_rank(db);
    if (hb != 1)
        fail(Violation::Normalization,
             "dim H(B) = " + std::to_string(hb) + ", expected 1");

    genus_ = 0;
    for (const auto& [s, r] : hfk_ranks_) genus_ = std::max(genus_, s);
}

KnotComplex KnotComplex::mirrored() const {
    std::vector<GeneratorInfo> gens;
    gens.reserve(generators_.size());
    for (const auto& g : generators_) gens.push_back({g.id, -g.alexander, -g.maslov});
    std::set<std::pair<int, int>> rev;
    for (const auto& [f, t] : arrows_) rev.emplace(t, f);
    return make("mirror(" + name_ + ")", std::move(gens), std::move(rev));
}

KnotComplex KnotComplex::connected_sum(const KnotComplex& a, const KnotComplex& b) {
    std::vector<GeneratorInfo> gens;
    gens.reserve(a.size() * b.size());
    auto pair_index = [&](int i, int j) { return i * b.size() + j; };
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            gens.push_back({a.generator(i).id + "*" + b.generator(j).id,
                            a.generator(i).alexander + b.generator(j).alexander,
                            a.generator(i).maslov + b.generator(j).maslov});
    std::set<std::pair<int, int>> arrows;
    for (const auto& [f, t] : a.arrows_)
        for (int j = 0; j < b.size(); ++j) arrows.emplace(pair_index(f, j), pair_index(t, j));
    for (const auto& [f, t] : b.arrows_)
        for (int i = 0; i < a.size(); ++i) arrows.emplace(pair_index(i, f), pair_index(i, t));
    return make("sum(" + a.name_ + "," + b.name_ + ")", std::move(gens), std::move(arrows));
}

std::string KnotComplex::to_text() const {
    std::ostringstream out;
    out << "knot " << name_ << "\n";
    for (const auto& g : generators_)
        out << "gen " << g.id << " A=" << g.alexander << " M=" << g.maslov << "\n";
    for (const auto& [f, t] : arrows_)
        out << "arr " << generators_[f].id << " " << generators_[t].id << "\n";
    return out.str();
}

IsoCheck isomorphic(const KnotComplex& a, const KnotComplex& b) {
    if (a.size() != b.size() || a.arrows().size() != b.arrows().size())
        return IsoCheck::NotIsomorphic;

    std::map<std::pair<int, int>, std::vector<int>> class_a, class_b;
    for (int k = 0; k < a.size(); ++k)
        class_a[{a.generator(k).alexander, a.generator(k).maslov}].push_back(k);
    for (int k = 0; k < b.size(); ++k)
        class_b[{b.generator(k).alexander, b.generator(k).maslov}].push_back(k);

    if (class_a.size() != class_b.size()) return IsoCheck::NotIsomorphic;
    for (const auto& [key, members] : class_a) {
        auto it = class_b.find(key);
        if (it == class_b.end() || it->second.size() != members.size())
            return IsoCheck::NotIsomorphic;
        if (members.size() > 3) return IsoCheck::Unsupported;
    }

    // Odometer over the per-class permutations.
    std::vector<std::vector<int>> sources, targets;
    for (const auto& [key, members] : class_a) {
        sources.push_back(members);
        targets.push_back(class_b.at(key));
    }
    std::vector<std::vector<int>> perms(sources.size());
    for (std::size_t c = 0; c < sources.size(); ++c) {
        perms[c].resize(sources[c].size());
        for (std::size_t i = 0; i < perms[c].size(); ++i) perms[c][i] = static_cast<int>(i);
    }

    std::vector<int> map_ab(a.size(), -1);
    while (true) {
        for (std::size_t c = 0; c < sources.size(); ++c)
            for (std::size_t i = 0; i < sources[c].size(); ++i)
                map_ab[sources[c][i]] = targets[c][perms[c][i]];
        bool ok = true;
        for (const auto& [f, t] : a.arrows()) {
            if (!b.arrows().count({map_ab[f], map_ab[t]})) {
                ok = false;
                break;
            }
        }
        if (ok) return IsoCheck::Isomorphic;

        // advance odometer
        std::size_t c = 0;
        while (c < perms.size() && !std::next_permutation(perms[c].begin(), perms[c].end())) ++c;
        if (c == perms.size()) break;
    }
    return IsoCheck::NotIsomorphic;
}

}  // namespace knottrace
