#include "gapmatch/io.hpp"

#include <sstream>

#include <json.hpp>

#include "gapmatch/errors.hpp"
#include "gapmatch/structure.hpp"

namespace gapmatch {

using nlohmann::json;

namespace {

Word parse_word(const json& value, Alphabet& alphabet, const char* field) {
    if (value.is_string()) {
        return alphabet.encode_chars(value.get<std::string>());
    }
    if (value.is_array()) {
        std::vector<Symbol> syms;
        for (const auto& tok : value) {
            if (!tok.is_string() || tok.get<std::string>().empty())
                throw ParseError(std::string(field) + ": tokens must be non-empty strings");
            syms.push_back(alphabet.intern(tok.get<std::string>()));
        }
        return Word(std::move(syms));
    }
    throw ParseError(std::string(field) + ": expected a string or an array of tokens");
}

SemilinearSet parse_semilinear(const json& payload, const std::string& where) {
    if (!payload.is_array() || payload.empty())
        throw ParseError(where + ": semilinear payload must be a non-empty array of "
                                 "{offset, periods} objects");
    std::vector<LinearSet> parts;
    for (const auto& part : payload) {
        if (!part.is_object() || !part.contains("offset"))
            throw ParseError(where + ": each linear part needs an \"offset\"");
        const std::uint64_t offset = part.at("offset").get<std::uint64_t>();
        std::vector<std::uint64_t> periods;
        if (part.contains("periods"))
            for (const auto& p : part.at("periods")) periods.push_back(p.get<std::uint64_t>());
        try {
            parts.emplace_back(offset, std::move(periods));
        } catch (const std::invalid_argument& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    return SemilinearSet(std::move(parts));
}

Dfa parse_dfa(const json& payload, Alphabet& alphabet, const std::string& where) {
    if (!payload.is_object())
        throw ParseError(where + ": regular payload must be a DFA object");
    for (const char* key : {"states", "start", "accepting", "transitions"})
        if (!payload.contains(key))
            throw ParseError(where + ": DFA payload missing \"" + key + "\"");

    const std::uint32_t states = payload.at("states").get<std::uint32_t>();
    const std::uint32_t start = payload.at("start").get<std::uint32_t>();
    std::vector<Dfa::State> accepting;
    for (const auto& q : payload.at("accepting")) accepting.push_back(q.get<std::uint32_t>());

    // Intern all transition symbols first so the DFA can size its alphabet
    // to the full instance alphabet.
    struct RawTransition { std::uint32_t from; std::string symbol; std::uint32_t to; };
    std::vector<RawTransition> raw;
    for (const auto& t : payload.at("transitions")) {
        if (!t.is_array() || t.size() != 3 || !t[1].is_string())
            throw ParseError(where + ": transitions must be [state, \"symbol\", state] triples");
        raw.push_back({t[0].get<std::uint32_t>(), t[1].get<std::string>(),
                       t[2].get<std::uint32_t>()});
        alphabet.intern(raw.back().symbol);
    }

    try {
        Dfa dfa(states, static_cast<std::uint32_t>(alphabet.size()), start, std::move(accepting));
        for (const auto& t : raw)
            dfa.add_transition(t.from, *alphabet.find(t.symbol), t.to);
        return dfa;
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
}

json word_to_json(const Word& w, const Alphabet& alphabet) {
    bool single_chars = true;
    for (Symbol s : w.symbols())
        if (alphabet.token(s).size() != 1) { single_chars = false; break; }
    if (single_chars) return alphabet.decode(w);
    json tokens = json::array();
    for (Symbol s : w.symbols()) tokens.push_back(alphabet.token(s));
    return tokens;
}

json constraint_to_json(const GapConstraint& c, const Alphabet& alphabet) {
    json out;
    out["i"] = c.i;
    out["j"] = c.j;
    if (c.is_semilinear()) {
        out["type"] = "semilinear";
        json payload = json::array();
        for (const auto& part : c.semilinear().parts()) {
            json p;
            p["offset"] = part.offset();
            p["periods"] = part.periods();
            payload.push_back(std::move(p));
        }
        out["payload"] = std::move(payload);
    } else {
        out["type"] = "regular";
        const Dfa& dfa = c.dfa();
        json payload;
        payload["states"] = dfa.state_count();
        payload["start"] = dfa.start();
        json accepting = json::array();
        for (Dfa::State q = 0; q < dfa.state_count(); ++q)
            if (dfa.is_accepting(q)) accepting.push_back(q);
        payload["accepting"] = std::move(accepting);
        json transitions = json::array();
        for (Dfa::State q = 0; q < dfa.state_count(); ++q)
            for (Symbol a = 0; a < dfa.sigma(); ++a)
                if (dfa.step(q, a) != Dfa::kUndefined)
                    transitions.push_back(json::array({q, alphabet.token(a), dfa.step(q, a)}));
        payload["transitions"] = std::move(transitions);
        out["payload"] = std::move(payload);
    }
    return out;
}

} // namespace

namespace {

InstanceFile parse_instance_fields(const json& doc);

} // namespace

InstanceFile parse_instance(const std::string& bytes) {
    json doc;
    try {
        doc = json::parse(bytes);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return parse_instance_fields(doc);
    } catch (const json::exception& e) {
        // wrongly typed field values (e.g. a string where a number belongs)
        throw ParseError(std::string("malformed field: ") + e.what());
    }
}

namespace {

InstanceFile parse_instance_fields(const json& doc) {
    if (!doc.is_object()) throw ParseError("instance file must be a JSON object");
    for (const char* key : {"text", "pattern"})
        if (!doc.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");

    Alphabet alphabet;
    // An explicit alphabet pins the symbol numbering; without one, symbols
    // are numbered in order of first appearance.
    if (doc.contains("alphabet")) {
        if (!doc.at("alphabet").is_array())
            throw ParseError("\"alphabet\" must be an array of tokens");
        for (const auto& tok : doc.at("alphabet")) {
            if (!tok.is_string() || tok.get<std::string>().empty())
                throw ParseError("alphabet tokens must be non-empty strings");
            const std::size_t before = alphabet.size();
            alphabet.intern(tok.get<std::string>());
            if (alphabet.size() == before)
                throw ParseError("duplicate alphabet token \"" + tok.get<std::string>() + "\"");
        }
    }
    Word text = parse_word(doc.at("text"), alphabet, "text");
    Word pattern = parse_word(doc.at("pattern"), alphabet, "pattern");

    std::vector<GapConstraint> constraints;
    if (doc.contains("constraints")) {
        if (!doc.at("constraints").is_array())
            throw ParseError("\"constraints\" must be an array");
        std::size_t index = 0;
        for (const auto& c : doc.at("constraints")) {
            const std::string where = "constraint #" + std::to_string(index++);
            if (!c.is_object() || !c.contains("i") || !c.contains("j") || !c.contains("type"))
                throw ParseError(where + ": needs \"i\", \"j\" and \"type\"");
            const Pos i = c.at("i").get<Pos>();
            const Pos j = c.at("j").get<Pos>();
            if (i < 1 || i >= j)
                throw ParseError(where + ": requires 1 <= i < j, got (" + std::to_string(i) +
                                 ", " + std::to_string(j) + ")");
            if (j > pattern.size())
                throw ParseError(where + ": position " + std::to_string(j) +
                                 " exceeds pattern length " + std::to_string(pattern.size()));
            const std::string type = c.at("type").get<std::string>();
            if (!c.contains("payload")) throw ParseError(where + ": missing \"payload\"");
            if (type == "semilinear") {
                constraints.push_back({i, j, parse_semilinear(c.at("payload"), where)});
            } else if (type == "regular") {
                constraints.push_back({i, j, parse_dfa(c.at("payload"), alphabet, where)});
            } else {
                throw ParseError(where + ": unknown type \"" + type + "\"");
            }
        }
    }

    // DFAs were interned before later tokens may have widened the alphabet;
    // rebuild any that are too narrow so every automaton covers sigma.
    const std::uint32_t sigma = static_cast<std::uint32_t>(alphabet.size());
    for (auto& c : constraints) {
        if (!c.is_regular() || c.dfa().sigma() == sigma) continue;
        const Dfa& old = c.dfa();
        std::vector<Dfa::State> accepting;
        for (Dfa::State q = 0; q < old.state_count(); ++q)
            if (old.is_accepting(q)) accepting.push_back(q);
        Dfa widened(old.state_count(), sigma, old.start(), std::move(accepting));
        for (Dfa::State q = 0; q < old.state_count(); ++q)
            for (Symbol a = 0; a < old.sigma(); ++a)
                if (old.step(q, a) != Dfa::kUndefined) widened.add_transition(q, a, old.step(q, a));
        c.language = std::move(widened);
    }

    std::string metadata = "null";
    if (doc.contains("metadata")) metadata = doc.at("metadata").dump();

    try {
        ConstraintSet set(std::move(constraints));
        return InstanceFile{Instance(std::move(text), std::move(pattern), std::move(set),
                                     std::move(alphabet)),
                            std::move(metadata)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

} // namespace

std::string serialize_instance(const Instance& inst, const std::string& metadata_json) {
    json out;
    json alphabet = json::array();
    for (Symbol s = 0; s < inst.alphabet().size(); ++s)
        alphabet.push_back(inst.alphabet().token(s));
    out["alphabet"] = std::move(alphabet);
    out["text"] = word_to_json(inst.text(), inst.alphabet());
    out["pattern"] = word_to_json(inst.pattern(), inst.alphabet());
    json constraints = json::array();
    for (const auto& c : inst.constraints().constraints())
        constraints.push_back(constraint_to_json(c, inst.alphabet()));
    out["constraints"] = std::move(constraints);
    if (metadata_json != "null") out["metadata"] = json::parse(metadata_json);
    return out.dump(2) + "\n";
}

AnalysisReport analyze(const Instance& inst, int vsn_exact_m_limit) {
    AnalysisReport report;
    report.n = inst.n();
    report.m = inst.m();
    report.constraint_count = inst.constraints().count();
    report.gapsize = inst.constraints().gapsize();
    report.total_size = inst.constraints().total_size();

    const auto& cs = inst.constraints().constraints();
    for (std::size_t a = 0; a < cs.size(); ++a) {
        for (std::size_t b = a + 1; b < cs.size(); ++b) {
            switch (relation(cs[a], cs[b])) {
                case IntervalRelation::Equal:
                case IntervalRelation::Contains:
                case IntervalRelation::ContainedIn: ++report.relation_counts[0]; break;
                case IntervalRelation::Intersects: ++report.relation_counts[1]; break;
                case IntervalRelation::Disjoint: ++report.relation_counts[2]; break;
            }
        }
    }

    std::pair<std::size_t, std::size_t> offending;
    report.non_intersecting = is_non_intersecting(inst.constraints(), &offending);
    if (!report.non_intersecting) report.intersecting_pair = offending;

    if (inst.m() >= 2) {
        const ConstraintGraph graph = build_graph(static_cast<Pos>(inst.m()), inst.constraints());
        try {
            const VsnReport vsn = min_vsn_ordering(graph, vsn_exact_m_limit);
            report.vsn = vsn.vsn;
            report.vsn_optimal = true;
        } catch (const TooLarge&) {
            std::vector<Pos> natural(inst.m());
            for (Pos v = 1; v <= inst.m(); ++v) natural[v - 1] = v;
            report.vsn = vsn_of_ordering(graph, natural);
            report.vsn_optimal = false;
        }
    }

    if (report.non_intersecting && inst.m() >= 2) {
        const ConstraintTree tree =
            build_tree(inst.constraints(), static_cast<Pos>(inst.m()), inst.n());
        report.tree_depth = tree.depth();
        report.tree_nodes = tree.node_count();
        report.synthetic_root = tree.has_synthetic_root();
    }
    return report;
}

std::string to_json(const AnalysisReport& r) {
    json out;
    out["n"] = r.n;
    out["m"] = r.m;
    out["constraints"] = r.constraint_count;
    out["gapsize"] = r.gapsize;
    out["total_size"] = r.total_size;
    out["non_intersecting"] = r.non_intersecting;
    if (r.intersecting_pair)
        out["intersecting_pair"] = json::array({r.intersecting_pair->first,
                                                r.intersecting_pair->second});
    out["relations"] = {{"nested", r.relation_counts[0]},
                        {"intersecting", r.relation_counts[1]},
                        {"disjoint", r.relation_counts[2]}};
    if (r.vsn >= 0) {
        out["vsn"] = r.vsn;
        out["vsn_optimal"] = r.vsn_optimal;
    }
    if (r.tree_depth >= 0) {
        out["tree"] = {{"depth", r.tree_depth},
                       {"nodes", r.tree_nodes},
                       {"synthetic_root", r.synthetic_root}};
    }
    return out.dump(2) + "\n";
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "text length        " << r.n << "\n"
        << "pattern length     " << r.m << "\n"
        << "constraints        " << r.constraint_count << " (gapsize " << r.gapsize
        << ", total size " << r.total_size << ")\n"
        << "pairs              " << r.relation_counts[0] << " nested, " << r.relation_counts[1]
        << " intersecting, " << r.relation_counts[2] << " disjoint\n"
        << "non-intersecting   " << (r.non_intersecting ? "yes" : "no");
    if (r.intersecting_pair)
        out << " (constraints " << r.intersecting_pair->first << " and "
            << r.intersecting_pair->second << " intersect)";
    out << "\n";
    if (r.vsn >= 0)
        out << "vsn                " << r.vsn << (r.vsn_optimal ? " (exact)" : " (natural order)")
            << "\n";
    if (r.tree_depth >= 0)
        out << "containment tree   depth " << r.tree_depth << ", " << r.tree_nodes << " nodes"
            << (r.synthetic_root ? ", synthetic root" : "") << "\n";
    return out.str();
}

namespace {

json result_to_json(const MatchResult& result) {
    json out;
    out["matched"] = result.matched;
    out["algorithm"] = to_string(result.algorithm);
    if (result.witness) out["witness"] = result.witness->targets;
    json stats;
    stats["steps"] = result.stats.steps;
    stats["states"] = result.stats.states;
    stats["multiplications"] = result.stats.multiplications;
    stats["millis"] = result.stats.millis;
    if (!result.stats.note.empty()) stats["note"] = result.stats.note;
    out["stats"] = std::move(stats);
    return out;
}

} // namespace

std::string report_json(const Instance& inst, const MatchResult& result) {
    json out = result_to_json(result);
    AnalysisReport analysis = analyze(inst);
    out["structure"] = json::parse(to_json(analysis));
    return out.dump(2) + "\n";
}

std::string report_text(const Instance& inst, const MatchResult& result) {
    std::ostringstream out;
    out << (result.matched ? "MATCH" : "NO MATCH") << " (" << to_string(result.algorithm) << ")\n";
    if (result.witness) {
        out << "witness           ";
        for (std::size_t t = 0; t < result.witness->targets.size(); ++t)
            out << (t ? " " : "") << result.witness->targets[t];
        out << "\n";
    }
    out << "steps             " << result.stats.steps << "\n"
        << "states            " << result.stats.states << "\n"
        << "multiplications   " << result.stats.multiplications << "\n"
        << "millis            " << result.stats.millis << "\n";
    if (!result.stats.note.empty()) out << "note              " << result.stats.note << "\n";
    out << to_text(analyze(inst));
    return out.str();
}

} // namespace gapmatch
