#pragma once

/**
 * @file report.hpp
 * @brief Spec files, analysis reports and the census, with JSON and text output.
 *
 * JSON objects keep their keys sorted, so identical inputs serialize to
 * identical bytes.
 */

#include <bit>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "z4nu/code.hpp"
#include "z4nu/error.hpp"
#include "z4nu/oracle.hpp"
#include "z4nu/parse.hpp"
#include "z4nu/random.hpp"
#include "z4nu/rank.hpp"
#include "z4nu/relations.hpp"

namespace z4nu {

using json = nlohmann::json;

// --- spec files ---------------------------------------------------------------

namespace detail {

inline int json_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ValidationError(what + " must be an integer");
    return j.get<int>();
}

inline RElem json_elem(const json& j, const std::string& what) {
    if (j.is_string()) return parse_ring_element(j.get<std::string>());
    if (j.is_array() && j.size() == 2) return {json_int(j[0], what), json_int(j[1], what)};
    throw ValidationError(what + " must be a pair [a, b] or an expression string");
}

}  // namespace detail

/// {"n": 4, "theta": [0, 2] or "2v", "generators": ["expr", [[a, b], ...], ...]}
inline CodeSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("spec must be an object");
    for (const char* key : {"n", "theta", "generators"})
        if (!j.contains(key)) throw ValidationError(std::string("spec is missing \"") + key + "\"");
    const int n = detail::json_int(j["n"], "n");
    if (n < 1) throw ValidationError("n must be at least 1");
    const Theta theta = Theta::make(detail::json_elem(j["theta"], "theta"));
    const json& gens = j["generators"];
    if (!gens.is_array() || gens.empty()) throw ValidationError("generators must be a nonempty list");
    CodeSpec spec{n, theta, {}};
    for (const auto& g : gens) {
        if (g.is_string()) {
            spec.gens.push_back(parse_poly(g.get<std::string>(), n, theta));
        } else if (g.is_array()) {
            std::vector<RElem> coeffs;
            for (const auto& c : g) coeffs.push_back(detail::json_elem(c, "coefficient"));
            spec.gens.emplace_back(RRing(theta), n, coeffs);
        } else {
            throw ValidationError("a generator must be an expression string or a coefficient list");
        }
    }
    return spec;
}

inline CodeSpec spec_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("spec is not valid JSON: ") + e.what());
    }
    return spec_from_json(j);
}

inline json poly_json(const PolyR& f) {
    json coeffs = json::array();
    for (int i = 0; i < f.n(); ++i) coeffs.push_back({f[i].a.value(), f[i].b.value()});
    return coeffs;
}

inline json spec_to_json(const CodeSpec& spec) {
    json gens = json::array();
    for (const auto& g : spec.gens) gens.push_back(to_string(g));
    return {{"n", spec.n}, {"theta", {spec.theta.value().a.value(), spec.theta.value().b.value()}},
            {"generators", gens}};
}

// --- analysis -------------------------------------------------------------------

struct AnalyzeOptions {
    bool oracle = false;
    std::uint64_t limit = kDefaultOracleLimit;
};

struct OracleSection {
    std::uint64_t size = 0;
    int log2_size = 0;
    bool closure_ok = false;
    bool towers_agree = false;
    bool formula_agrees = false;
    bool structural_agrees = false;
    std::optional<SpanVerdict> spanning;
};

struct AnalysisReport {
    int n = 1;
    Theta theta = Theta::all()[0];
    CanonicalGens canon;
    std::array<PolyR, 4> generators = {PolyR(RRing(theta), 1), PolyR(RRing(theta), 1), PolyR(RRing(theta), 1),
                                       PolyR(RRing(theta), 1)};
    std::array<int, 4> shift_counts{};
    std::optional<int> rank;
    std::string rank_error;
    int log2_cardinality = 0;             ///< closed form, split on g23
    int log2_cardinality_structural = 0;  ///< 4n - (s1 + s2 + s3 + s4)
    int log2_size_echelon = 0;            ///< from the Howell form of the code
    std::vector<SpanElement> spanning_set;
    RelationReport relations;
    std::vector<StagedViolation> staged_conditions;  ///< literal staged conditions failing on the unique form
    std::optional<OracleSection> oracle;
    /// Disagreements between the closed forms and direct computation.
    std::vector<std::string> findings;
    /// Failures of properties the implementation guarantees by construction.
    std::vector<std::string> invariant_violations;
};

inline AnalysisReport analyze(const CodeSpec& spec, const AnalyzeOptions& opt = {}) {
    AnalysisReport r;
    r.n = spec.n;
    r.theta = spec.theta;
    r.canon = canonicalize(spec);
    r.generators = staged_generators(r.canon, spec.theta);
    r.shift_counts = shift_counts(r.canon);
    try {
        r.rank = compute_rank(r.canon);
        r.spanning_set = minimal_spanning_set(r.canon, spec.theta);
    } catch (const ShiftCountError& e) {
        r.rank_error = e.what();
        r.findings.push_back(std::string("rank: ") + e.what());
    }
    r.log2_cardinality = compute_cardinality(r.canon);
    r.log2_cardinality_structural = structural_log2_cardinality(r.canon);
    r.log2_size_echelon = code_module(spec).log2_size();
    r.relations = verify_relations(r.canon, spec.theta);
    r.staged_conditions = staged_violations(r.canon);

    if (r.log2_cardinality != r.log2_size_echelon)
        r.findings.push_back("closed-form cardinality 2^" + std::to_string(r.log2_cardinality) +
                             " differs from the code size 2^" + std::to_string(r.log2_size_echelon));
    for (const auto& rel : r.relations.results)
        if (rel.applicable && !(rel.plain.evaluated && rel.plain.holds))
            r.findings.push_back("relation (" + rel.id + ") " +
                                 (rel.plain.evaluated ? "does not hold" : "not evaluable: " + rel.plain.failed_step));
    for (const auto& v : r.staged_conditions)
        r.findings.push_back("condition (" + v.condition + ") fails on the unique form: " + v.message);

    if (r.log2_cardinality_structural != r.log2_size_echelon)
        r.invariant_violations.push_back("tower sizes disagree with the echelon size");
    for (const auto& name : degree_violations(r.canon))
        r.invariant_violations.push_back("degree constraint fails for " + name);

    if (opt.oracle) {
        const CodewordSet words = enumerate_code(spec, opt.limit);
        OracleSection o;
        o.size = words.size();
        o.log2_size = std::bit_width(o.size) - 1;
        o.closure_ok = closure_invariants(words);
        o.towers_agree = brute_force_towers(words) == r.canon.towers();
        o.formula_agrees = r.log2_cardinality >= 0 && r.log2_cardinality < 63 &&
                           (std::uint64_t{1} << r.log2_cardinality) == o.size;
        o.structural_agrees = (std::uint64_t{1} << r.log2_cardinality_structural) == o.size;
        if (r.rank) {
            std::vector<PolyR> b;
            for (const auto& e : r.spanning_set) b.push_back(e.poly);
            o.spanning = verify_spanning_minimality(b, words);
            if (!o.spanning->spans) r.findings.push_back("oracle: the spanning set does not span the code");
            if (!o.spanning->minimal) r.findings.push_back("oracle: the spanning set is not minimal");
        }
        if (!o.closure_ok) r.invariant_violations.push_back("oracle: enumerated set is not a cyclic code");
        if (!o.towers_agree) r.invariant_violations.push_back("oracle: brute-force towers differ");
        if (!o.structural_agrees || o.size != (std::uint64_t{1} << r.log2_size_echelon))
            r.invariant_violations.push_back("oracle: enumerated size differs from the echelon size");
        r.oracle = o;
    }
    return r;
}

namespace detail {

inline json bits_json(const BinPoly& p) {
    json a = json::array();
    if (!p.is_zero())
        for (int i = 0; i <= p.degree(); ++i) a.push_back(p.coeff(i) ? 1 : 0);
    return a;
}

inline json relation_reading_json(const RelationReading& r) {
    json j = {{"evaluated", r.evaluated}, {"holds", r.holds}};
    if (r.evaluated) j["dividend"] = to_string(r.dividend);
    else j["failed_step"] = r.failed_step;
    return j;
}

}  // namespace detail

inline json report_to_json(const AnalysisReport& r) {
    json canon = json::object();
    const auto ptrs = entries(r.canon);
    for (std::size_t i = 0; i < ptrs.size(); ++i)
        canon[kGenNames[i]] = {{"coeffs", detail::bits_json(*ptrs[i])}, {"text", to_string(*ptrs[i])}};

    json gens = json::array();
    for (const auto& g : r.generators) gens.push_back({{"coeffs", poly_json(g)}, {"text", to_string(g)}});

    json span = json::array();
    for (const auto& e : r.spanning_set)
        span.push_back({{"generator", e.generator}, {"shift", e.shift}, {"text", to_string(e.poly)}});

    json rels = json::array();
    for (const auto& rel : r.relations.results)
        rels.push_back({{"id", rel.id},
                        {"statement", rel.statement},
                        {"applicable", rel.applicable},
                        {"divisor", to_string(rel.divisor)},
                        {"evaluable", rel.evaluable()},
                        {"holds", rel.plain.evaluated && rel.plain.holds},
                        {"plain", detail::relation_reading_json(rel.plain)},
                        {"quotient", detail::relation_reading_json(rel.quotient)}});

    json staged = json::array();
    for (const auto& v : r.staged_conditions) staged.push_back({{"condition", v.condition}, {"message", v.message}});

    json j = {{"n", r.n},
              {"theta", r.theta.name()},
              {"canonical", canon},
              {"generators", gens},
              {"degrees", {{"s1", r.canon.s1()}, {"s2", r.canon.s2()}, {"s3", r.canon.s3()}, {"s4", r.canon.s4()}}},
              {"shift_counts", r.shift_counts},
              {"rank", r.rank ? json(*r.rank) : json(nullptr)},
              {"log2_cardinality", r.log2_cardinality},
              {"log2_cardinality_structural", r.log2_cardinality_structural},
              {"log2_size_echelon", r.log2_size_echelon},
              {"spanning_set", span},
              {"relations", rels},
              {"staged_condition_failures", staged},
              {"findings", r.findings},
              {"invariant_violations", r.invariant_violations}};
    if (!r.rank_error.empty()) j["rank_error"] = r.rank_error;
    if (r.oracle) {
        const auto& o = *r.oracle;
        json oj = {{"size", o.size},
                   {"log2_size", o.log2_size},
                   {"closure_ok", o.closure_ok},
                   {"towers_agree", o.towers_agree},
                   {"formula_agrees", o.formula_agrees},
                   {"structural_agrees", o.structural_agrees}};
        if (o.spanning) {
            oj["spans"] = o.spanning->spans;
            oj["minimal"] = o.spanning->minimal;
            oj["redundant_index"] = o.spanning->redundant_index ? json(*o.spanning->redundant_index) : json(nullptr);
        }
        j["oracle"] = oj;
    }
    return j;
}

inline std::string report_to_machine(const AnalysisReport& r) { return report_to_json(r).dump(2) + "\n"; }

inline std::string report_to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "n = " << r.n << ", theta = " << r.theta.name() << ", k = " << to_string(r.theta.k()) << "\n\n";
    os << "unique generators\n";
    const auto ptrs = entries(r.canon);
    for (std::size_t i = 0; i < ptrs.size(); ++i) os << "  " << kGenNames[i] << " = " << to_string(*ptrs[i]) << "\n";
    for (std::size_t i = 0; i < 4; ++i) os << "  g_" << i + 1 << " = " << to_string(r.generators[i]) << "\n";
    os << "\ns1..s4 = " << r.canon.s1() << ", " << r.canon.s2() << ", " << r.canon.s3() << ", " << r.canon.s4()
       << "\n";
    if (r.rank) os << "rank = " << *r.rank << "\n";
    else os << "rank undefined: " << r.rank_error << "\n";
    os << "log2 |C|: closed form " << r.log2_cardinality << ", towers " << r.log2_cardinality_structural
       << ", echelon " << r.log2_size_echelon << "\n";
    if (!r.spanning_set.empty()) {
        os << "\nspanning set\n";
        for (const auto& e : r.spanning_set)
            os << "  z^" << e.shift << " g_" << e.generator << " = " << to_string(e.poly) << "\n";
    }
    os << "\nrelations\n";
    for (const auto& rel : r.relations.results) {
        os << "  (" << rel.id << ") " << rel.statement << ": ";
        if (!rel.applicable) os << "n/a\n";
        else if (!rel.plain.evaluated) os << "not evaluable (" << rel.plain.failed_step << ")\n";
        else
            os << (rel.plain.holds ? "holds" : "FAILS") << " [quotient reading: "
               << (rel.quotient.evaluated ? (rel.quotient.holds ? "holds" : "fails") : "not evaluable") << "]\n";
    }
    if (r.oracle) {
        const auto& o = *r.oracle;
        os << "\noracle\n  words = " << o.size << " (2^" << o.log2_size << ")\n"
           << "  closed under +, scalars, shift: " << (o.closure_ok ? "yes" : "no") << "\n"
           << "  towers agree: " << (o.towers_agree ? "yes" : "no") << "\n"
           << "  closed-form cardinality agrees: " << (o.formula_agrees ? "yes" : "no") << "\n";
        if (o.spanning)
            os << "  spanning set spans: " << (o.spanning->spans ? "yes" : "no")
               << ", minimal: " << (o.spanning->minimal ? "yes" : "no") << "\n";
    }
    if (!r.findings.empty()) {
        os << "\nfindings\n";
        for (const auto& f : r.findings) os << "  " << f << "\n";
    }
    if (!r.invariant_violations.empty()) {
        os << "\ninvariant violations\n";
        for (const auto& f : r.invariant_violations) os << "  " << f << "\n";
    }
    return os.str();
}

// --- census -----------------------------------------------------------------------

struct CensusViolation {
    std::string kind;
    std::uint64_t seed;
    int n;
    std::string theta;
    int sample;
    std::string detail;
};

struct CensusRow {
    int n = 0;
    std::string theta;
    int samples = 0;
    int skipped = 0;             ///< refused by the oracle limit
    int formula_agree = 0;       ///< closed-form cardinality equals the enumerated size
    int formula_g23_zero = 0;    ///< samples on the g23 = 0 branch
    int structural_agree = 0;
    int rank_ok = 0;             ///< B spans, is minimal, and |B| = rank
    int relations_ok = 0;
    int uniqueness_ok = 0;       ///< same unique form after permuting, padding, mixing
    int shift_count_errors = 0;  ///< s1 < s3 or min(s2, s3) < s4
    std::vector<CensusViolation> violations;
};

struct CensusOptions {
    int n_min = 1, n_max = 4;
    std::vector<Theta> thetas;
    int samples = 50;
    std::uint64_t seed = 1;
    std::uint64_t limit = kDefaultOracleLimit;
};

inline CensusRow census_cell(int n, const Theta& theta, const CensusOptions& opt) {
    CensusRow row;
    row.n = n;
    row.theta = theta.name();
    const int ti = theta_index(theta);
    auto violation = [&](const std::string& kind, int i, const std::string& detail) {
        row.violations.push_back({kind, opt.seed, n, theta.name(), i, detail});
    };
    for (int i = 0; i < opt.samples; ++i) {
        auto rng = sample_rng(opt.seed, n, ti, i);
        const CodeSpec spec = random_code(rng, n, theta);
        ++row.samples;
        const CanonicalGens canon = canonicalize(spec);
        if (canonicalize(permuted(spec, rng)) == canon && canonicalize(with_redundant(spec, rng)) == canon &&
            canonicalize(mixed(spec, rng)) == canon)
            ++row.uniqueness_ok;
        else
            violation("uniqueness", i, "unique form changed under a generator rewrite");
        if (verify_relations(canon, theta).all_hold()) ++row.relations_ok;
        else violation("relations", i, "an applicable relation fails");

        CodewordSet words{n, theta, {}};
        try {
            words = enumerate_code(spec, opt.limit);
        } catch (const LimitExceeded&) {
            ++row.skipped;
            continue;
        }
        const int cor = compute_cardinality(canon);
        if (canon.g23.is_zero()) ++row.formula_g23_zero;
        if (cor >= 0 && cor < 63 && (std::uint64_t{1} << cor) == words.size()) ++row.formula_agree;
        else violation("cardinality", i, "closed form 2^" + std::to_string(cor) + ", enumerated " +
                                             std::to_string(words.size()));
        if ((std::uint64_t{1} << structural_log2_cardinality(canon)) == words.size()) ++row.structural_agree;
        else violation("invariant", i, "tower sizes disagree with enumeration");
        if (!(brute_force_towers(words) == canon.towers())) violation("invariant", i, "towers disagree");
        try {
            const int rank = compute_rank(canon);
            std::vector<PolyR> b;
            for (const auto& e : minimal_spanning_set(canon, theta)) b.push_back(e.poly);
            const SpanVerdict v = verify_spanning_minimality(b, words);
            if (v.spans && v.minimal && static_cast<int>(b.size()) == rank) ++row.rank_ok;
            else violation("rank", i, std::string("spans=") + (v.spans ? "yes" : "no") +
                                          " minimal=" + (v.minimal ? "yes" : "no"));
        } catch (const ShiftCountError& e) {
            ++row.shift_count_errors;
            violation("shift_count", i, e.what());
        }
    }
    return row;
}

inline std::vector<CensusRow> run_census(const CensusOptions& opt) {
    std::vector<CensusRow> rows;
    for (int n = opt.n_min; n <= opt.n_max; ++n)
        for (const auto& theta : opt.thetas) rows.push_back(census_cell(n, theta, opt));
    return rows;
}

inline json census_to_json(const std::vector<CensusRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json v = json::array();
        for (const auto& x : r.violations)
            v.push_back({{"kind", x.kind},
                         {"seed", x.seed},
                         {"n", x.n},
                         {"theta", x.theta},
                         {"sample", x.sample},
                         {"detail", x.detail}});
        out.push_back({{"n", r.n},
                       {"theta", r.theta},
                       {"samples", r.samples},
                       {"skipped", r.skipped},
                       {"formula_agree", r.formula_agree},
                       {"formula_g23_zero", r.formula_g23_zero},
                       {"structural_agree", r.structural_agree},
                       {"rank_ok", r.rank_ok},
                       {"relations_ok", r.relations_ok},
                       {"uniqueness_ok", r.uniqueness_ok},
                       {"shift_count_errors", r.shift_count_errors},
                       {"violations", v}});
    }
    return out;
}

inline std::string census_to_text(const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    os << "  n  theta   samples  skipped  card_ok  g23=0  towers_ok  rank_ok  rel_ok  unique_ok  shift_err\n";
    for (const auto& r : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%3d  %-6s  %7d  %7d  %7d  %5d  %9d  %7d  %6d  %9d  %9d\n", r.n,
                      r.theta.c_str(), r.samples, r.skipped, r.formula_agree, r.formula_g23_zero, r.structural_agree,
                      r.rank_ok, r.relations_ok, r.uniqueness_ok, r.shift_count_errors);
        os << line;
    }
    return os.str();
}

}  // namespace z4nu
