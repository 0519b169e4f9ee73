#include "pieri/json_io.hpp"

namespace pieri {

using nlohmann::json;

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

json to_json(const SymmetricPolynomial& f) {
    json terms = json::array();
    for (auto& [p, c] : f.terms()) terms.push_back({{"partition", to_json(p)}, {"coefficient", c}});
    return terms;
}

SymmetricPolynomial symmetric_from_json(const json& j, int n) {
    SymmetricPolynomial f(n);
    for (auto& t : j) f.add_term(partition_from_json(t.at("partition")), t.at("coefficient").get<long long>());
    return f;
}

json to_json(const EquivariantComplex& c) {
    json terms = json::array();
    for (auto& [k, m] : c.terms)
        terms.push_back({{"homDegree", k.hom_degree},
                         {"internalDegree", k.internal_degree},
                         {"partition", to_json(k.partition)},
                         {"multiplicity", m}});
    json out{{"n", c.n},
             {"terms", terms},
             {"provenance", c.provenance == Provenance::GuaranteedMinimal ? "minimal" : "mapping-cone"}};
    if (!c.candidates.empty()) {
        json cand = json::array();
        for (auto& x : c.candidates)
            cand.push_back({{"partition", to_json(x.partition)},
                            {"internalDegree", x.internal_degree},
                            {"lowerHomDegree", x.lower_hom_degree}});
        out["cancellationCandidates"] = cand;
    }
    return out;
}

EquivariantComplex complex_from_json(const json& j) {
    EquivariantComplex c;
    c.n = j.at("n").get<int>();
    if (j.value("provenance", "minimal") != std::string("minimal"))
        c.provenance = Provenance::MappingConePossiblyNonminimal;
    for (auto& t : j.at("terms"))
        c.add(t.at("homDegree").get<int>(), t.at("internalDegree").get<int>(),
              partition_from_json(t.at("partition")), t.at("multiplicity").get<long long>());
    return c;
}

json to_json(const BettiTable& t) {
    json entries = json::array();
    int codim = 0;
    for (auto& [k, v] : t.entries) {
        codim = std::max(codim, k.first);
        entries.push_back({{"i", k.first}, {"j", k.second}, {"value", v.str()}});
    }
    return json{{"codim", codim}, {"entries", entries}};
}

BettiTable betti_from_json(const json& j) {
    BettiTable t;
    for (auto& e : j.at("entries")) {
        Rational v = e.at("value").is_string() ? Rational::parse(e.at("value").get<std::string>())
                                               : Rational(e.at("value").get<long long>());
        t.set(e.at("i").get<int>(), e.at("j").get<int>(), v);
    }
    return t;
}

json to_json(const EquivariantBettiTable& t) {
    json entries = json::array();
    int codim = 0;
    for (auto& [k, f] : t.entries) {
        codim = std::max(codim, k.first);
        entries.push_back({{"i", k.first}, {"j", k.second}, {"schur", to_json(f)}});
    }
    return json{{"codim", codim}, {"n", t.n}, {"entries", entries}};
}

EquivariantBettiTable equivariant_table_from_json(const json& j) {
    EquivariantBettiTable t;
    t.n = j.at("n").get<int>();
    for (auto& e : j.at("entries"))
        t.add(e.at("i").get<int>(), e.at("j").get<int>(), symmetric_from_json(e.at("schur"), t.n));
    return t;
}

json to_json(const Decomposition& d) {
    json steps = json::array();
    for (auto& s : d.steps)
        steps.push_back({{"coefficient", s.coefficient.str()},
                         {"degrees", s.degrees},
                         {"diagram", to_json(s.diagram)}});
    return json{{"steps", steps}, {"residual", to_json(d.residual)}, {"success", d.success()}};
}

json to_json(const EquivariantDecomposition& d) {
    json steps = json::array();
    for (auto& s : d.steps)
        steps.push_back({{"coefficientNumerator", to_json(s.coefficient.num())},
                         {"coefficientDenominator", to_json(s.coefficient.den())},
                         {"degrees", s.degrees},
                         {"verdict", verdict_str(s.verdict)}});
    json out{{"steps", steps}, {"success", d.success()}};
    if (d.failure) {
        out["failure"] = {{"i", d.failure->i},
                          {"j", d.failure->j},
                          {"residual", to_json(d.failure->residual_numerator)},
                          {"certificateWeight", d.failure->certificate_weight}};
    }
    return out;
}

json to_json(const BottResult& r) {
    if (r.zero) return json{{"zero", true}};
    return json{{"zero", false}, {"degree", r.degree}, {"weight", r.weight}, {"dual", r.dualized}};
}

json to_json(const SheafPieriTerms& t) {
    json terms = json::array();
    for (auto& x : t.terms)
        terms.push_back({{"homDegree", x.hom_degree},
                         {"internalDegree", x.internal_degree},
                         {"weight", x.weight},
                         {"grade", x.grade}});
    return json{{"terms", terms},
                {"minimal", t.minimal_claim},
                {"linearDifferential", t.linear_differential}};
}

json to_json(const LinearMap& m) {
    json triples = json::array();
    for (auto& [r, c, v] : m.triples()) triples.push_back({{"row", r}, {"col", c}, {"value", v}});
    return json{{"rows", m.row_labels.size()}, {"cols", m.col_labels.size()}, {"entries", triples}};
}

json to_json(const EulerCheck& e) {
    json q = json::array();
    for (auto& f : e.quotient) q.push_back(to_json(f));
    return json{{"divisible", e.divisible},
                {"finiteLength", e.finite_length},
                {"schurPositive", e.schur_positive},
                {"quotient", q}};
}

}  // namespace pieri
