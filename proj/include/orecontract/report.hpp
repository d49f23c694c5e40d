#pragma once

// JSON and plain-text rendering of results.

#include <string>
#include <vector>

#include <json.hpp>

#include "closure.hpp"

namespace oc {

using Json = nlohmann::ordered_json;

template <class R> std::string elem_str(const R &a) { return ring_traits<R>::str(a); }

template <class R> Json ops_json(const std::vector<OreOperator<R>> &v) {
    Json a = Json::array();
    for (const auto &P : v)
        a.push_back(P.str());
    return a;
}

/// Document skeleton shared by every subcommand.
inline Json report_skeleton(const std::string &command, const OreAlgebra &alg, RingKind ring,
                            const std::vector<std::string> &input) {
    Json j;
    j["command"] = command;
    j["algebra"] = alg.descriptor();
    j["ring"] = ring_name(ring);
    j["input"] = input;
    j["generators"] = Json::array();
    j["certificate"] = nullptr;
    j["timings"] = Json::object();
    j["step_counts"] = Json::object();
    return j;
}

template <class R> Json desing_certificate_json(const DesingCertificate<R> &C, const OreAlgebra &alg) {
    const auto &v = alg.var;
    Json c;
    c["order"] = C.k;
    c["lc"] = C.s.str(v);
    c["content"] = elem_str(C.a);
    c["primitive_part"] = C.g.str(v);
    Json w;
    w["operator"] = C.T.str();
    w["removed_factor"] = C.removed_factor.str(v);
    w["a1"] = elem_str(C.a1);
    w["b1"] = elem_str(C.b1);
    w["extension_generator"] = C.extension_generator.str(v);
    c["witnesses"] = w;
    return c;
}

template <class R> void contract_json(Json &j, const ContractionBasis<R> &B, const OreAlgebra &alg) {
    j["generators"] = ops_json(B.generators);
    j["certificate"] = desing_certificate_json(B.certificate, alg);
    Json sat = Json::array();
    for (const auto &s : B.saturation) {
        Json e;
        e["generator"] = s.F.str();
        e["exponent"] = s.exponent;
        sat.push_back(e);
    }
    j["certificate"]["witnesses"]["saturation_constant"] = elem_str(B.a);
    j["certificate"]["witnesses"]["saturation"] = sat;
    j["certificate"]["witnesses"]["order_bound"] = B.k;
}

template <class R> void complete_json(Json &j, const CompleteDesingResult<R> &C, const OreAlgebra &alg) {
    const auto &v = alg.var;
    j["generators"] = ops_json(std::vector<OreOperator<R>>{C.F});
    Json c;
    c["order"] = C.ell;
    c["lc"] = C.f.str(v);
    c["content"] = elem_str(C.content);
    c["primitive_part"] = C.g.str(v);
    Json w;
    w["operator"] = C.F.str();
    w["cofactors"] = Json::array();
    for (std::size_t i = 0; i < C.sources.size(); ++i)
        if (!C.cofactors[i].is_zero()) {
            Json e;
            e["cofactor"] = C.cofactors[i].str(v);
            e["source"] = C.sources[i].str();
            w["cofactors"].push_back(e);
        }
    w["contraction_basis"] = ops_json(C.contraction.generators);
    w["plain_certificate_content"] = elem_str(C.contraction.certificate.a);
    c["witnesses"] = w;
    j["certificate"] = c;
}

template <class R> std::string primitivity_name() {
    return std::is_same_v<R, ZZ> ? "Z-primitivity" : "Q[t]-primitivity";
}

template <class R> void removable_json(Json &j, const RemovabilityReport<R> &rep, const OreAlgebra &alg) {
    const auto &v = alg.var;
    j["factor"] = rep.p.str(v);
    j["verdict"] = removability_str(rep.verdict);
    if (rep.witness) {
        const auto &W = *rep.witness;
        j["generators"] = ops_json(std::vector<OreOperator<R>>{W.PL});
        Json c;
        c["order"] = W.k;
        c["lc"] = W.PL.lc().str(v);
        c["content"] = elem_str(content(W.PL.lc()));
        c["primitive_part"] = content_primitive(W.PL.lc()).second.str(v);
        Json w;
        w["removing_operator"] = W.P.str();
        w["removed_operator"] = W.PL.str();
        w["w"] = W.w.str(v);
        w["v"] = W.v.str(v);
        c["witnesses"] = w;
        j["certificate"] = c;
    } else if (rep.content_gcd) {
        Json c;
        c["kind"] = primitivity_name<R>();
        c["content_gcd"] = elem_str(*rep.content_gcd);
        j["certificate"] = c;
    } else {
        j["searched_up_to_order"] = rep.searched;
    }
}

template <class R> void primitive_json(Json &j, const RPrimitivity<R> &p) {
    j["primitive"] = p.primitive;
    j["content_gcd"] = elem_str(p.gcd);
}

inline void kratt_json(Json &j, const KrattenthalerReport &K, const OreAlgebra &alg) {
    complete_json(j, K.complete, alg);
    j["annihilator"] = K.annihilator.str();
    j["verdict"] = K.verdict;
    j["recurrence"] = backward_str(K.recurrence, alg.var);
}

/// Plain text rendering of a report document.
inline std::string report_text(const Json &j) {
    std::string out;
    auto line = [&](const std::string &k, const std::string &v) { out += k + ": " + v + "\n"; };
    auto s = [](const Json &x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    const std::string cmd = j["command"];
    line("algebra", j["algebra"]);
    line("ring", j["ring"]);
    if (cmd == "primitive") {
        line("primitive", j["primitive"].get<bool>() ? "yes" : "no");
        line("content gcd", j["content_gcd"]);
        return out;
    }
    if (cmd == "removable") {
        line("factor", j["factor"]);
        std::string verdict = j["verdict"];
        if (verdict == "non-removable" && j["certificate"].is_object())
            verdict += " (" + s(j["certificate"]["kind"]) + " certificate)";
        else if (verdict == "removable")
            verdict += " at order " + s(j["certificate"]["order"]);
        else if (verdict == "unknown")
            verdict += " (no removing operator up to order " + s(j["searched_up_to_order"]) + ")";
        line("verdict", verdict);
        if (verdict.rfind("removable", 0) == 0) {
            line("removing operator", j["certificate"]["witnesses"]["removing_operator"]);
            line("removed operator", j["certificate"]["witnesses"]["removed_operator"]);
        }
        return out;
    }
    if (cmd == "kratt") {
        line("annihilator", j["annihilator"]);
        line("verdict", j["verdict"].get<bool>() ? "true" : "false");
        line("recurrence", j["recurrence"]);
    }
    if (!j["generators"].empty()) {
        out += "generators:\n";
        for (const auto &g : j["generators"])
            out += "  " + g.get<std::string>() + "\n";
    }
    if (j["certificate"].is_object()) {
        const auto &c = j["certificate"];
        line("order", s(c["order"]));
        line("leading coefficient", c["lc"]);
        line("content", c["content"]);
        line("primitive part (at input order)", c["primitive_part"]);
        const auto &w = c["witnesses"];
        if (w.contains("removed_factor"))
            line("removed factor", w["removed_factor"]);
        if (w.contains("saturation_constant"))
            line("saturation constant", w["saturation_constant"]);
        if (cmd == "desingularize" || cmd == "complete")
            line("operator", w["operator"]);
    }
    for (const auto &[k, v] : j["timings"].items())
        line("time " + k, s(v));
    return out;
}

} // namespace oc
