#include "blockforge/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace blockforge {

using nlohmann::json;

Format parse_format(const std::string& name)
{
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    if (name == "text")
        return Format::text;
    throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or text)");
}

namespace {

const char* kFormula = "formula";
const char* kBrute = "brute_force";
const char* kPaperExact = "paper_exact";

SourcedInterval merge_interval(const IntInterval& bound, const std::optional<IntInterval>& exact)
{
    if (exact) {
        IntInterval iv{std::max(bound.lo, exact->lo), std::min(bound.hi, exact->hi),
                       bound.excluded};
        std::erase_if(iv.excluded, [&](long long v) { return v < iv.lo || v > iv.hi; });
        return {iv, kPaperExact};
    }
    return {bound, kFormula};
}

void check_inside(const IntInterval& outer, const std::optional<IntInterval>& inner,
                  const char* name, std::vector<std::string>& violations)
{
    if (!inner)
        return;
    if (inner->lo < outer.lo || inner->hi > outer.hi)
        violations.push_back(std::string("exact ") + name + " [" + std::to_string(inner->lo) +
                             "," + std::to_string(inner->hi) + "] leaves bound interval [" +
                             std::to_string(outer.lo) + "," + std::to_string(outer.hi) + "]");
}

} // namespace

ReportDocument build_report(const BlockParams& B, long long budget)
{
    const GroupParams& G = B.group();
    ReportDocument doc;
    doc.p = G.p();
    doc.m = G.m();
    doc.n = G.n();
    doc.l = G.l();
    doc.e = B.e();
    doc.group_order = G.order();
    doc.class_count_formula_value = checked_cast_ll(class_count_formula(G));

    doc.bounds = best_bounds(B);
    doc.exact = exact_invariants(B);

    auto exact_field = [&](std::optional<IntInterval> ExactInvariants::*f)
        -> std::optional<IntInterval> {
        return doc.exact ? (*doc.exact).*f : std::nullopt;
    };
    doc.k = merge_interval(doc.bounds.k, exact_field(&ExactInvariants::k));
    doc.k0 = merge_interval(doc.bounds.k0, exact_field(&ExactInvariants::k0));
    doc.k1 = merge_interval(doc.bounds.k1, exact_field(&ExactInvariants::k1));
    doc.l_B = merge_interval(doc.bounds.l, exact_field(&ExactInvariants::l));
    doc.k_minus_l = doc.bounds.k_minus_l;

    bool enumerable = checked_mul(G.order(), B.e()) <= budget;
    std::vector<FusionClass> classes;
    if (enumerable) {
        FusionSummary fs;
        fs.conjugacy_class_count =
            static_cast<long long>(conjugacy_classes(G, budget).size());
        if (fs.conjugacy_class_count != doc.class_count_formula_value)
            doc.consistency_violations.push_back(
                "brute-force class count " + std::to_string(fs.conjugacy_class_count) +
                " != formula " + std::to_string(doc.class_count_formula_value));
        classes = fusion_classes(B, budget);
        fs.fusion_class_count = static_cast<long long>(classes.size());
        for (const auto& c : classes)
            if (c.meets_y)
                ++fs.classes_meeting_y;
        if (fs.classes_meeting_y != G.y_order())
            doc.consistency_violations.push_back(
                "fusion classes meeting <y>: " + std::to_string(fs.classes_meeting_y) +
                " != p^n = " + std::to_string(G.y_order()));
        fs.k_lower_value = k_lower(B, classes);
        if (G.n() == 1)
            fs.k_minus_l = k_minus_l(B, classes);
        fs.semidirect_class_count = semidirect_class_count(B, budget);
        if (fs.semidirect_class_count != fs.k_lower_value)
            doc.consistency_violations.push_back(
                "k(D x| I(B)) = " + std::to_string(fs.semidirect_class_count) +
                " != sum of l(b_u) = " + std::to_string(fs.k_lower_value));
        doc.fusion = fs;
    }

    if (G.n() == 1) {
        CharacterSummary cs;
        cs.k_D = doc.class_count_formula_value;
        cs.linear_count = checked_cast_ll(ipow(G.p(), G.m()));
        cs.degree_p_count = cs.k_D - cs.linear_count;
        cs.owc_weight_full = owc_weights(B, G.m() + 1);
        cs.owc_weight_sub = owc_weights(B, G.m());
        if (cs.owc_weight_full != checked_cast_ll(owc_weight_formula(B, G.m() + 1)) ||
            cs.owc_weight_sub != checked_cast_ll(owc_weight_formula(B, G.m())))
            doc.consistency_violations.push_back("OWC weights disagree with the closed forms");
        auto orbits = inertial_char_orbits(B);
        cs.inertial_linear_orbits = orbits.linear;
        cs.inertial_degree_p_orbits = orbits.degree_p;
        if (B.e() >= 2 && enumerable) {
            cs.galois = galois_orbit_multiset(B, classes);
            if (cs.galois->orbit_sum() + B.e() != doc.bounds.k.lo)
                doc.consistency_violations.push_back(
                    "Galois orbit sum " + std::to_string(cs.galois->orbit_sum()) + " + e != " +
                    std::to_string(doc.bounds.k.lo));
        }
        doc.characters = cs;
    }

    doc.conjectures = conjecture_checks(B);

    check_inside(doc.bounds.k, exact_field(&ExactInvariants::k), "k", doc.consistency_violations);
    check_inside(doc.bounds.k0, exact_field(&ExactInvariants::k0), "k0",
                 doc.consistency_violations);
    check_inside(doc.bounds.k1, exact_field(&ExactInvariants::k1), "k1",
                 doc.consistency_violations);
    check_inside(doc.bounds.l, exact_field(&ExactInvariants::l), "l", doc.consistency_violations);
    InvariantBounds general = bounds_general(B);
    check_inside(general.k, exact_field(&ExactInvariants::k), "k (general bounds)",
                 doc.consistency_violations);
    check_inside(general.k0, exact_field(&ExactInvariants::k0), "k0 (general bounds)",
                 doc.consistency_violations);
    if (doc.exact && doc.exact->k && doc.exact->k->is_point() && doc.exact->k0 &&
        doc.exact->k0->is_point() && doc.exact->k0->lo >= doc.exact->k->lo)
        doc.consistency_violations.push_back("k0 < k fails on exact values");
    if (doc.exact && doc.exact->k && doc.exact->k0 && doc.exact->k1 &&
        doc.exact->k->is_point() && doc.exact->k0->is_point() && doc.exact->k1->is_point() &&
        doc.exact->k->lo != doc.exact->k0->lo + doc.exact->k1->lo)
        doc.consistency_violations.push_back("exact k != k0 + k1");
    if (doc.fusion && doc.k_minus_l && doc.fusion->k_minus_l &&
        *doc.fusion->k_minus_l != *doc.k_minus_l)
        doc.consistency_violations.push_back("enumerated k - l != formula");

    return doc;
}

namespace {

json interval_json(const IntInterval& iv, const char* source)
{
    json j{{"lo", iv.lo}, {"hi", iv.hi}, {"source", source}};
    if (!iv.excluded.empty())
        j["excluded"] = iv.excluded;
    return j;
}

json sourced_json(const SourcedInterval& s)
{
    return interval_json(s.iv, s.source.c_str());
}

json value_json(long long v, const char* source)
{
    return json{{"value", v}, {"source", source}};
}

IntInterval interval_from_json(const json& j)
{
    IntInterval iv;
    iv.lo = j.at("lo").get<long long>();
    iv.hi = j.at("hi").get<long long>();
    if (j.contains("excluded"))
        iv.excluded = j.at("excluded").get<std::vector<long long>>();
    return iv;
}

SourcedInterval sourced_from_json(const json& j)
{
    return {interval_from_json(j), j.at("source").get<std::string>()};
}

} // namespace

json report_to_json(const ReportDocument& doc)
{
    json j;
    j["parameters"] = {{"p", doc.p},
                       {"m", doc.m},
                       {"n", doc.n},
                       {"l", doc.l},
                       {"e", doc.e},
                       {"group_order", doc.group_order},
                       {"class_count_formula", value_json(doc.class_count_formula_value, kFormula)}};

    json bounds;
    bounds["k"] = interval_json(doc.bounds.k, kFormula);
    bounds["k0"] = interval_json(doc.bounds.k0, kFormula);
    bounds["k1"] = interval_json(doc.bounds.k1, kFormula);
    bounds["l"] = interval_json(doc.bounds.l, kFormula);
    if (doc.bounds.k_minus_l)
        bounds["k_minus_l"] = value_json(*doc.bounds.k_minus_l, kFormula);
    bounds["height_vanishing_above"] = value_json(doc.bounds.height_vanishing_above, kFormula);
    bounds["weighted_sum_bound"] = value_json(doc.bounds.weighted_sum_bound, kFormula);
    j["bounds"] = bounds;

    if (doc.exact) {
        json x;
        x["basis"] = doc.exact->basis;
        if (doc.exact->k)
            x["k"] = interval_json(*doc.exact->k, kPaperExact);
        if (doc.exact->k0)
            x["k0"] = interval_json(*doc.exact->k0, kPaperExact);
        if (doc.exact->k1)
            x["k1"] = interval_json(*doc.exact->k1, kPaperExact);
        if (doc.exact->l)
            x["l"] = interval_json(*doc.exact->l, kPaperExact);
        j["exact"] = x;
    }

    json inv;
    inv["k"] = sourced_json(doc.k);
    inv["k0"] = sourced_json(doc.k0);
    inv["k1"] = sourced_json(doc.k1);
    inv["l"] = sourced_json(doc.l_B);
    if (doc.k_minus_l)
        inv["k_minus_l"] = value_json(*doc.k_minus_l, kFormula);
    j["invariants"] = inv;

    if (doc.fusion) {
        const FusionSummary& fs = *doc.fusion;
        json f;
        f["conjugacy_classes"] = value_json(fs.conjugacy_class_count, kBrute);
        f["fusion_classes"] = value_json(fs.fusion_class_count, kBrute);
        f["classes_meeting_y"] = value_json(fs.classes_meeting_y, kBrute);
        f["k_lower"] = value_json(fs.k_lower_value, kFormula);
        if (fs.k_minus_l)
            f["k_minus_l"] = value_json(*fs.k_minus_l, kFormula);
        f["semidirect_class_count"] = value_json(fs.semidirect_class_count, kBrute);
        j["fusion"] = f;
    }

    if (doc.characters) {
        const CharacterSummary& cs = *doc.characters;
        json c;
        c["k_D"] = value_json(cs.k_D, kFormula);
        c["linear"] = value_json(cs.linear_count, kFormula);
        c["degree_p"] = value_json(cs.degree_p_count, kFormula);
        c["owc_weight_full_defect"] = value_json(cs.owc_weight_full, kBrute);
        c["owc_weight_subdefect"] = value_json(cs.owc_weight_sub, kBrute);
        c["inertial_linear_orbits"] = cs.inertial_linear_orbits;
        c["inertial_degree_p_orbits"] = cs.inertial_degree_p_orbits;
        if (cs.galois) {
            c["galois"] = {{"orbit_lengths", cs.galois->orbit_lengths},
                           {"rational_lo", cs.galois->rational_lo},
                           {"rational_hi", cs.galois->rational_hi},
                           {"source", kBrute}};
        }
        j["characters"] = c;
    }

    json checks = json::array();
    for (const auto& c : doc.conjectures)
        checks.push_back({{"name", c.name}, {"verified", c.verified}, {"witness", c.witness}});
    j["conjectures"] = checks;
    j["consistency_violations"] = doc.consistency_violations;
    return j;
}

ReportDocument report_from_json(const json& j)
{
    ReportDocument doc;
    const json& par = j.at("parameters");
    doc.p = par.at("p").get<long long>();
    doc.m = par.at("m").get<int>();
    doc.n = par.at("n").get<int>();
    doc.l = par.at("l").get<int>();
    doc.e = par.at("e").get<long long>();
    doc.group_order = par.at("group_order").get<long long>();
    doc.class_count_formula_value = par.at("class_count_formula").at("value").get<long long>();

    const json& bounds = j.at("bounds");
    doc.bounds.k = interval_from_json(bounds.at("k"));
    doc.bounds.k0 = interval_from_json(bounds.at("k0"));
    doc.bounds.k1 = interval_from_json(bounds.at("k1"));
    doc.bounds.l = interval_from_json(bounds.at("l"));
    if (bounds.contains("k_minus_l"))
        doc.bounds.k_minus_l = bounds.at("k_minus_l").at("value").get<long long>();
    doc.bounds.height_vanishing_above =
        bounds.at("height_vanishing_above").at("value").get<int>();
    doc.bounds.weighted_sum_bound = bounds.at("weighted_sum_bound").at("value").get<long long>();

    if (j.contains("exact")) {
        ExactInvariants x;
        const json& xj = j.at("exact");
        x.basis = xj.at("basis").get<std::string>();
        if (xj.contains("k"))
            x.k = interval_from_json(xj.at("k"));
        if (xj.contains("k0"))
            x.k0 = interval_from_json(xj.at("k0"));
        if (xj.contains("k1"))
            x.k1 = interval_from_json(xj.at("k1"));
        if (xj.contains("l"))
            x.l = interval_from_json(xj.at("l"));
        doc.exact = x;
    }

    const json& inv = j.at("invariants");
    doc.k = sourced_from_json(inv.at("k"));
    doc.k0 = sourced_from_json(inv.at("k0"));
    doc.k1 = sourced_from_json(inv.at("k1"));
    doc.l_B = sourced_from_json(inv.at("l"));
    if (inv.contains("k_minus_l"))
        doc.k_minus_l = inv.at("k_minus_l").at("value").get<long long>();

    if (j.contains("fusion")) {
        FusionSummary fs;
        const json& f = j.at("fusion");
        fs.conjugacy_class_count = f.at("conjugacy_classes").at("value").get<long long>();
        fs.fusion_class_count = f.at("fusion_classes").at("value").get<long long>();
        fs.classes_meeting_y = f.at("classes_meeting_y").at("value").get<long long>();
        fs.k_lower_value = f.at("k_lower").at("value").get<long long>();
        if (f.contains("k_minus_l"))
            fs.k_minus_l = f.at("k_minus_l").at("value").get<long long>();
        fs.semidirect_class_count = f.at("semidirect_class_count").at("value").get<long long>();
        doc.fusion = fs;
    }

    if (j.contains("characters")) {
        CharacterSummary cs;
        const json& c = j.at("characters");
        cs.k_D = c.at("k_D").at("value").get<long long>();
        cs.linear_count = c.at("linear").at("value").get<long long>();
        cs.degree_p_count = c.at("degree_p").at("value").get<long long>();
        cs.owc_weight_full = c.at("owc_weight_full_defect").at("value").get<long long>();
        cs.owc_weight_sub = c.at("owc_weight_subdefect").at("value").get<long long>();
        cs.inertial_linear_orbits =
            c.at("inertial_linear_orbits").get<std::vector<long long>>();
        cs.inertial_degree_p_orbits =
            c.at("inertial_degree_p_orbits").get<std::vector<long long>>();
        if (c.contains("galois")) {
            GaloisOrbitData g;
            g.orbit_lengths = c.at("galois").at("orbit_lengths").get<std::vector<long long>>();
            g.rational_lo = c.at("galois").at("rational_lo").get<long long>();
            g.rational_hi = c.at("galois").at("rational_hi").get<long long>();
            cs.galois = g;
        }
        doc.characters = cs;
    }

    for (const auto& c : j.at("conjectures"))
        doc.conjectures.push_back({c.at("name").get<std::string>(),
                                   c.at("verified").get<bool>(),
                                   c.at("witness").get<std::string>()});
    doc.consistency_violations =
        j.at("consistency_violations").get<std::vector<std::string>>();
    return doc;
}

namespace {

std::string csv_quote(const std::string& field)
{
    if (field.find_first_of(",\"\r\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string interval_text(const IntInterval& iv)
{
    std::string s = iv.is_point() ? std::to_string(iv.lo)
                                  : "[" + std::to_string(iv.lo) + ".." + std::to_string(iv.hi) + "]";
    if (!iv.excluded.empty()) {
        s += " excluding {";
        for (size_t i = 0; i < iv.excluded.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(iv.excluded[i]);
        }
        s += "}";
    }
    return s;
}

std::string join(const std::vector<long long>& v)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

void write_csv_row(std::ostream& os, const std::string& section, const std::string& field,
                   long long lo, long long hi, const std::string& source,
                   const std::string& note = "")
{
    os << csv_quote(section) << ',' << csv_quote(field) << ',' << lo << ',' << hi << ','
       << csv_quote(source) << ',' << csv_quote(note) << "\r\n";
}

void write_report_csv(const ReportDocument& doc, std::ostream& os)
{
    os << "section,field,lo,hi,source,note\r\n";
    write_csv_row(os, "parameters", "p", doc.p, doc.p, kFormula);
    write_csv_row(os, "parameters", "m", doc.m, doc.m, kFormula);
    write_csv_row(os, "parameters", "n", doc.n, doc.n, kFormula);
    write_csv_row(os, "parameters", "l", doc.l, doc.l, kFormula);
    write_csv_row(os, "parameters", "e", doc.e, doc.e, kFormula);
    write_csv_row(os, "parameters", "group_order", doc.group_order, doc.group_order, kFormula);
    auto interval_row = [&](const std::string& section, const std::string& field,
                            const IntInterval& iv, const std::string& source) {
        write_csv_row(os, section, field, iv.lo, iv.hi, source,
                      iv.excluded.empty() ? "" : "excluded " + join(iv.excluded));
    };
    interval_row("bounds", "k", doc.bounds.k, kFormula);
    interval_row("bounds", "k0", doc.bounds.k0, kFormula);
    interval_row("bounds", "k1", doc.bounds.k1, kFormula);
    interval_row("bounds", "l", doc.bounds.l, kFormula);
    if (doc.bounds.k_minus_l)
        write_csv_row(os, "bounds", "k_minus_l", *doc.bounds.k_minus_l, *doc.bounds.k_minus_l,
                      kFormula);
    write_csv_row(os, "bounds", "height_vanishing_above", doc.bounds.height_vanishing_above,
                  doc.bounds.height_vanishing_above, kFormula);
    write_csv_row(os, "bounds", "weighted_sum_bound", doc.bounds.weighted_sum_bound,
                  doc.bounds.weighted_sum_bound, kFormula);
    interval_row("invariants", "k", doc.k.iv, doc.k.source);
    interval_row("invariants", "k0", doc.k0.iv, doc.k0.source);
    interval_row("invariants", "k1", doc.k1.iv, doc.k1.source);
    interval_row("invariants", "l", doc.l_B.iv, doc.l_B.source);
    if (doc.k_minus_l)
        write_csv_row(os, "invariants", "k_minus_l", *doc.k_minus_l, *doc.k_minus_l, kFormula);
    if (doc.fusion) {
        const FusionSummary& fs = *doc.fusion;
        write_csv_row(os, "fusion", "conjugacy_classes", fs.conjugacy_class_count,
                      fs.conjugacy_class_count, kBrute);
        write_csv_row(os, "fusion", "fusion_classes", fs.fusion_class_count,
                      fs.fusion_class_count, kBrute);
        write_csv_row(os, "fusion", "k_lower", fs.k_lower_value, fs.k_lower_value, kFormula);
        write_csv_row(os, "fusion", "semidirect_class_count", fs.semidirect_class_count,
                      fs.semidirect_class_count, kBrute);
    }
    if (doc.characters) {
        const CharacterSummary& cs = *doc.characters;
        write_csv_row(os, "characters", "k_D", cs.k_D, cs.k_D, kFormula);
        write_csv_row(os, "characters", "owc_weight_full_defect", cs.owc_weight_full,
                      cs.owc_weight_full, kBrute);
        write_csv_row(os, "characters", "owc_weight_subdefect", cs.owc_weight_sub,
                      cs.owc_weight_sub, kBrute);
        if (cs.galois)
            write_csv_row(os, "characters", "galois_rational_lo", cs.galois->rational_lo,
                          cs.galois->rational_hi, kBrute,
                          "orbits " + join(cs.galois->orbit_lengths));
    }
    for (const auto& c : doc.conjectures)
        write_csv_row(os, "conjecture", c.name, c.verified ? 1 : 0, c.verified ? 1 : 0, kFormula,
                      c.witness);
    for (const auto& v : doc.consistency_violations)
        write_csv_row(os, "consistency", "violation", 0, 0, kBrute, v);
}

void write_report_text(const ReportDocument& doc, std::ostream& os)
{
    os << "block parameters (p, m, n, l, e) = (" << doc.p << ", " << doc.m << ", " << doc.n
       << ", " << doc.l << ", " << doc.e << "), |D| = " << doc.group_order << "\n";
    os << "  k(D) classes: " << doc.class_count_formula_value << " (formula)\n";
    os << "invariants:\n";
    os << "  k(B)  = " << interval_text(doc.k.iv) << "  [" << doc.k.source << "]\n";
    os << "  k0(B) = " << interval_text(doc.k0.iv) << "  [" << doc.k0.source << "]\n";
    os << "  k1(B) = " << interval_text(doc.k1.iv) << "  [" << doc.k1.source << "]\n";
    os << "  l(B)  = " << interval_text(doc.l_B.iv) << "  [" << doc.l_B.source << "]\n";
    if (doc.k_minus_l)
        os << "  k(B) - l(B) = " << *doc.k_minus_l << "  [formula]\n";
    os << "  heights vanish above " << doc.bounds.height_vanishing_above
       << "; sum p^(2i) k_i <= " << doc.bounds.weighted_sum_bound << "\n";
    if (doc.exact)
        os << "  exact basis: " << doc.exact->basis << "\n";
    if (doc.fusion) {
        os << "fusion:\n";
        os << "  conjugacy classes of D: " << doc.fusion->conjugacy_class_count
           << ", F-classes: " << doc.fusion->fusion_class_count << " (" << doc.fusion->classes_meeting_y
           << " meeting <y>)\n";
        os << "  sum l(b_u) = " << doc.fusion->k_lower_value
           << ", k(D x| I(B)) = " << doc.fusion->semidirect_class_count << "\n";
    }
    if (doc.characters) {
        const CharacterSummary& cs = *doc.characters;
        os << "characters:\n";
        os << "  " << cs.linear_count << " linear + " << cs.degree_p_count << " of degree p = "
           << cs.k_D << " irreducible characters of D\n";
        os << "  w(D, m+1) = " << cs.owc_weight_full << ", w(D, m) = " << cs.owc_weight_sub
           << "\n";
        os << "  inertial orbits on linear characters: {" << join(cs.inertial_linear_orbits)
           << "}\n";
        os << "  inertial orbits on degree-p characters: {" << join(cs.inertial_degree_p_orbits)
           << "}\n";
        if (cs.galois)
            os << "  p-conjugate orbit lengths {" << join(cs.galois->orbit_lengths) << "} plus "
               << cs.galois->rational_lo << ".." << cs.galois->rational_hi
               << " p-rational characters\n";
    }
    os << "conjectures:\n";
    for (const auto& c : doc.conjectures)
        os << "  " << (c.verified ? "[ok]  " : "[open] ") << c.name << ": " << c.witness << "\n";
    if (!doc.consistency_violations.empty()) {
        os << "CONSISTENCY VIOLATIONS:\n";
        for (const auto& v : doc.consistency_violations)
            os << "  " << v << "\n";
    }
}

} // namespace

void write_report(const ReportDocument& doc, Format format, std::ostream& os)
{
    switch (format) {
    case Format::json:
        os << report_to_json(doc).dump(2) << "\n";
        break;
    case Format::csv:
        write_report_csv(doc, os);
        break;
    case Format::text:
        write_report_text(doc, os);
        break;
    }
}

std::vector<BlockParams> scan_grid(const ScanOptions& opts)
{
    std::vector<BlockParams> grid;
    std::vector<long long> primes = opts.primes;
    std::sort(primes.begin(), primes.end());
    for (long long p : primes) {
        if (p == 2 || !is_prime(p))
            throw std::invalid_argument("scan: " + std::to_string(p) + " is not an odd prime");
        for (int m = 2;; ++m) {
            if (ipow(p, m + 1) > opts.max_order)
                break;
            for (int n = 1; ipow(p, m + n) <= opts.max_order; ++n)
                for (int l = std::max(1, m - n); l <= m - 1; ++l)
                    for (long long e = 1; e <= p - 1; ++e)
                        if ((p - 1) % e == 0)
                            grid.push_back(BlockParams::make(p, m, n, l, e));
        }
    }
    return grid;
}

void run_scan(const ScanOptions& opts, Format format, std::ostream& os)
{
    if (opts.max_order > opts.budget)
        throw budget_error("scan: max order " + std::to_string(opts.max_order) +
                           " exceeds enumeration budget " + std::to_string(opts.budget));
    auto grid = scan_grid(opts);
    if (format == Format::csv)
        os << "p,m,n,l,e,group_order,k_lo,k_hi,k0_lo,k0_hi,k1_lo,k1_hi,l_lo,l_hi,"
              "k_minus_l,k_lower,semidirect,source\r\n";
    for (const auto& B : grid) {
        const GroupParams& G = B.group();
        std::string tuple = "(p, m, n, l, e) = (" + std::to_string(G.p()) + ", " +
                            std::to_string(G.m()) + ", " + std::to_string(G.n()) + ", " +
                            std::to_string(G.l()) + ", " + std::to_string(B.e()) + ")";
        ReportDocument doc;
        try {
            doc = build_report(B, opts.budget);
        } catch (const consistency_error& err) {
            throw consistency_error("scan aborted at " + tuple + ": " + err.what());
        }
        if (!doc.consistency_violations.empty())
            throw consistency_error("scan aborted at " + tuple + ": " +
                                    doc.consistency_violations.front());
        switch (format) {
        case Format::json:
            os << report_to_json(doc).dump() << "\n";
            break;
        case Format::csv: {
            os << doc.p << ',' << doc.m << ',' << doc.n << ',' << doc.l << ',' << doc.e << ','
               << doc.group_order << ',' << doc.k.iv.lo << ',' << doc.k.iv.hi << ','
               << doc.k0.iv.lo << ',' << doc.k0.iv.hi << ',' << doc.k1.iv.lo << ','
               << doc.k1.iv.hi << ',' << doc.l_B.iv.lo << ',' << doc.l_B.iv.hi << ',';
            if (doc.k_minus_l)
                os << *doc.k_minus_l;
            os << ',';
            if (doc.fusion)
                os << doc.fusion->k_lower_value;
            os << ',';
            if (doc.fusion)
                os << doc.fusion->semidirect_class_count;
            os << ',' << doc.k.source << "\r\n";
            break;
        }
        case Format::text:
            os << tuple << ": k = " << interval_text(doc.k.iv)
               << ", k0 = " << interval_text(doc.k0.iv) << ", k1 = " << interval_text(doc.k1.iv)
               << ", l = " << interval_text(doc.l_B.iv) << "\n";
            break;
        }
    }
}

} // namespace blockforge
