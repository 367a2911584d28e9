#ifndef KMCOH_REPORT_HPP
#define KMCOH_REPORT_HPP

// Full analysis of one matrix as an ordered JSON document, plus a plain-text
// rendering of the same document. Every big number is a decimal string.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <kmcoh/cartan.hpp>
#include <kmcoh/cohomology.hpp>
#include <kmcoh/integer.hpp>
#include <kmcoh/polynomial.hpp>
#include <kmcoh/rational_function.hpp>
#include <kmcoh/series.hpp>
#include <kmcoh/weylgrowth.hpp>

namespace kmcoh
{

using AnalysisReport = nlohmann::ordered_json;

namespace json_out
{

using nlohmann::ordered_json;

inline ordered_json strings(const std::vector<Int> &v)
{
    ordered_json out = ordered_json::array();
    for (const Int &x : v) {
        out.push_back(x.str());
    }
    return out;
}

inline ordered_json polynomial(const Polynomial &p) { return strings(p.coeffs()); }

inline ordered_json rational_function(const RationalFunction &r)
{
    return ordered_json{{"num", polynomial(r.num())}, {"den", polynomial(r.den())}, {"display", r.to_string()}};
}

inline ordered_json series(const Series &s)
{
    return ordered_json{{"order", s.order()}, {"coeffs", strings(s.coeffs())}};
}

inline ordered_json rat_matrix(const RatMatrix &m)
{
    ordered_json out = ordered_json::array();
    for (const auto &row : m) {
        ordered_json r = ordered_json::array();
        for (const Rat &x : row) {
            r.push_back(to_string(x));
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline ordered_json presentation(const RingPresentation &p)
{
    ordered_json poly = ordered_json::array();
    for (const auto &[d, c] : p.polynomial) {
        poly.push_back(ordered_json{{"degree", d}, {"count", c.str()}});
    }
    ordered_json rels = ordered_json::array();
    for (const auto &r : p.relations) {
        ordered_json j{{"name", r.name}, {"degree", r.degree}};
        if (r.matrix) {
            j["matrix"] = rat_matrix(*r.matrix);
        }
        rels.push_back(std::move(j));
    }
    return ordered_json{{"space", std::string(1, p.space)},
                        {"n", p.n},
                        {"epsilon", p.epsilon},
                        {"exterior", p.exterior},
                        {"polynomial", std::move(poly)},
                        {"ambient_degree2", p.ambient_degree2},
                        {"relations", std::move(rels)},
                        {"truncated_at", p.truncated_at}};
}

inline ordered_json rank_map(const std::map<unsigned, Int> &m)
{
    ordered_json out = ordered_json::object();
    for (const auto &[k, v] : m) {
        out[std::to_string(k)] = v.str();
    }
    return out;
}

inline ordered_json homotopy(const HomotopyRanks &h)
{
    return ordered_json{{"group", rank_map(h.group)}, {"flag", rank_map(h.flag)}};
}

inline ordered_json symmetrization(const CartanMatrix &a)
{
    const SymmetrizeResult s = symmetrize(a);
    if (s.symmetrization) {
        ordered_json d = ordered_json::array();
        for (const Rat &x : s.symmetrization->d) {
            d.push_back(to_string(x));
        }
        return ordered_json{{"symmetrizable", true}, {"d", std::move(d)}, {"b", rat_matrix(s.symmetrization->b)}};
    }
    const CycleWitness &w = *s.witness;
    return ordered_json{{"symmetrizable", false},
                        {"witness",
                         ordered_json{{"cycle", w.cycle}, {"forward", w.forward.str()}, {"backward", w.backward.str()}}}};
}

} // namespace json_out

namespace detail
{

struct ComponentResult {
    nlohmann::ordered_json json;
    std::optional<RingPresentation> group;
    std::optional<RingPresentation> flag;
    std::optional<GeneratorDegrees> generators;
};

inline ComponentResult analyze_component(const CartanMatrix &a, const std::vector<std::size_t> &nodes,
                                         std::size_t order)
{
    using nlohmann::ordered_json;
    const CartanMatrix sub = a.submatrix(nodes);
    const KMType type = classify(a, nodes);
    const GrowthData growth = flag_poincare(sub);
    const ExponentSeq ex = exponent_sequence(growth.flag, sub.rank(), order);

    ComponentResult out;
    ordered_json &j = out.json;
    j["nodes"] = nodes;
    j["type"] = to_string(type);
    j["epsilon"] = epsilon(sub);
    j["finite_type"] = nullptr;
    j["weyl_growth"] = json_out::rational_function(growth.weyl);
    j["flag_poincare"] = json_out::rational_function(growth.flag);
    j["flag_series"] = json_out::series(growth.flag.expand(2 * order));
    j["e_sequence"] = json_out::strings(ex.e);
    j["decomposition"] = nullptr;

    if (type == KMType::finite) {
        const auto labels = *recognize_finite(coxeter_matrix(sub), components(sub).front());
        std::string name;
        for (const auto &l : labels) {
            name += l.name();
        }
        j["finite_type"] = name;
        j["decomposition"] = format_decomposition(order_decomposition(sub));
        out.generators = finite_generator_degrees(labels, order);
        out.group = finite_group_cohomology(labels, order);
        out.flag = finite_flag_cohomology(sub, order);
    } else if (type == KMType::affine) {
        try {
            j["decomposition"] = format_decomposition(order_decomposition(sub));
        } catch (const error &e) {
            if (e.code() != errc::non_canonical_decomposition) {
                throw;
            }
            j["decomposition_note"] = e.what();
        }
    } else {
        out.generators = generator_degrees(sub, order);
        out.group = group_presentation(*out.generators);
        out.flag = flag_presentation(sub, order);
    }

    if (out.generators) {
        std::vector<Int> is(out.generators->counts.begin() + 1, out.generators->counts.end());
        j["i_sequence"] = json_out::strings(is);
        j["presentations"] = ordered_json{{"group", json_out::presentation(*out.group)},
                                          {"flag", json_out::presentation(*out.flag)}};
        j["homotopy"] = json_out::homotopy(homotopy_ranks(*out.generators));
    } else {
        j["i_sequence"] = nullptr;
        j["presentations"] = nullptr;
        j["homotopy"] = nullptr;
    }
    return out;
}

} // namespace detail

// order counts steps in q^2: series are reported through q^(2 order).
inline AnalysisReport analyze(const CartanMatrix &a, std::size_t order, const std::string &source = {})
{
    using nlohmann::ordered_json;
    if (order == 0) {
        throw error(errc::parse_error, "order must be at least 1");
    }
    AnalysisReport r;
    r["input"] = ordered_json{{"source", source}, {"n", a.rank()}, {"a", a.rows()}};
    r["order"] = order;
    r["symmetrization"] = json_out::symmetrization(a);
    r["epsilon"] = epsilon(a);
    const GrowthData growth = flag_poincare(a);
    r["weyl_growth"] = json_out::rational_function(growth.weyl);
    r["flag_poincare"] = json_out::rational_function(growth.flag);
    r["flag_series"] = json_out::series(growth.flag.expand(2 * order));

    ordered_json comps = ordered_json::array();
    std::vector<RingPresentation> groups;
    std::vector<RingPresentation> flags;
    GeneratorDegrees total(0, 1, 2 * order);
    bool ring = true;
    for (const auto &nodes : components(a)) {
        auto c = detail::analyze_component(a, nodes, order);
        if (c.group) {
            groups.push_back(*c.group);
            flags.push_back(*c.flag);
            total.n += c.generators->n;
            total.epsilon = std::min(total.epsilon, c.generators->epsilon);
            for (std::size_t k = 1; k <= total.cutoff; ++k) {
                total[k] += (*c.generators)[k];
            }
        } else {
            ring = false;
        }
        comps.push_back(std::move(c.json));
    }
    r["components"] = std::move(comps);
    if (ring) {
        r["ring"] = ordered_json{{"group", json_out::presentation(tensor_product(groups))},
                                 {"flag", json_out::presentation(tensor_product(flags))},
                                 {"homotopy", json_out::homotopy(homotopy_ranks(total))}};
    } else {
        r["ring"] = nullptr;
    }
    return r;
}

namespace detail
{

inline bool is_scalar(const nlohmann::ordered_json &j) { return !j.is_array() && !j.is_object(); }

inline std::string scalar_text(const nlohmann::ordered_json &j)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_null()) {
        return "-";
    }
    return j.dump();
}

inline bool scalar_array(const nlohmann::ordered_json &j)
{
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const auto &x) { return is_scalar(x); });
}

inline void render(const nlohmann::ordered_json &j, const std::string &indent, std::string &out)
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto &v = it.value();
        const std::string label = j.is_object() ? it.key() + ":" : "-";
        if (is_scalar(v)) {
            out += indent + label + " " + scalar_text(v) + "\n";
        } else if (v.empty()) {
            out += indent + label + (v.is_array() ? " []" : " {}") + "\n";
        } else if (scalar_array(v)) {
            out += indent + label;
            for (const auto &x : v) {
                out += " " + scalar_text(x);
            }
            out += "\n";
        } else {
            out += indent + label + "\n";
            render(v, indent + "  ", out);
        }
    }
}

} // namespace detail

// Indented key/value text; same content and order as the JSON document.
inline std::string render_text(const AnalysisReport &r)
{
    std::string out;
    detail::render(r, "", out);
    return out;
}

} // namespace kmcoh

#endif
