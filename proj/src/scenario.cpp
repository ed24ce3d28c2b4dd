#include "salab/scenario.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "salab/fuzz.hpp"
#include "salab/mutation.hpp"
#include "salab/textio.hpp"

namespace salab {

namespace {

using nlohmann::json;

using Object = std::variant<Scalar, MixedForm, VectorField10, Connection, GaugeMap, SectionQ,
                            StringData, LElement, GaugeElement, TangentPair, Cover, Cochain1,
                            Cochain0, ConnectionFamily>;

struct Context {
    int n = 0;
    LieAlgebraSpec spec;
    std::map<std::string, Object> objects;
};

[[noreturn]] void bad(const std::string& msg) { throw TypeError(msg); }

const json& field(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) bad("missing field '" + key + "'");
    return *it;
}

std::string sfield(const json& j, const std::string& key) {
    const json& v = field(j, key);
    if (!v.is_string()) bad("field '" + key + "' must be a string");
    return v.get<std::string>();
}

// --- object parsers ---------------------------------------------------------

SMatrix parse_smatrix(const Context& ctx, const json& j) {
    int k = ctx.spec.k();
    if (!j.is_array() || (int)j.size() != k) bad("matrix must have k rows");
    SMatrix out;
    out.reserve(k * k);
    for (const auto& row : j) {
        if (!row.is_array() || (int)row.size() != k) bad("matrix row must have k entries");
        for (const auto& e : row) out.push_back(parse_scalar(e.get<std::string>(), ctx.n));
    }
    return out;
}

LieForm parse_lie_matrix(const Context& ctx, const json& j, int p, int q) {
    int k = ctx.spec.k();
    if (!j.is_array() || (int)j.size() != k) bad("matrix must have k rows");
    std::vector<Form> entries;
    entries.reserve(k * k);
    for (const auto& row : j) {
        if (!row.is_array() || (int)row.size() != k) bad("matrix row must have k entries");
        for (const auto& e : row) entries.push_back(parse_form(e.get<std::string>(), ctx.n, p, q));
    }
    return LieForm::from_matrix(ctx.n, ctx.spec, p, q, std::move(entries));
}

// 1-form matrix, mixed (1,0) + (0,1) entries allowed
LieForm parse_lie_oneform(const Context& ctx, const json& j) {
    int k = ctx.spec.k();
    if (!j.is_array() || (int)j.size() != k) bad("matrix must have k rows");
    LieForm out(ctx.n, ctx.spec);
    std::vector<Form> p10(k * k, Form(ctx.n, 1, 0)), p01(k * k, Form(ctx.n, 0, 1));
    int idx = 0;
    for (const auto& row : j) {
        if (!row.is_array() || (int)row.size() != k) bad("matrix row must have k entries");
        for (const auto& e : row) {
            MixedForm m = parse_expr(e.get<std::string>(), ctx.n);
            for (const auto& [d, f] : m.parts()) {
                if (d == Bidegree{1, 0})
                    p10[idx] = f;
                else if (d == Bidegree{0, 1})
                    p01[idx] = f;
                else
                    bad("matrix entry must be a 1-form");
            }
            ++idx;
        }
    }
    out.add_part(1, 0, p10);
    out.add_part(0, 1, p01);
    return out;
}

GaugeMap parse_gauge(const Context& ctx, const json& j) {
    return GaugeMap(ctx.n, ctx.spec, parse_smatrix(ctx, field(j, "g")),
                    parse_smatrix(ctx, field(j, "g_inv")));
}

MixedForm parse_bidegree_map(const Context& ctx, const json& j) {
    MixedForm out(ctx.n);
    if (!j.is_object()) bad("expected an object keyed by \"p,q\"");
    for (auto it = j.begin(); it != j.end(); ++it) {
        int p = 0, q = 0;
        if (std::sscanf(it.key().c_str(), "%d,%d", &p, &q) != 2)
            bad("bidegree key must look like \"3,0\"");
        out.add(parse_form(it.value().get<std::string>(), ctx.n, p, q));
    }
    return out;
}

Object parse_object(Context& ctx, const json& j);

// resolves either an inline definition or a reference by name
template <typename T>
T resolve(Context& ctx, const json& j, const std::string& what) {
    if (j.is_string()) {
        auto it = ctx.objects.find(j.get<std::string>());
        if (it == ctx.objects.end()) bad("unknown object '" + j.get<std::string>() + "'");
        if (!std::holds_alternative<T>(it->second))
            bad("object '" + j.get<std::string>() + "' is not a " + what);
        return std::get<T>(it->second);
    }
    Object o = parse_object(ctx, j);
    if (!std::holds_alternative<T>(o)) bad("inline object is not a " + what);
    return std::get<T>(o);
}

Object parse_object(Context& ctx, const json& j) {
    if (!j.is_object()) bad("object definitions must be JSON objects");
    std::string type = sfield(j, "type");
    if (type == "scalar") return parse_scalar(sfield(j, "value"), ctx.n);
    if (type == "form") return parse_expr(sfield(j, "value"), ctx.n);
    if (type == "vector-field") {
        const json& comp = field(j, "components");
        if (!comp.is_array() || (int)comp.size() != ctx.n) bad("vector field needs n components");
        std::vector<Scalar> c;
        for (const auto& e : comp) c.push_back(parse_scalar(e.get<std::string>(), ctx.n));
        return VectorField10(ctx.n, std::move(c));
    }
    if (type == "connection")
        return Connection(parse_lie_matrix(ctx, field(j, "theta10"), 1, 0),
                          parse_lie_matrix(ctx, field(j, "theta01"), 0, 1));
    if (type == "gauge") return parse_gauge(ctx, j);
    if (type == "section")
        return SectionQ(resolve<VectorField10>(
                            ctx, json{{"type", "vector-field"}, {"components", field(j, "V")}},
                            "vector field"),
                        parse_lie_matrix(ctx, field(j, "r"), 0, 0),
                        parse_form(sfield(j, "xi"), ctx.n, 1, 0));
    if (type == "string-data")
        return StringData(resolve<Connection>(ctx, field(j, "theta"), "connection"),
                          parse_form(sfield(j, "H30"), ctx.n, 3, 0),
                          parse_form(sfield(j, "H21"), ctx.n, 2, 1));
    if (type == "l-element") {
        int k = field(j, "degree").get<int>();
        return LElement(k, parse_lie_matrix(ctx, field(j, "alpha"), 0, k),
                        j.contains("b") ? parse_bidegree_map(ctx, field(j, "b"))
                                        : MixedForm(ctx.n));
    }
    if (type == "gauge-element")
        return GaugeElement(resolve<GaugeMap>(ctx, field(j, "g"), "gauge map"),
                            parse_lie_matrix(ctx, field(j, "a"), 1, 0),
                            parse_form(sfield(j, "B"), ctx.n, 2, 0));
    if (type == "tangent")
        return TangentPair(parse_bidegree_map(ctx, field(j, "Hdot")),
                           parse_lie_oneform(ctx, field(j, "thetadot")));
    if (type == "cover") {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& p : field(j, "pairs")) pairs.emplace_back(p.at(0), p.at(1));
        std::vector<std::array<int, 3>> triples;
        if (j.contains("triples"))
            for (const auto& t : j["triples"])
                triples.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
        return Cover(field(j, "m").get<int>(), std::move(pairs), std::move(triples));
    }
    if (type == "cochain1") {
        Cochain1 c;
        for (auto it = field(j, "entries").begin(); it != field(j, "entries").end(); ++it) {
            int a = 0, b = 0;
            if (std::sscanf(it.key().c_str(), "%d,%d", &a, &b) != 2)
                bad("cochain1 keys look like \"1,2\"");
            c.set(a, b, AutElement(parse_gauge(ctx, it.value()),
                                   parse_form(sfield(it.value(), "B"), ctx.n, 2, 0)));
        }
        return c;
    }
    if (type == "cochain0") {
        Cochain0 c;
        for (auto it = field(j, "entries").begin(); it != field(j, "entries").end(); ++it) {
            c.set(std::stoi(it.key()),
                  AutElement(parse_gauge(ctx, it.value()),
                             parse_form(sfield(it.value(), "B"), ctx.n, 2, 0)));
        }
        return c;
    }
    if (type == "connection-family") {
        ConnectionFamily f;
        for (auto it = field(j, "entries").begin(); it != field(j, "entries").end(); ++it)
            f.theta.emplace(std::stoi(it.key()), resolve<Connection>(ctx, it.value(), "connection"));
        return f;
    }
    bad("unknown object type '" + type + "'");
}

// --- command handlers --------------------------------------------------------

void add_residual(CommandResult& r, const std::string& name, const std::string& text, bool zero) {
    r.payloads.push_back(Payload{name, text, true, zero});
}

void add_value(CommandResult& r, const std::string& name, const std::string& text) {
    r.payloads.push_back(Payload{name, text, false, false});
}

template <typename T>
void residual(CommandResult& r, const std::string& name, const T& v) {
    add_residual(r, name, v.str(), v.is_zero());
}

void residual_scalar(CommandResult& r, const std::string& name, const Scalar& v) {
    add_residual(r, name, v.str(), v.is_zero());
}

void run_command(Context& ctx, const json& j, CommandResult& out) {
    std::string cmd = sfield(j, "cmd");
    out.command = cmd;

    auto data = [&] { return resolve<StringData>(ctx, field(j, "data"), "string data"); };
    auto save_as = [&](Object o) {
        if (j.contains("save")) ctx.objects.insert_or_assign(sfield(j, "save"), std::move(o));
    };

    if (cmd == "check-courant") {
        StringData d = data();
        const json& secs = field(j, "sections");
        if (!secs.is_array() || secs.size() != 3) bad("check-courant needs three sections");
        SectionQ s1 = resolve<SectionQ>(ctx, secs.at(0), "section");
        SectionQ s2 = resolve<SectionQ>(ctx, secs.at(1), "section");
        SectionQ s3 = resolve<SectionQ>(ctx, secs.at(2), "section");
        Scalar phi = j.contains("phi") ? parse_scalar(sfield(j, "phi"), ctx.n)
                                       : Scalar::coord(ctx.n, 1);
        CourantReport rep = courant_axioms_residual(d, s1, s2, s3, phi);
        residual(out, "D1", rep.d1);
        residual(out, "D2", rep.d2);
        residual(out, "D3", rep.d3);
        residual_scalar(out, "D4", rep.d4);
        residual(out, "D5", rep.d5);
    } else if (cmd == "check-integrability") {
        IntegrabilityResidual r = integrability_residual(data());
        residual(out, "(4,0)", r.r40);
        residual(out, "(3,1)", r.r31);
        residual(out, "(2,2)", r.r22);
    } else if (cmd == "iso-check") {
        StringData d = data();
        StringData d2 = resolve<StringData>(ctx, field(j, "data2"), "string data");
        GaugeMap g = resolve<GaugeMap>(ctx, field(j, "g"), "gauge map");
        Form B = parse_form(sfield(j, "B"), ctx.n, 2, 0);
        MixedForm res = iso_residual(d, d2, g, B);
        residual(out, "iso", res);
        if (j.contains("sections")) {
            LieForm a = gauge_transform(g.inverse(), d2.theta).full() - d.theta.full();
            MorphismData m(g, a, B);
            int idx = 0;
            for (const auto& sj : j["sections"]) {
                SectionQ s = resolve<SectionQ>(ctx, sj, "section");
                SectionQ other = s;
                QkSection dol = apply_morphism(m, dolbeault_Q(d, s)) -
                                dolbeault_Q(d2, apply_morphism(m, s));
                residual(out, "dolbeault[" + std::to_string(idx) + "]", dol);
                SectionQ br = apply_morphism(m, dorfman(d, s, other)) -
                              dorfman(d2, apply_morphism(m, s), apply_morphism(m, other));
                residual(out, "dorfman[" + std::to_string(idx) + "]", br);
                Scalar pr = pairing_Q(apply_morphism(m, s), apply_morphism(m, s)) -
                            pairing_Q(s, s);
                residual_scalar(out, "pairing[" + std::to_string(idx) + "]", pr);
                ++idx;
            }
        }
    } else if (cmd == "aut-check") {
        Connection th = resolve<Connection>(ctx, field(j, "theta"), "connection");
        GaugeMap g = resolve<GaugeMap>(ctx, field(j, "g"), "gauge map");
        Form B = parse_form(sfield(j, "B"), ctx.n, 2, 0);
        residual(out, "membership", aut_condition_residual(th, g, B));
    } else if (cmd == "cs") {
        Connection th = resolve<Connection>(ctx, field(j, "theta"), "connection");
        MixedForm cs = chern_simons(th);
        add_value(out, "CS", cs.str());
        LieForm F = curvature(th);
        MixedForm res = ext_d(cs) - pairing_c(F, F);
        residual(out, "dCS - c(F^F)", res);
    } else if (cmd == "cs-diff") {
        Connection th = resolve<Connection>(ctx, field(j, "theta"), "connection");
        LieForm a = parse_lie_oneform(ctx, field(j, "a"));
        MixedForm v = cs_difference(th, a);
        add_value(out, "cs-difference", v.str());
        Connection shifted = th + a;
        MixedForm res = chern_simons(shifted) - chern_simons(th) -
                        ext_d(pairing_c(shifted.full(), th.full())) - v;
        residual(out, "basic-form identity", res);
    } else if (cmd == "sigma") {
        Connection th = resolve<Connection>(ctx, field(j, "theta"), "connection");
        GaugeMap g = resolve<GaugeMap>(ctx, field(j, "g"), "gauge map");
        MixedForm s = sigma_rep(g, th);
        add_value(out, "sigma", s.str());
        residual(out, "d(sigma)", ext_d(s));
    } else if (cmd == "cech-cocycle") {
        Cover cov = resolve<Cover>(ctx, field(j, "cover"), "cover");
        Cochain1 c = resolve<Cochain1>(ctx, field(j, "cochain"), "cochain1");
        for (auto& [t, res] : cocycle_residual(c, cov)) {
            std::string key =
                std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
            bool gz = true;
            std::ostringstream gs;
            for (const Scalar& s : res.g) {
                if (!s.is_zero()) gz = false;
            }
            gs << (gz ? "0" : "nonzero");
            add_residual(out, "g[" + key + "]", gs.str(), gz);
            residual(out, "B[" + key + "]", res.B);
        }
    } else if (cmd == "cech-coboundary") {
        Cover cov = resolve<Cover>(ctx, field(j, "cover"), "cover");
        Cochain1 c = resolve<Cochain1>(ctx, field(j, "cochain"), "cochain1");
        Cochain0 h = resolve<Cochain0>(ctx, field(j, "cochain0"), "cochain0");
        Cochain1 acted = coboundary_act(h, c, cov);
        for (auto& [i, jx] : cov.pairs) {
            std::string key = std::to_string(i) + "," + std::to_string(jx);
            add_value(out, "entry[" + key + "]", acted.at(i, jx).str());
        }
        // if the input was a cocycle the output must stay one
        bool was = true;
        for (auto& [t, res] : cocycle_residual(c, cov)) was = was && res.is_zero();
        if (was) {
            for (auto& [t, res] : cocycle_residual(acted, cov)) {
                std::string key =
                    std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
                add_residual(out, "cocycle-preserved[" + key + "]",
                             res.is_zero() ? "0" : "nonzero", res.is_zero());
            }
        }
        save_as(acted);
    } else if (cmd == "cech-assemble-h") {
        Cover cov = resolve<Cover>(ctx, field(j, "cover"), "cover");
        Cochain1 c = resolve<Cochain1>(ctx, field(j, "cochain"), "cochain1");
        ConnectionFamily fam = resolve<ConnectionFamily>(ctx, field(j, "family"), "family");
        std::map<int, Form> C;
        for (auto it = field(j, "C").begin(); it != field(j, "C").end(); ++it)
            C.emplace(std::stoi(it.key()), parse_form(it.value().get<std::string>(), ctx.n, 2, 0));
        CechAssembly res = assemble_H(c, fam, C, cov);
        for (auto& [i, H] : res.H) add_value(out, "H[" + std::to_string(i) + "]", H.str());
        for (auto& [p, f] : res.gluing_residual)
            residual(out, "gluing[" + std::to_string(p.first) + "," + std::to_string(p.second) + "]",
                     f);
        for (auto& [p, f] : res.globality)
            residual(out,
                     "globality[" + std::to_string(p.first) + "," + std::to_string(p.second) + "]",
                     f);
        for (auto& [i, f] : res.integrability)
            residual(out, "integrability[" + std::to_string(i) + "]", f);
    } else if (cmd == "pontryagin") {
        Connection th = resolve<Connection>(ctx, field(j, "theta"), "connection");
        MixedForm p = pontryagin_rep(th);
        add_value(out, "c(F^F)", p.str());
        residual(out, "d c(F^F)", ext_d(p));
    } else if (cmd == "dq") {
        StringData d = data();
        LElement x = resolve<LElement>(ctx, field(j, "x"), "l-element");
        LElement y = d_Q(d, x);
        add_value(out, "d_Q x", y.str());
        LElement sq = d_Q(d, y);
        add_residual(out, "d_Q d_Q x", sq.str(), sq.is_zero());
    } else if (cmd == "dgla-axioms") {
        StringData d = data();
        LElement x = resolve<LElement>(ctx, field(j, "x"), "l-element");
        LElement y = resolve<LElement>(ctx, field(j, "y"), "l-element");
        LElement z = resolve<LElement>(ctx, field(j, "z"), "l-element");
        int dk = x.degree, dl = y.degree, dm = z.degree;
        LElement skew = dgla_bracket(d, x, y);
        LElement yx = dgla_bracket(d, y, x);
        LElement skew_sum = (dk * dl) % 2 ? skew - yx : skew + yx;
        add_residual(out, "graded-skew", skew_sum.str(), skew_sum.is_zero());
        LElement jac = dgla_bracket(d, x, dgla_bracket(d, y, z))
                           .scaled(CRat(Rat((dk * dm) % 2 ? -1 : 1)));
        jac = jac +
              dgla_bracket(d, y, dgla_bracket(d, z, x)).scaled(CRat(Rat((dl * dk) % 2 ? -1 : 1)));
        jac = jac +
              dgla_bracket(d, z, dgla_bracket(d, x, y)).scaled(CRat(Rat((dm * dl) % 2 ? -1 : 1)));
        add_residual(out, "graded-jacobi", jac.str(), jac.is_zero());
        LElement sq = d_Q(d, d_Q(d, x));
        add_residual(out, "d_Q^2", sq.str(), sq.is_zero());
        LElement lhs = d_Q(d, dgla_bracket(d, x, y));
        LElement rhs = dgla_bracket(d, d_Q(d, x), y);
        LElement xy = dgla_bracket(d, x, d_Q(d, y));
        rhs = (dk % 2) ? rhs - xy : rhs + xy;
        LElement der = lhs - rhs;
        add_residual(out, "derivation", der.str(), der.is_zero());
    } else if (cmd == "mc-check") {
        StringData d = data();
        LElement x = resolve<LElement>(ctx, field(j, "x"), "l-element");
        LElement res = mc_residual(d, x);
        residual(out, "alpha-part", res.alpha);
        for (const auto& [deg, f] : res.b.parts())
            residual(out,
                     "b-part(" + std::to_string(deg.first) + "," + std::to_string(deg.second) + ")",
                     f);
        if (res.b.is_zero()) add_residual(out, "b-part", "0", true);
    } else if (cmd == "deform") {
        StringData d = data();
        LElement x = resolve<LElement>(ctx, field(j, "x"), "l-element");
        bool force = j.contains("force") && j["force"].get<bool>();
        StringData def = deformed_data(d, x, force);
        add_value(out, "deformed", def.str());
        IntegrabilityResidual r = integrability_residual(def);
        residual(out, "(4,0)", r.r40);
        residual(out, "(3,1)", r.r31);
        residual(out, "(2,2)", r.r22);
        save_as(def);
    } else if (cmd == "obstruction") {
        StringData d = data();
        LieForm alpha = parse_lie_matrix(ctx, field(j, "alpha"), 0, 1);
        MixedForm rep = obstruction_rep(d, alpha);
        add_value(out, "representative", rep.str());
        residual(out, "d(representative)", ext_d(rep));
    } else if (cmd == "gauge-act") {
        StringData d = data();
        GaugeElement x = resolve<GaugeElement>(ctx, field(j, "x"), "gauge element");
        StringData moved = gauge_act(x, d);
        add_value(out, "result", moved.str());
        if (integrability_residual(d).is_zero()) {
            IntegrabilityResidual r = integrability_residual(moved);
            MixedForm total = r.r40 + r.r31 + r.r22;
            residual(out, "integrability-preserved", total);
        }
        save_as(moved);
    } else if (cmd == "gauge-infinitesimal") {
        StringData d = data();
        LieForm alpha = parse_lie_matrix(ctx, field(j, "alpha"), 0, 0);
        LieForm a = parse_lie_matrix(ctx, field(j, "a"), 1, 0);
        Form b = parse_form(sfield(j, "b"), ctx.n, 2, 0);
        TangentPair L = infinitesimal_action(d, alpha, a, b);
        add_value(out, "L", L.str());
        auto [hres, tres] = infinitesimal_consistency_residual(d, alpha, a, b);
        residual(out, "H-slot dual-number match", hres);
        residual(out, "theta-slot dual-number match", tres);
    } else if (cmd == "phi-epsilon") {
        StringData d = data();
        if (j.contains("x")) {
            LElement x = resolve<LElement>(ctx, field(j, "x"), "l-element");
            TangentPair deps(-x.b, x.alpha);
            LElement round = phi_map(d, deps) - x;
            add_residual(out, "phi(d hat-eps (x)) - x", round.str(), round.is_zero());
        }
        if (j.contains("tangent")) {
            TangentPair t = resolve<TangentPair>(ctx, field(j, "tangent"), "tangent");
            LElement img = phi_map(d, t);
            add_value(out, "phi(t)", img.str());
            auto [t1, t2] = tangent_integrability_residual(d, t);
            bool integrable_tangent = t1.is_zero() && t2.is_zero();
            add_value(out, "tangent-integrable", integrable_tangent ? "yes" : "no");
            if (integrable_tangent) {
                LElement dq = d_Q(d, img);
                add_residual(out, "d_Q(phi(t))", dq.str(), dq.is_zero());
            }
        }
    } else if (cmd == "fuzz") {
        FuzzConfig cfg;
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("cases")) cfg.cases = j["cases"].get<int>();
        if (j.contains("n")) cfg.max_n = j["n"].get<int>();
        if (j.contains("k")) cfg.max_k = j["k"].get<int>();
        if (j.contains("deg")) cfg.max_degree = j["deg"].get<int>();
        FuzzReport rep = run_fuzz(cfg);
        add_value(out, "cases", std::to_string(rep.cases_run));
        for (const auto& f : rep.failures)
            add_residual(out, "counterexample[" + f.property + "#" + std::to_string(f.case_index) +
                                  "]",
                         f.witness, false);
        if (rep.ok()) add_residual(out, "counterexamples", "none", true);
    } else {
        bad("unknown command '" + cmd + "'");
    }
}

}  // namespace

Report run_scenario_text(const std::string& text, const RunOptions& opt) {
    Report report;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // recover line/column from the byte offset
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
        }
        CommandResult r;
        r.command = "(parse)";
        r.status = "error";
        r.message = "JSON parse error at line " + std::to_string(line) + ", column " +
                    std::to_string(col) + ": " + e.what();
        report.results.push_back(std::move(r));
        report.exit_code = 2;
        return report;
    }

    Context ctx;
    try {
        ctx.n = field(doc, "n").get<int>();
        if (ctx.n < 1) bad("chart dimension must be >= 1");
        const json& lie = field(doc, "lie");
        int k = field(lie, "k").get<int>();
        std::vector<LieAlgebraSpec::Block> blocks;
        for (const auto& b : field(lie, "pairing")) {
            const json& range = field(b, "block");
            Scalar mu = parse_scalar(sfield(b, "mu"), 1);
            CRat muv(0);
            if (!mu.is_zero()) {
                if (mu.terms().size() != 1 || mu.terms().begin()->first != Mono(3, 0))
                    bad("pairing weight must be a constant");
                muv = mu.terms().begin()->second;
            }
            blocks.push_back({range.at(0).get<int>(),
                              range.size() > 1 ? range.at(1).get<int>() : range.at(0).get<int>(),
                              muv});
        }
        ctx.spec = LieAlgebraSpec(k, std::move(blocks));

        if (doc.contains("objects")) {
            for (auto it = doc["objects"].begin(); it != doc["objects"].end(); ++it) {
                try {
                    ctx.objects.emplace(it.key(), parse_object(ctx, it.value()));
                } catch (const Error& e) {
                    throw TypeError("object '" + it.key() + "': " + e.what());
                }
            }
        }
    } catch (const Error& e) {
        CommandResult r;
        r.command = "(setup)";
        r.status = "error";
        r.message = e.what();
        report.results.push_back(std::move(r));
        report.exit_code = 2;
        return report;
    }

    bool any_fail = false, any_error = false;
    if (doc.contains("commands")) {
        for (const auto& cj : doc["commands"]) {
            CommandResult r;
            auto start = std::chrono::steady_clock::now();
            try {
                run_command(ctx, cj, r);
                bool ok = true;
                for (const auto& p : r.payloads)
                    if (p.residual && !p.zero) ok = false;
                r.status = ok ? "pass" : "fail";
                if (!ok) any_fail = true;
            } catch (const Error& e) {
                r.status = "error";
                r.message = e.what();
                any_error = true;
            } catch (const json::exception& e) {
                r.status = "error";
                r.message = e.what();
                any_error = true;
            }
            r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start)
                       .count();
            report.results.push_back(std::move(r));
            if (any_error || (any_fail && opt.stop_on_fail)) break;
        }
    }
    report.exit_code = any_error ? 2 : (any_fail ? 1 : 0);
    return report;
}

Report run_scenario_file(const std::string& path, const RunOptions& opt) {
    std::ifstream in(path);
    if (!in) {
        Report r;
        CommandResult c;
        c.command = "(io)";
        c.status = "error";
        c.message = "cannot open file: " + path;
        r.results.push_back(std::move(c));
        r.exit_code = 2;
        return r;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_scenario_text(buf.str(), opt);
}

void print_report_text(const Report& r, std::ostream& os) {
    for (const auto& c : r.results) {
        os << "[" << c.status << "] " << c.command;
        if (!c.message.empty()) os << ": " << c.message;
        os << "  (" << c.ms << " ms)\n";
        for (const auto& p : c.payloads) {
            os << "    " << (p.residual ? "residual " : "value    ") << p.name << " = " << p.text
               << "\n";
        }
    }
    os << "exit: " << r.exit_code << "\n";
}

void print_report_json(const Report& r, std::ostream& os) {
    json doc;
    doc["exit"] = r.exit_code;
    doc["results"] = json::array();
    for (const auto& c : r.results) {
        json cj;
        cj["command"] = c.command;
        cj["status"] = c.status;
        if (!c.message.empty()) cj["message"] = c.message;
        cj["ms"] = c.ms;
        cj["payloads"] = json::array();
        for (const auto& p : c.payloads) {
            json pj;
            pj["name"] = p.name;
            pj["value"] = p.text;
            pj["residual"] = p.residual;
            if (p.residual) pj["zero"] = p.zero;
            cj["payloads"].push_back(pj);
        }
        doc["results"].push_back(cj);
    }
    os << doc.dump(2) << "\n";
}

}  // namespace salab
