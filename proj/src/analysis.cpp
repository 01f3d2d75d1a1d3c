#include "saddleform/analysis.hpp"

#include <json.hpp>

#include <sstream>
#include <utility>

namespace saddleform {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

void push_stage(AnalysisReport& rep, const std::string& name, const std::string& status,
                const std::string& detail) {
    rep.stages.push_back({name, status, detail});
}

std::string count_label(std::size_t k, const std::string& noun) {
    return std::to_string(k) + " " + noun + (k == 1 ? "" : "s");
}

/// The stages shared by both pipelines, run on the working form (omega
/// itself in saddle mode, its complexification in center mode).
void run_core_stages(AnalysisReport& rep, const OneForm& w, const std::string& first_stage) {
    rep.cycle = cycle_integral_symbolic(w);
    rep.obstructions = rep.cycle.obstructions();
    push_stage(rep, first_stage, "ok",
               rep.obstructions.empty() ? "cycle polynomial vanishes identically"
                                        : count_label(rep.obstructions.size(), "obstruction"));

    if (!rep.obstructions.empty()) {
        push_stage(rep, "standard_form", "skipped", "cycle obstructions present");
    } else {
        try {
            rep.standard = standard_form(w);
            push_stage(rep, "standard_form", "ok",
                       rep.standard->exact
                           ? "recombines exactly"
                           : "verified through spatial degree " +
                                 std::to_string(rep.standard->residual_degree.value_or(-1)));
        } catch (const InternalError&) {
            throw;
        } catch (const Error& e) {
            push_stage(rep, "standard_form", "failed", e.what());
        }
    }

    rep.integrability_pass = wedge12(w, ext_d(w)).is_zero();
    push_stage(rep, "integrability", "ok",
               rep.integrability_pass ? "omega ^ d(omega) = 0 within the window"
                                      : "omega ^ d(omega) has a nonzero stored term");

    rep.codim = classify_codim(wedge_with_df(w));
    push_stage(rep, "codim", "ok",
               codim_class_name(rep.codim.cls) +
                   (rep.codim.witness ? ", witness " + rep.codim.witness->str() : ""));

    std::string gate;
    if (!rep.obstructions.empty())
        gate = "cycle obstructions present";
    else if (!rep.integrability_pass)
        gate = "omega is not integrable";
    else if (rep.codim.cls == CodimClass::CodimOne)
        gate = "singular locus has codimension one";
    else if (rep.codim.cls == CodimClass::Inconclusive)
        gate = "codimension check inconclusive";
    if (!gate.empty()) {
        push_stage(rep, "first_integral", "skipped", gate);
    } else {
        try {
            rep.first_integral = build_first_integral(w);
            push_stage(rep, "first_integral", "ok", "verified to the truncation bounds");
        } catch (const InternalError&) {
            throw;
        } catch (const Error& e) {
            push_stage(rep, "first_integral", "failed", e.what());
        }
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

ordered_json complex_json(std::complex<double> v) {
    ordered_json j;
    j["re"] = v.real();
    j["im"] = v.imag();
    return j;
}

ordered_json report_json(const AnalysisReport& r) {
    ordered_json j;
    j["input"] = r.input;
    if (r.real) j["real"] = true;
    j["truncation"] = {{"n", r.ctx.n}, {"spatial_degree", r.ctx.D}, {"t_order", r.ctx.J}};
    j["cycle_polynomial"] = r.cycle.str();

    ordered_json obs = ordered_json::array();
    for (const auto& o : r.obstructions) {
        ordered_json e;
        e["c_power"] = o.m;
        e["t_order"] = o.j;
        e["transverse"] = TruncatedSeries::monomial(r.ctx, o.z_mono, Gaussian(1)).str();
        e["value"] = o.value.str();
        obs.push_back(std::move(e));
    }
    j["obstructions"] = std::move(obs);

    if (r.standard) {
        ordered_json sf;
        sf["a"] = r.standard->a.str();
        sf["h"] = r.standard->h.str();
        sf["exact"] = r.standard->exact;
        if (r.standard->residual_degree)
            sf["residual_degree"] = *r.standard->residual_degree;
        else
            sf["residual_degree"] = nullptr;
        j["standard_form"] = std::move(sf);
    } else {
        j["standard_form"] = nullptr;
    }

    j["integrability"] = ordered_json{{"pass", r.integrability_pass}};

    ordered_json cd;
    cd["class"] = codim_class_name(r.codim.cls);
    if (r.codim.witness)
        cd["witness"] = r.codim.witness->str();
    else
        cd["witness"] = nullptr;
    cd["stripped_t_power"] = r.codim.stripped_t_power;
    j["codim"] = std::move(cd);

    if (r.first_integral) {
        ordered_json fi;
        fi["F"] = r.first_integral->F.str();
        if (r.real) fi["F_real"] = r.first_integral_real;
        fi["verified_spatial_degree"] = r.first_integral->verified_spatial_degree;
        fi["verified_t_order"] = r.first_integral->verified_t_order;
        j["first_integral"] = std::move(fi);
    } else {
        j["first_integral"] = nullptr;
    }

    ordered_json checks = ordered_json::array();
    for (const auto& c : r.numeric_checks) {
        ordered_json e;
        e["path"] = c.path;
        e["symbolic"] = complex_json(c.symbolic);
        e["quadrature"] = complex_json(c.quadrature);
        e["abs_error"] = c.abs_error;
        checks.push_back(std::move(e));
    }
    j["numeric_checks"] = std::move(checks);

    ordered_json st = ordered_json::array();
    for (const auto& s : r.stages) {
        ordered_json e;
        e["name"] = s.name;
        e["status"] = s.status;
        e["detail"] = s.detail;
        st.push_back(std::move(e));
    }
    j["stages"] = std::move(st);
    return j;
}

} // namespace

const StageStatus* AnalysisReport::stage(const std::string& name) const {
    for (const auto& s : stages)
        if (s.name == name) return &s;
    return nullptr;
}

std::string AnalysisReport::json_text(bool pretty) const {
    ordered_json j = report_json(*this);
    return pretty ? j.dump(2) : j.dump();
}

AnalysisReport run_analysis(const OneForm& omega) {
    const VarContext& ctx = omega.ctx();
    if (omega.t_component(0) != saddle_differential(ctx))
        throw PreconditionFailed("the parameter-free part of omega is not d(xy)");

    AnalysisReport rep(ctx);
    rep.input = omega.str();
    run_core_stages(rep, omega, "cycle");

    struct PathSpec {
        double c, x0, t, z;
    };
    const PathSpec specs[] = {{0.2, 1.0, 0.5, 0.3}, {0.35, 0.8, 0.25, -0.2}};
    for (const auto& s : specs) {
        CyclePath path;
        path.c = s.c;
        path.x0 = s.x0;
        path.t = s.t;
        path.z.assign(ctx.n - 2, std::complex<double>(s.z, 0.0));
        NumericCheck chk;
        chk.path = "cycle c=" + fmt(s.c) + " x0=" + fmt(s.x0) + " t=" + fmt(s.t);
        chk.quadrature = cycle_integral_numeric(omega, path, 256);
        chk.symbolic =
            std::complex<double>(0.0, kTwoPi) * rep.cycle.eval(path.c, path.z, path.t);
        chk.abs_error = std::abs(chk.quadrature - chk.symbolic);
        rep.numeric_checks.push_back(std::move(chk));
    }
    push_stage(rep, "numeric_checks", "ok", count_label(rep.numeric_checks.size(), "comparison"));
    return rep;
}

AnalysisReport center_pipeline(const RealOneForm& omega) {
    const VarContext& ctx = omega.ctx();
    OneForm generator(ctx);
    generator.set_component(0, TruncatedSeries::variable(ctx, 0).scaled(Gaussian(2)));
    generator.set_component(1, TruncatedSeries::variable(ctx, 1).scaled(Gaussian(2)));
    if (omega.form().t_component(0) != generator)
        throw PreconditionFailed("the parameter-free part of omega is not d(x^2 + y^2)");

    OneForm complexified = complexify(omega);
    AnalysisReport rep(complexified.ctx());
    rep.real = true;
    rep.input = omega.str();
    run_core_stages(rep, complexified, "circle_obstructions");

    if (rep.first_integral) {
        try {
            rep.first_integral_real = decomplexify(rep.first_integral->F).str();
            push_stage(rep, "decomplexify", "ok", "first integral is real");
        } catch (const NotReal& e) {
            push_stage(rep, "decomplexify", "failed", e.what());
        }
    } else {
        push_stage(rep, "decomplexify", "skipped", "no first integral to decomplexify");
    }

    const double radii[] = {0.5, 1.0};
    for (double r : radii) {
        RealCircle circle;
        circle.r = r;
        circle.t = 0.5;
        circle.u.assign(ctx.n - 2, 0.3);
        NumericCheck chk;
        chk.path = "circle r=" + fmt(r) + " t=" + fmt(circle.t);
        chk.quadrature = circle_integral_numeric(omega, circle, 256);
        std::vector<std::complex<double>> uvals(circle.u.begin(), circle.u.end());
        std::complex<double> ihat = rep.cycle.eval(r * r, uvals, circle.t);
        chk.symbolic = kTwoPi * (std::complex<double>(0.0, 1.0) * ihat).real();
        chk.abs_error = std::abs(chk.quadrature - chk.symbolic);
        rep.numeric_checks.push_back(std::move(chk));
    }
    push_stage(rep, "numeric_checks", "ok", count_label(rep.numeric_checks.size(), "comparison"));
    return rep;
}

} // namespace saddleform
