#include "cr/report.hpp"

#include <sstream>

#include "cr/ahlfors.hpp"
#include "cr/kahler.hpp"

namespace cr {

namespace {

using nlohmann::ordered_json;

std::string point_str(const SurfacePoint& p) {
    std::string out;
    for (const auto& z : p.z) {
        if (!out.empty()) out += ", ";
        out += z.str();
    }
    out += ", " + rat_str(p.t);
    return out;
}

SurfacePoint to_surface_point(const std::vector<Gaussian>& c, const Hypersurface& src) {
    int Hs = src.surf->holo_count();
    if ((int)c.size() != Hs + 1) {
        throw std::invalid_argument("point needs " + std::to_string(Hs) + " complex coordinates and t");
    }
    SurfacePoint p;
    p.z.assign(c.begin(), c.begin() + Hs);
    if (!c[Hs].is_real()) throw std::invalid_argument("point t coordinate must be real");
    p.t = c[Hs].re;
    return p;
}

}  // namespace

std::vector<std::vector<Gaussian>> parse_points_file(const std::string& text, const ParamMap& params) {
    std::vector<std::vector<Gaussian>> out;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        bool blank = raw.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) continue;
        std::vector<Gaussian> coords;
        std::istringstream ls(raw);
        std::string item;
        while (std::getline(ls, item, ',')) {
            try {
                coords.push_back(eval_constant(parse_expression(item), params));
            } catch (const ParseError& e) {
                throw ParseError(line, e.col, e.msg);
            }
        }
        out.push_back(std::move(coords));
    }
    return out;
}

PipelineOutcome run_pipeline(const MapDef& def, const PipelineOptions& opt) {
    PipelineOutcome out;
    ordered_json& rep = out.report;
    std::vector<std::string> failures;

    MapDef d = def;
    if (opt.order_override > 0) d.order = opt.order_override;

    Hypersurface src = source_of(d);
    rep["source"] = src.str();
    rep["target"] = target_of(d).str();
    rep["mode"] = d.mode == MapMode::Rational ? "rational" : "series";
    rep["components"] = d.component_text;

    if (d.mode == MapMode::Series) {
        if (opt.ahlfors || opt.rank || opt.isometry) {
            throw std::invalid_argument("ahlfors/rank/isometry stages need mode: rational");
        }
        SeriesMap H = materialize_series(d);
        SeriesCheck chk = check_maps_into(H);
        ordered_json jc;
        jc["maps_into_to_order"] = chk.remainder_order;
        jc["maps_into"] = chk.maps_into;
        if (chk.maps_into) {
            jc["factor"] = chk.factor.str();
            jc["factor_order"] = chk.factor_order;
            jc["side"] = side_str(chk.side);
        }
        rep["check"] = jc;
        if (!chk.maps_into) failures.push_back("map does not send the source into the target (through order " + std::to_string(chk.remainder_order) + ")");
        rep["status"] = failures.empty() ? "pass" : "fail";
        if (!failures.empty()) rep["failures"] = failures;
        out.exit_code = failures.empty() ? 0 : 1;
        return out;
    }

    RationalMap H = materialize_rational(d);
    SurfacePoint base = base_point(d, H.src);
    MapCheck chk = check_maps_into(H, base);

    ordered_json jc;
    jc["maps_into"] = chk.maps_into;
    if (chk.maps_into) {
        jc["factor"] = chk.factor.str();
        jc["side"] = side_str(chk.side);
        jc["base_point"] = point_str(base);
        if (chk.base_ok) jc["factor_at_base"] = chk.factor_at_base.str();
    }
    rep["check"] = jc;
    if (!chk.maps_into) {
        failures.push_back("map does not send the source into the target");
        rep["status"] = "fail";
        rep["failures"] = failures;
        out.exit_code = 1;
        return out;
    }

    bool degenerate = chk.side == SideClass::Degenerate;
    if (degenerate && (opt.ahlfors || opt.rank || opt.isometry)) {
        failures.push_back("degenerate map: requested stages are undefined");
    }

    std::vector<SurfacePoint> pts;
    for (const auto& c : opt.extra_points) pts.push_back(to_surface_point(c, src));

    if ((opt.ahlfors || opt.rank) && !degenerate) {
        int sign = chk.side == SideClass::Reversing ? -1 : 1;
        Matrix<RatFn> A = ahlfors_via_logQ(H.src, chk.factor, sign);
        if (opt.ahlfors) {
            ordered_json ja;
            ja["size"] = (int)A.size();
            std::vector<std::vector<std::string>> entries;
            for (const auto& row : A) {
                std::vector<std::string> r;
                for (const auto& f : row) r.push_back(f.str());
                entries.push_back(std::move(r));
            }
            ja["entries"] = entries;
            bool herm = true;
            for (size_t a = 0; a < A.size() && herm; ++a) {
                for (size_t b = 0; b < A.size(); ++b) {
                    if (A[a][b] != A[b][a].conj()) {
                        herm = false;
                        break;
                    }
                }
            }
            ja["hermitian"] = herm;
            if (H.tgt.kind == ModelKind::Hyperquadric) {
                // the two routes produce different ambient representatives in
                // general; they must coincide as functions on the surface
                Matrix<RatFn> E = ahlfors_explicit_hyperquadric(H, chk);
                bool agree = true;
                for (size_t a = 0; a < A.size() && agree; ++a) {
                    for (size_t b = 0; b < A.size(); ++b) {
                        if (!restrict_to_surface(H.src, A[a][b] - E[a][b]).is_zero()) {
                            agree = false;
                            break;
                        }
                    }
                }
                ja["cross_check"] = agree ? "agree" : "disagree";
                if (!agree) failures.push_back("tensor cross-check failed between the two formulas");
            }
            rep["ahlfors"] = ja;
        }
        if (opt.rank) {
            std::mt19937_64 rng(opt.seed);
            std::vector<SurfacePoint> sampled = sample_points(H.src, A, opt.sample_count, rng);
            sampled.insert(sampled.end(), pts.begin(), pts.end());
            RankReport rr = rank_report(H.src, A, sampled);
            ordered_json jr;
            jr["zero"] = rr.zero;
            jr["generic_rank"] = rr.generic_rank;
            ordered_json samples = ordered_json::array();
            for (size_t k = 0; k < rr.samples.size(); ++k) {
                ordered_json s;
                s["point"] = point_str(rr.samples[k]);
                s["rank"] = rr.sample_ranks[k];
                samples.push_back(s);
            }
            jr["samples"] = samples;
            rep["rank"] = jr;
        }
    }

    if (opt.isometry && !degenerate) {
        IsometryResult iso = isometry_check(H.src, chk.factor);
        ordered_json ji;
        ji["isometry"] = iso.isometry;
        if (!iso.isometry) {
            ji["witness"] = iso.witness;
            failures.push_back("map is not an isometry of the side metrics");
        }
        rep["isometry"] = ji;
    }

    rep["status"] = failures.empty() ? "pass" : "fail";
    if (!failures.empty()) rep["failures"] = failures;
    out.exit_code = failures.empty() ? 0 : 1;
    return out;
}

}  // namespace cr
