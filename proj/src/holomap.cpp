#include "cr/holomap.hpp"

#include <stdexcept>

namespace cr {

std::string side_str(SideClass s) {
    switch (s) {
        case SideClass::Preserving: return "preserving";
        case SideClass::Reversing: return "reversing";
        case SideClass::Degenerate: return "degenerate";
        default: return "undetermined";
    }
}

namespace {

void require_holomorphic(const RatFn& f) {
    const SpacePtr& sp = f.space();
    for (int v = sp->holo_count(); v < sp->total(); ++v) {
        if (f.num().depends_on(v) || f.den().depends_on(v)) {
            throw std::invalid_argument("map component depends on " + sp->name(v) + "; components must be holomorphic");
        }
    }
}

void validate(const RationalMap& H) {
    int want = H.tgt.amb->holo_count();
    if ((int)H.comp.size() != want) {
        throw std::invalid_argument("map needs " + std::to_string(want) + " components, got " + std::to_string(H.comp.size()));
    }
    for (const auto& c : H.comp) {
        if (!compatible(c.space(), H.src.amb)) throw std::invalid_argument("component not in the source ambient space");
        require_holomorphic(c);
    }
}

}  // namespace

std::vector<RatFn> pullback_images(const RationalMap& H) {
    int Ht = H.tgt.amb->holo_count();
    std::vector<RatFn> images;
    images.reserve(2 * Ht);
    for (int j = 0; j < Ht; ++j) images.push_back(H.comp[j]);
    for (int j = 0; j < Ht; ++j) images.push_back(H.comp[j].conj());
    return images;
}

RatFn pullback(const RationalMap& H, const Poly& g) {
    validate(H);
    return subst_ratfn(g, H.src.amb, pullback_images(H));
}

RatFn pullback(const RationalMap& H, const RatFn& g) {
    validate(H);
    return subst_ratfn(g, H.src.amb, pullback_images(H));
}

MapCheck check_maps_into(const RationalMap& H, const SurfacePoint& base) {
    validate(H);
    MapCheck out(H.src.amb);
    RatFn P = pullback(H, H.tgt.rho);
    if (restrict_to_surface(H.src, Poly(P.den())).is_zero()) {
        throw std::domain_error("map undefined along the source hypersurface");
    }

    int wbar = H.src.amb->bar(H.src.w_id());
    auto [q, r] = divide_linear(P.num(), H.src.rho, wbar);
    out.maps_into = r.is_zero();
    if (!out.maps_into) return out;

    out.factor = RatFn(q, P.den());
    if (out.factor.is_zero()) {
        out.side = SideClass::Degenerate;
        return out;
    }
    auto val = out.factor.eval(lift_point(H.src, base));
    if (!val) return out;  // pole at the base point: side left undetermined
    if (!val->is_real()) throw std::logic_error("side factor evaluated non-real on the surface");
    out.base_ok = true;
    out.factor_at_base = *val;
    if (val->re > 0) {
        out.side = SideClass::Preserving;
    } else if (val->re < 0) {
        out.side = SideClass::Reversing;
    }
    return out;
}

MapCheck check_maps_into(const RationalMap& H) {
    SurfacePoint origin;
    origin.z.assign(H.src.surf->holo_count(), Gaussian::zero());
    return check_maps_into(H, origin);
}

bool transversal_at(const RationalMap& H, const MapCheck& chk, const SurfacePoint& p) {
    if (!chk.maps_into) throw std::logic_error("transversality asked for a map that does not map into the target");
    auto val = chk.factor.eval(lift_point(H.src, p));
    if (!val) throw std::domain_error("side factor has a pole at the sample point");
    return !val->is_zero();
}

RationalMap compose(const RationalMap& inner, const RationalMap& outer) {
    validate(inner);
    validate(outer);
    if (inner.tgt.kind != outer.src.kind || inner.tgt.n != outer.src.n || inner.tgt.ell != outer.src.ell) {
        throw std::invalid_argument("composition mismatch: " + inner.tgt.str() + " vs " + outer.src.str());
    }
    std::vector<RatFn> images = pullback_images(inner);
    RationalMap out{inner.src, outer.tgt, {}};
    out.comp.reserve(outer.comp.size());
    for (const auto& c : outer.comp) out.comp.push_back(subst_ratfn(c, inner.src.amb, images));
    return out;
}

SeriesCheck check_maps_into(const SeriesMap& H) {
    int want = H.tgt.amb->holo_count();
    if ((int)H.comp.size() != want) {
        throw std::invalid_argument("map needs " + std::to_string(want) + " components, got " + std::to_string(H.comp.size()));
    }
    const SpacePtr& sp = H.src.amb;
    for (const auto& c : H.comp) {
        if (!compatible(c.space(), sp)) throw std::invalid_argument("component not in the source ambient space");
        for (int v = sp->holo_count(); v < sp->total(); ++v) {
            if (c.poly().depends_on(v)) {
                throw std::invalid_argument("map component depends on " + sp->name(v) + "; components must be holomorphic");
            }
        }
    }

    int K = H.order;
    std::vector<TruncSeries> images;
    images.reserve(2 * want);
    for (const auto& c : H.comp) images.push_back(c);
    for (const auto& c : H.comp) images.push_back(c.conj());
    TruncSeries P = series_lift(H.tgt.rho, sp, images, K);

    SeriesCheck out(sp, K);
    int wbar = sp->bar(H.src.w_id());
    auto [q, r] = divide_linear(P.poly(), H.src.rho, wbar);
    out.remainder_order = K;
    out.factor_order = K - 2;
    out.maps_into = r.truncate_weighted(K).is_zero();
    out.factor = TruncSeries(q, K - 2);
    if (!out.maps_into) return out;
    Gaussian c0 = out.factor.poly().constant_term();
    if (out.factor.is_zero()) {
        out.side = SideClass::Degenerate;
    } else if (!c0.is_real()) {
        throw std::logic_error("side factor evaluated non-real at the base point");
    } else if (c0.re > 0) {
        out.side = SideClass::Preserving;
    } else if (c0.re < 0) {
        out.side = SideClass::Reversing;
    }
    return out;
}

}  // namespace cr
