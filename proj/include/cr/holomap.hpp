#pragma once

#include "cr/hypersurface.hpp"
#include "cr/series.hpp"

namespace cr {

enum class SideClass { Preserving, Reversing, Degenerate, Undetermined };
std::string side_str(SideClass s);

// Holomorphic map between model ambients; components live in the source
// ambient space and may only involve its holomorphic variables.
struct RationalMap {
    Hypersurface src, tgt;
    std::vector<RatFn> comp;
};

struct MapCheck {
    bool maps_into = false;
    // rho_tgt(H, conj H) = factor * rho_src as an ambient identity
    RatFn factor;
    SideClass side = SideClass::Undetermined;
    bool base_ok = false;         // factor evaluated cleanly at the base point
    Gaussian factor_at_base;

    explicit MapCheck(const SpacePtr& sp) : factor(RatFn(sp)) {}
};

// Images of every target-ambient variable (bars get conjugated components).
std::vector<RatFn> pullback_images(const RationalMap& H);
// g written in target-ambient variables, pulled back through H.
RatFn pullback(const RationalMap& H, const Poly& g);
RatFn pullback(const RationalMap& H, const RatFn& g);

MapCheck check_maps_into(const RationalMap& H, const SurfacePoint& base);
MapCheck check_maps_into(const RationalMap& H);  // base point: origin

// True when the side factor is finite and nonzero at p.
bool transversal_at(const RationalMap& H, const MapCheck& chk, const SurfacePoint& p);

// outer(inner(.)): inner.tgt must match outer.src structurally.
RationalMap compose(const RationalMap& inner, const RationalMap& outer);

// Truncated variant for maps with convergent-series components.
struct SeriesMap {
    Hypersurface src, tgt;
    std::vector<TruncSeries> comp;
    int order = 0;
};

struct SeriesCheck {
    bool maps_into = false;  // through remainder_order
    int remainder_order = 0;
    int factor_order = 0;
    TruncSeries factor;
    SideClass side = SideClass::Undetermined;

    SeriesCheck(const SpacePtr& sp, int ord) : factor(TruncSeries(Poly(sp), ord)) {}
};

SeriesCheck check_maps_into(const SeriesMap& H);

}  // namespace cr
