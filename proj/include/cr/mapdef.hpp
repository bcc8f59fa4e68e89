#pragma once

#include <optional>

#include "cr/expr.hpp"
#include "cr/holomap.hpp"

namespace cr {

// Textual map description: key/value lines, '#' comments.
//   source: hyperquadric n=1 ell=0
//   target: winkelmann n=1 ell=1
//   mode: rational | series
//   order: 10
//   param: eps = 1/2
//   base_point: 0, 0, 0
//   component: w*(eps+z1) - i*z1
enum class MapMode { Rational, Series };

struct MapDef {
    ModelKind src_kind = ModelKind::Hyperquadric;
    int src_n = 1, src_ell = 0;
    ModelKind tgt_kind = ModelKind::Hyperquadric;
    int tgt_n = 1, tgt_ell = 0;
    MapMode mode = MapMode::Rational;
    int order = 8;
    ParamMap params;
    std::optional<std::vector<Gaussian>> base;  // z values, then real t
    std::vector<std::string> component_text;
    std::vector<ExprPtr> components;
};

MapDef parse_mapdef(const std::string& text);
MapDef load_mapdef(const std::string& path);

Hypersurface source_of(const MapDef& def);
Hypersurface target_of(const MapDef& def);
RationalMap materialize_rational(const MapDef& def);
SeriesMap materialize_series(const MapDef& def);
// declared base point, or the origin
SurfacePoint base_point(const MapDef& def, const Hypersurface& src);

}  // namespace cr
