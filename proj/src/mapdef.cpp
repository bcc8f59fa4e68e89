#include "cr/mapdef.hpp"

#include <fstream>
#include <sstream>

namespace cr {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// "hyperquadric n=1 ell=0"
void parse_model(const std::string& value, int line, ModelKind& kind, int& n, int& ell) {
    std::istringstream in(value);
    std::string name, np, lp;
    in >> name >> np >> lp;
    if (name == "hyperquadric") {
        kind = ModelKind::Hyperquadric;
    } else if (name == "winkelmann") {
        kind = ModelKind::Winkelmann;
    } else {
        throw ParseError(line, 1, "unknown model '" + name + "' (expected hyperquadric or winkelmann)");
    }
    auto read_kv = [&](const std::string& kv, const char* key) {
        std::string prefix = std::string(key) + "=";
        if (kv.rfind(prefix, 0) != 0) throw ParseError(line, 1, "expected " + prefix + "<int> in model description");
        try {
            return std::stoi(kv.substr(prefix.size()));
        } catch (...) {
            throw ParseError(line, 1, "bad integer in '" + kv + "'");
        }
    };
    n = read_kv(np, "n");
    ell = read_kv(lp, "ell");
    std::string extra;
    if (in >> extra) throw ParseError(line, 1, "unexpected '" + extra + "' after model description");
}

ExprPtr parse_value(const std::string& value, int line, int col0) {
    try {
        return parse_expression(value);
    } catch (const ParseError& e) {
        throw ParseError(line, e.line == 1 ? col0 + e.col - 1 : e.col, e.msg);
    }
}

}  // namespace

MapDef parse_mapdef(const std::string& text) {
    MapDef def;
    bool saw_src = false, saw_tgt = false, saw_order = false;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::vector<std::pair<int, std::string>> base_raw;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        size_t colon = s.find(':');
        if (colon == std::string::npos) throw ParseError(line, 1, "expected 'key: value'");
        std::string key = trim(s.substr(0, colon));
        std::string value = trim(s.substr(colon + 1));
        int col0 = (int)(raw.find(value.empty() ? ":" : value) + 1);
        if (value.empty()) throw ParseError(line, col0, "missing value for '" + key + "'");

        if (key == "source") {
            parse_model(value, line, def.src_kind, def.src_n, def.src_ell);
            saw_src = true;
        } else if (key == "target") {
            parse_model(value, line, def.tgt_kind, def.tgt_n, def.tgt_ell);
            saw_tgt = true;
        } else if (key == "mode") {
            if (value == "rational") {
                def.mode = MapMode::Rational;
            } else if (value == "series") {
                def.mode = MapMode::Series;
            } else {
                throw ParseError(line, col0, "mode must be rational or series");
            }
        } else if (key == "order") {
            try {
                def.order = std::stoi(value);
            } catch (...) {
                throw ParseError(line, col0, "order must be an integer");
            }
            if (def.order < 2 || def.order > 64) throw ParseError(line, col0, "order must lie in 2..64");
            saw_order = true;
        } else if (key == "param") {
            size_t eq = value.find('=');
            if (eq == std::string::npos) throw ParseError(line, col0, "param needs 'name = value'");
            std::string pname = trim(value.substr(0, eq));
            std::string pval = trim(value.substr(eq + 1));
            if (pname.empty() || pval.empty()) throw ParseError(line, col0, "param needs 'name = value'");
            int pcol = (int)(raw.find(pval, raw.find('=', colon + 1)) + 1);
            Gaussian g;
            try {
                g = eval_constant(parse_value(pval, line, pcol), def.params);
            } catch (const std::runtime_error& e) {
                throw ParseError(line, pcol, e.what());
            }
            def.params[pname] = g;
        } else if (key == "base_point") {
            base_raw.emplace_back(line, value);
        } else if (key == "component") {
            def.component_text.push_back(value);
            def.components.push_back(parse_value(value, line, col0));
        } else {
            throw ParseError(line, 1, "unknown key '" + key + "'");
        }
    }
    if (!saw_src) throw ParseError(line, 1, "missing 'source:' line");
    if (!saw_tgt) throw ParseError(line, 1, "missing 'target:' line");
    if (def.components.empty()) throw ParseError(line, 1, "missing 'component:' lines");
    if (def.mode == MapMode::Rational && saw_order) {
        // harmless, but order only matters for series mode
    }

    if (!base_raw.empty()) {
        if (base_raw.size() > 1) throw ParseError(base_raw[1].first, 1, "duplicate base_point");
        auto [bline, bval] = base_raw[0];
        std::vector<Gaussian> coords;
        std::string item;
        std::istringstream bs(bval);
        while (std::getline(bs, item, ',')) {
            std::string it = trim(item);
            if (it.empty()) throw ParseError(bline, 1, "empty coordinate in base_point");
            coords.push_back(eval_constant(parse_value(it, bline, 1), def.params));
        }
        def.base = std::move(coords);
    }
    return def;
}

MapDef load_mapdef(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_mapdef(ss.str());
}

Hypersurface source_of(const MapDef& def) { return make_hypersurface(def.src_kind, def.src_n, def.src_ell); }
Hypersurface target_of(const MapDef& def) { return make_hypersurface(def.tgt_kind, def.tgt_n, def.tgt_ell); }

RationalMap materialize_rational(const MapDef& def) {
    if (def.mode != MapMode::Rational) throw std::invalid_argument("map is declared with mode: series");
    RationalMap H{source_of(def), target_of(def), {}};
    int want = H.tgt.amb->holo_count();
    if ((int)def.components.size() != want) {
        throw std::invalid_argument("target needs " + std::to_string(want) + " components, got " +
                                    std::to_string(def.components.size()));
    }
    for (const auto& e : def.components) H.comp.push_back(eval_ratfn(e, H.src.amb, def.params));
    return H;
}

SeriesMap materialize_series(const MapDef& def) {
    SeriesMap H{source_of(def), target_of(def), {}, def.order};
    int want = H.tgt.amb->holo_count();
    if ((int)def.components.size() != want) {
        throw std::invalid_argument("target needs " + std::to_string(want) + " components, got " +
                                    std::to_string(def.components.size()));
    }
    for (const auto& e : def.components) H.comp.push_back(eval_series(e, H.src.amb, def.params, def.order));
    return H;
}

SurfacePoint base_point(const MapDef& def, const Hypersurface& src) {
    SurfacePoint p;
    int Hs = src.surf->holo_count();
    if (!def.base) {
        p.z.assign(Hs, Gaussian::zero());
        return p;
    }
    const auto& c = *def.base;
    if ((int)c.size() != Hs && (int)c.size() != Hs + 1) {
        throw std::invalid_argument("base_point needs " + std::to_string(Hs) + " complex coordinates plus optional t");
    }
    p.z.assign(c.begin(), c.begin() + Hs);
    if ((int)c.size() == Hs + 1) {
        if (!c[Hs].is_real()) throw std::invalid_argument("base_point t coordinate must be real");
        p.t = c[Hs].re;
    }
    return p;
}

}  // namespace cr
