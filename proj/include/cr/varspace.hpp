#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cr {

// Coordinate system closed under conjugation.  Layout: holomorphic variables
// first (ids 0..H-1), their antiholomorphic partners next (ids H..2H-1, the
// partner of v is v+H), then real variables, each its own partner.
class VariableSpace {
  public:
    VariableSpace(std::vector<std::string> holo_names, std::vector<int> holo_weights,
                  std::vector<std::string> real_names = {}, std::vector<int> real_weights = {});

    int total() const { return static_cast<int>(names_.size()); }
    int holo_count() const { return holo_; }
    int real_count() const { return total() - 2 * holo_; }

    bool is_holo(int v) const { return v < holo_; }
    bool is_bar(int v) const { return v >= holo_ && v < 2 * holo_; }
    bool is_real(int v) const { return v >= 2 * holo_; }
    int bar(int v) const { return v + holo_; }  // partner of a holomorphic id
    int partner(int v) const {
        if (is_holo(v)) return v + holo_;
        if (is_bar(v)) return v - holo_;
        return v;
    }

    const std::string& name(int v) const { return names_[v]; }
    int weight(int v) const { return weights_[v]; }
    // -1 if absent
    int find(const std::string& name) const;

    bool same_structure(const VariableSpace& o) const {
        return holo_ == o.holo_ && names_ == o.names_ && weights_ == o.weights_;
    }

  private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
    int holo_;
};

using SpacePtr = std::shared_ptr<const VariableSpace>;

inline bool compatible(const SpacePtr& a, const SpacePtr& b) {
    return a == b || (a && b && a->same_structure(*b));
}

// Ambient space of a model hypersurface: z1..zn [, zeta], w; bars implicit.
SpacePtr make_ambient_space(int n_z, bool with_zeta);
// Same plus a real variable t replacing nothing; used for surface restrictions.
SpacePtr make_surface_space(int n_z, bool with_zeta);
// Mobius model space: z1..zn', zeta, real t (no w).
SpacePtr make_model_space(int n_z);
// Variable-free space for scalar expression evaluation.
SpacePtr make_scalar_space();

}  // namespace cr
