#include "cr/varspace.hpp"

namespace cr {

VariableSpace::VariableSpace(std::vector<std::string> holo_names, std::vector<int> holo_weights,
                             std::vector<std::string> real_names, std::vector<int> real_weights) {
    if (holo_names.size() != holo_weights.size() || real_names.size() != real_weights.size())
        throw std::invalid_argument("variable/weight count mismatch");
    holo_ = static_cast<int>(holo_names.size());
    names_ = holo_names;
    for (const auto& n : holo_names) names_.push_back(n + "_b");
    for (const auto& n : real_names) names_.push_back(n);
    weights_ = holo_weights;
    weights_.insert(weights_.end(), holo_weights.begin(), holo_weights.end());
    weights_.insert(weights_.end(), real_weights.begin(), real_weights.end());
}

int VariableSpace::find(const std::string& name) const {
    for (int v = 0; v < total(); ++v)
        if (names_[v] == name) return v;
    return -1;
}

static std::vector<std::string> z_names(int n_z, bool with_zeta, bool with_w) {
    std::vector<std::string> names;
    for (int k = 1; k <= n_z; ++k) names.push_back("z" + std::to_string(k));
    if (with_zeta) names.push_back("zeta");
    if (with_w) names.push_back("w");
    return names;
}

static std::vector<int> z_weights(int n_z, bool with_zeta, bool with_w) {
    std::vector<int> w(n_z, 1);
    if (with_zeta) w.push_back(2);
    if (with_w) w.push_back(2);
    return w;
}

SpacePtr make_ambient_space(int n_z, bool with_zeta) {
    return std::make_shared<VariableSpace>(z_names(n_z, with_zeta, true),
                                           z_weights(n_z, with_zeta, true));
}

SpacePtr make_surface_space(int n_z, bool with_zeta) {
    return std::make_shared<VariableSpace>(z_names(n_z, with_zeta, false),
                                           z_weights(n_z, with_zeta, false),
                                           std::vector<std::string>{"t"}, std::vector<int>{2});
}

SpacePtr make_model_space(int n_z) {
    return std::make_shared<VariableSpace>(z_names(n_z, true, false),
                                           z_weights(n_z, true, false),
                                           std::vector<std::string>{"t"}, std::vector<int>{2});
}

SpacePtr make_scalar_space() {
    static SpacePtr sp = std::make_shared<VariableSpace>(std::vector<std::string>{}, std::vector<int>{});
    return sp;
}

}  // namespace cr
