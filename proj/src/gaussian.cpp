#include "cr/gaussian.hpp"

namespace cr {

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// Canonical scalar form: "0", "a", "b*i", or "a+b*i" / "a-b*i", with each part
// an integer or p/q.  Reparseable by the expression grammar.
std::string Gaussian::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re != 0) out = rat_str(re);
    if (im != 0) {
        if (im == 1) {
            out += out.empty() ? "i" : "+i";
        } else if (im == -1) {
            out += "-i";
        } else {
            std::string ims = rat_str(im);
            if (!out.empty() && ims[0] != '-') out += "+";
            out += ims + "*i";
        }
    }
    return out;
}

}  // namespace cr
