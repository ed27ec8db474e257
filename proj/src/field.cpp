#include "sllg/field.hpp"

#include <cmath>

namespace sllg {

VectorField3 project_to_sphere(const VectorField3& u) {
    VectorField3 out(u.grid());
    const std::size_t m = out.c[0].v.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double a = u.c[0].v[i], b = u.c[1].v[i], c = u.c[2].v[i];
        const double r = std::sqrt(a * a + b * b + c * c);
        out.c[0].v[i] = a / r;
        out.c[1].v[i] = b / r;
        out.c[2].v[i] = c / r;
    }
    return out;
}

double l2_norm(const VectorField3& u) {
    double s = 0.0;
    const std::size_t m = u.c[0].v.size();
    for (std::size_t i = 0; i < m; ++i)
        s += u.c[0].v[i] * u.c[0].v[i] + u.c[1].v[i] * u.c[1].v[i] + u.c[2].v[i] * u.c[2].v[i];
    return std::sqrt(s * u.grid().cell_area());
}

double l2_dist_sq(const VectorField3& a, const VectorField3& b) {
    double s = 0.0;
    const std::size_t m = a.c[0].v.size();
    for (std::size_t i = 0; i < m; ++i)
        for (int k = 0; k < 3; ++k) {
            const double d = a.c[k].v[i] - b.c[k].v[i];
            s += d * d;
        }
    return s * a.grid().cell_area();
}

}  // namespace sllg
