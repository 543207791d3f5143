#pragma once

#include <optional>
#include <vector>

#include "minkarr/linalg.hpp"
#include "minkarr/scalar.hpp"

namespace minkarr {

struct LinearFunctional {
    Vec coeffs;

    Scalar operator()(const Vec& x) const { return dot(coeffs, x); }
    std::size_t dim() const { return coeffs.size(); }
};

enum class BodyKind { HPolytope, PBall };

// Exponent of a p-ball: 1, 2, inf, or a general real p > 1.
struct PExponent {
    enum class Tag { One, Two, Inf, General } tag = Tag::Inf;
    double value = 0.0;  // only for General

    static PExponent one() { return {Tag::One, 1.0}; }
    static PExponent two() { return {Tag::Two, 2.0}; }
    static PExponent inf() { return {Tag::Inf, 0.0}; }
    static PExponent general(double p);
};

// An o-symmetric convex body K with closed-form gauge and supporting
// functionals. HPolytope: K = {x : |<a_r, x>| <= 1 for all r}, so the gauge
// is max_r |<a_r, x>|. PBall: the unit p-ball, gauge = p-norm.
class SymmetricBody {
public:
    static SymmetricBody hpolytope(int dim, std::vector<Vec> normals);
    static SymmetricBody pball(int dim, PExponent p);
    // [-1,1]^d, i.e. the p = inf ball.
    static SymmetricBody cube(int dim) { return pball(dim, PExponent::inf()); }
    static SymmetricBody cross_polytope(int dim) { return pball(dim, PExponent::one()); }

    int dim() const { return dim_; }
    BodyKind kind() const { return kind_; }
    const std::vector<Vec>& normals() const { return normals_; }
    PExponent p() const { return p_; }

    // True when the gauge of rational input is itself rational (HPolytope,
    // p = 1, p = inf). Rational-mode runs require this.
    bool rational_exact() const;

    // Gauge ||x||_K = min{t >= 0 : x in tK}.
    Scalar norm(const Vec& x) const;

    // phi with phi(x) <= ||x||_K everywhere and phi(u) = ||u||_K.
    // Ties break toward the smallest facet/coordinate index.
    LinearFunctional supporting_functional(const Vec& u) const;

    // Is `point` in ratio*K + center? Strict tests interior membership.
    bool contains(const Vec& center, const Scalar& ratio, const Vec& point, bool strict,
                  Tol tol) const;

    // Support function h_K(u) = max_{x in K} <u, x>.
    Scalar support(const Vec& u) const;

    // max{x_k : x in K} per coordinate; bounding box is the product of
    // [-extent_k, extent_k].
    Vec coordinate_extents() const;

    // If K is an axis-aligned box, its per-axis half-widths.
    std::optional<Vec> axis_box_halfwidths() const;

    // vol_d(K). Exact for axis boxes; closed form (float) for p-balls;
    // Monte Carlo estimate for general H-polytopes.
    Scalar volume(std::uint64_t mc_samples = 200000, std::uint64_t seed = 1) const;

private:
    SymmetricBody() = default;
    void validate() const;

    int dim_ = 0;
    BodyKind kind_ = BodyKind::PBall;
    std::vector<Vec> normals_;  // HPolytope only
    PExponent p_;               // PBall only
};

}  // namespace minkarr
