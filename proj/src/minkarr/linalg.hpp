#pragma once

#include <vector>

#include "minkarr/scalar.hpp"

namespace minkarr {

using Vec = std::vector<Scalar>;
using DVec = std::vector<double>;

inline void require_dim(const Vec& x, std::size_t d, const char* what) {
    if (x.size() != d)
        throw InputError(std::string(what) + ": expected dimension " + std::to_string(d) +
                         ", got " + std::to_string(x.size()));
}

inline Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
    Scalar acc(0);
    for (std::size_t k = 0; k < a.size(); ++k) acc = acc + a[k] * b[k];
    return acc;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("sub: dimension mismatch");
    Vec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("add: dimension mismatch");
    Vec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

inline Vec scale(const Vec& a, const Scalar& s) {
    Vec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] * s;
    return r;
}

inline Vec neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
    return r;
}

inline bool is_zero(const Vec& a) {
    for (const Scalar& s : a)
        if (s.cmp(Scalar(0)) != 0) return false;
    return true;
}

inline bool all_exact(const Vec& a) {
    for (const Scalar& s : a)
        if (!s.exact()) return false;
    return true;
}

inline DVec to_dvec(const Vec& a) {
    DVec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k].to_double();
    return r;
}

inline Vec from_dvec(const DVec& a) {
    Vec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = Scalar(a[k]);
    return r;
}

inline Vec unit_vec(std::size_t dim, std::size_t axis, const Scalar& value = Scalar(1)) {
    Vec r(dim, Scalar(0));
    r[axis] = value;
    return r;
}

}  // namespace minkarr
