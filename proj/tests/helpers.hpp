#pragma once

#include <gtest/gtest.h>

#include "entlab/entlab.hpp"

namespace testing_helpers {

using namespace entlab;

inline Vector random_product(int n, int d, Rng& rng) {
    std::vector<Vector> f;
    for (int k = 0; k < n; ++k) f.push_back(random_unit_vector(d, rng));
    return tensor_product(f);
}

inline double expect(const Operator& op, const Vector& v) { return v.dot(op.matrix() * v).real(); }

inline Matrix local_unitary(int n, int d, Rng& rng) {
    std::vector<Matrix> u;
    for (int k = 0; k < n; ++k) u.push_back(haar_unitary(d, rng));
    return tensor_product(u);
}

inline SeesawConfig cfg(std::uint64_t seed = 7, int restarts = 64) {
    SeesawConfig c;
    c.seed = seed;
    c.restarts = restarts;
    return c;
}

}  // namespace testing_helpers
