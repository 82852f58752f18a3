#pragma once

// Deterministic random exact operators and polynomials for the algebraic
// property suites.

#include <random>

#include "hermops/poly.hpp"
#include "hermops/weyl.hpp"

namespace hermops::testing {

struct Gen {
    std::mt19937 rng;
    explicit Gen(unsigned seed) : rng(seed) {}

    Scalar coeff() {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        int p = num(rng);
        return Scalar::rational(p == 0 ? 1 : p, den(rng));
    }

    WeylOp op(int nvars, int max_order, int max_terms = 3) {
        std::uniform_int_distribution<int> nterms(1, max_terms);
        std::uniform_int_distribution<int> part(0, max_order);
        WeylOp r(nvars);
        int k = nterms(rng);
        for (int t = 0; t < k; ++t) {
            int budget = max_order;
            WeylKey key;
            key.xp = part(rng) % (budget + 1);
            budget -= key.xp;
            key.dx = budget > 0 ? part(rng) % (budget + 1) : 0;
            budget -= key.dx;
            if (nvars == 2) {
                key.yp = budget > 0 ? part(rng) % (budget + 1) : 0;
                budget -= key.yp;
                key.dy = budget > 0 ? part(rng) % (budget + 1) : 0;
            }
            r.add_term(key, coeff());
        }
        return r;
    }

    Poly poly(int nvars, int max_degree, int max_terms = 4) {
        std::uniform_int_distribution<int> nterms(1, max_terms);
        std::uniform_int_distribution<int> deg(0, max_degree);
        Poly p(nvars);
        int k = nterms(rng);
        for (int t = 0; t < k; ++t) {
            int xd = deg(rng);
            int yd = nvars == 2 ? deg(rng) % (max_degree - xd + 1) : 0;
            p.add_term(xd, yd, coeff());
        }
        return p;
    }
};

}  // namespace hermops::testing
