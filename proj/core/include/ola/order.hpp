#pragma once

#include <vector>

#include "ola/weight.hpp"

namespace ola {

/// Witness chain for an order relation. Steps go upward from `start`;
/// fin steps preserve degree, gamma steps raise it by their k.
struct OrderCertStep {
    bool gamma_step = false;
    long long k = 0;  // meaningful only when gamma_step
    Weight to;
};

struct OrderCert {
    Weight start;
    std::vector<OrderCertStep> steps;
    OrderCert() : start(LieFlavor::SL) {}
};

/// mu <=_fin lam: equal, or lam - mu is a nonnegative integer combination
/// of simple finite roots and per chain the multisets {lam_i + rho_i} and
/// {mu_i + rho_i} over the joint support window coincide. Non-integral
/// differences compare false.
bool leq_fin(const Weight& mu, const Weight& lam);

/// The finite up-set {lam : mu <=_fin lam}, sorted. Complete: per chain
/// any lam above mu is supported in [1..B] with
/// B = max(W, max_{j<=W}(j - mu_j)), W = max support index of mu.
std::vector<Weight> fin_up_set(const Weight& mu);

/// mu <=_inf lam: reflexive-transitive closure of "mu <=_fin nu or
/// mu = nu + gamma with c_coeff(k,gamma) > 0 for some k >= 1". BFS upward
/// from mu; gamma-steps are enumerated inside a support envelope widened
/// by `widen` (used by tests to confirm window stability). max_depth
/// bounds gamma-steps; -1 means the degree gap, which is always enough.
bool leq_inf(const Weight& mu, const Weight& lam, long long max_depth = -1,
             OrderCert* cert = nullptr, int widen = 0);

/// {kappa : mu <=_inf kappa <=_inf lam}, sorted; empty when incomparable.
std::vector<Weight> inf_interval(const Weight& mu, const Weight& lam,
                                 int widen = 0);

}  // namespace ola
