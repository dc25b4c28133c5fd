#pragma once

#include <vector>

#include "minact/group.hpp"
#include "minact/modular.hpp"

namespace minact {

/// Coefficient data for the action of Z_q on H^*(Z_p; Z_p(eps)): k is the
/// multiplier of order q mod p and eps records whether the distinguished
/// generator acts on the coefficient line as +1 or -1 (the latter requires
/// q even).
struct TwistedModuleSpec {
    long long p = 3;
    long long q = 2;
    Residue k;
    int eps = 1;
};

TwistedModuleSpec twisted_module_spec(long long p, long long q, int eps);

/// Scalar by which the twisted generator action multiplies the
/// one-dimensional space in degree i: eps * k^a for i = 2a, and
/// eps * k^(a+1) for i = 2a+1.
Residue sigma_scalar(long long i, const TwistedModuleSpec& spec);

/// dim of the invariants in degree i: 1 iff sigma_scalar(i) = 1 (mod p).
int invariant_dim(long long i, const TwistedModuleSpec& spec);

/// eps=+1: 1 iff i = 0 or 2q-1 (mod 2q); eps=-1: 1 iff i = q or q-1 (mod 2q).
int invariant_pattern_closed_form(long long i, long long q, int eps);

/// Degree -> dimension function backed by the scalar evaluation.
struct InvariantPattern {
    TwistedModuleSpec spec;
    int operator()(long long i) const { return invariant_dim(i, spec); }
};

/// G-module over Z_p given by one matrix per group generator.
struct ModuleRep {
    long long p = 2;
    int dim = 0;
    std::vector<std::vector<std::vector<long long>>> generator_matrices;
};

ModuleRep trivial_module(long long p, int dim);
/// One-dimensional module where generator i acts by the given scalar.
ModuleRep scalar_module(long long p, const std::vector<long long>& scalars);
/// Permutation module: generator i permutes the basis by gen_images[i].
ModuleRep permutation_module(long long p, const std::vector<Permutation>& gen_images);
/// The line Z_p(eps) over metacyclic(p, q): x acts trivially, y by eps.
ModuleRep twisted_line(const TwistedModuleSpec& spec);

constexpr long long kDefaultBarBudget = 500000;

/// dim_k H^i(G; M) from the normalized bar cochain complex, by exact rank
/// computation over Z_p. Throws ResourceLimit when |G|^(i+1) * dim M
/// exceeds the budget.
long long bar_cohomology_dim(const FiniteGroup& G, const ModuleRep& M, int i,
                             long long budget = kDefaultBarBudget);

/// All of H^0..H^i_max in one pass (each coboundary rank computed once).
std::vector<long long> bar_cohomology_dims(const FiniteGroup& G, const ModuleRep& M,
                                           int i_max,
                                           long long budget = kDefaultBarBudget);

/// True iff H^i(metacyclic(p,q); Z_p[G/Z_q]) = 0 for 1 <= i <= i_max,
/// with the permutation module on the q-element-subgroup cosets.
bool shapiro_vanishing_check(long long p, long long q, int i_max,
                             long long budget = kDefaultBarBudget);

} // namespace minact
