#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "orbitgr/coxeter.hpp"
#include "orbitgr/kl.hpp"
#include "orbitgr/orbits.hpp"

/// Brute-force reference computations. Each one recomputes a quantity from its
/// definition, sharing no code path with the corresponding fast implementation.
namespace orbitgr::oracle {

/// Dominance maximum of all partitions of the same size with the family's parity
/// that lie below p. Throws std::logic_error if the maximum is not unique.
Partition collapse(const Partition& p, Family f);

/// P_{x,w} for all pairs, table[w][x], from the bar involution of the Hecke algebra:
/// bar(T_w) = T_{w^{-1}}^{-1} is expanded in the T-basis to get R_{x,w}, and then
/// q^{l(w)-l(x)} P_{x,w}(1/q) - P_{x,w}(q) = sum_{x<y<=w} R_{x,y} P_{y,w} is solved
/// degree by degree.
std::vector<std::vector<KLPolynomial>> kl_bar_involution(const WeylGroup& g);

/// leq[x][w] for the transitive closure of x < xt (t a reflection, l(xt) = l(x) + 1).
std::vector<std::vector<char>> bruhat_reflection_closure(const WeylGroup& g);

/// Number of PBW monomials f_1^{n_1} ... f_k^{n_k} of each weight sum n_i mu_i, over
/// all exponent vectors with theta-depth -<theta, sum n_i mu_i> <= depth.
std::map<std::vector<int>, std::int64_t> pbw_monomial_count(const std::vector<std::vector<int>>& weights,
                                                             const std::vector<int>& theta, int depth);

/// Component group order from F2 linear algebra on the orthogonal factors of the
/// reductive centralizer: the determinant condition cuts out a subspace and the
/// image of the centre is factored out. Type A counts roots of unity.
long long component_group(const OrbitLabel& o, GroupForm form);

/// Dimension of the kernel of ad(e) computed over the full n^2-dimensional gl_n and
/// intersected with the Lie algebra (used for the type A and classical cross-check).
int centralizer_dimension_gl(const OrbitLabel& o);

}  // namespace orbitgr::oracle
