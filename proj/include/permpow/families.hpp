#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "permpow/graph.hpp"
#include "permpow/permutation.hpp"

namespace permpow {

/// C_n with edges i ~ i+1 (mod n). Throws TooSmall for n < 3.
Graph cycle_graph(std::size_t n);

/// P_n with edges i ~ i+1. Throws TooSmall for n < 1.
Graph path_graph(std::size_t n);

/// K_{m,n}: vertices 0..m-1 form the first side, m..m+n-1 the second.
/// Throws TooSmall unless m, n >= 1.
Graph complete_bipartite(std::size_t m, std::size_t n);

/// K_n without loops. Throws TooSmall for n < 1.
Graph complete_graph(std::size_t n);

/// Antipodal index on C_n for 4 | n: i* = (i + n/2) mod n. Then
/// lambda^{i*} = -lambda^i for every primitive n-th root lambda.
/// Throws NotDivisibleBy4.
std::size_t star_involution(std::size_t i, std::size_t n);

/// Evaluates the combinatorial conditions obtained from the primitive-root
/// eigenvector: for i != j with i = j (mod 4)
///   (p(i), p(j)) = (p^-1(i), p^-1(j))  or  (p(i), p(j)) = (p^-1(j)*, p^-1(i)*),
/// and for i = j + 2 (mod 4)
///   (p(i), p(j)) = (p^-1(i), p^-1(j))  or  (p(i), p(j)) = (p^-1(j), p^-1(i))
///   or (p(i), p^-1(i)) = (p(j)*, p^-1(j)*).
/// Throws NotDivisibleBy4, or DimensionMismatch when p is not on n points.
bool cyclic_symmetry_conditions(const Permutation& p, std::size_t n);

/// The sigma/tau/gamma permutations of C_8, 0-based. gammas are generated
/// from the parametric form (0 a b c)(4 c* b* a*) with a, c odd, b in {2, 6}
/// and c not in {a, a*}, enumerated as: c = a + 2 before c = a - 2, then
/// b = 2 before b = 6, then a ascending.
struct C8Catalog {
  std::vector<Permutation> sigmas;
  std::vector<Permutation> taus;
  std::vector<Permutation> gammas;
};

C8Catalog c8_catalog();

/// {q sigma_i} + {s tau_j} + {sigma_i tau_j} + {gamma_k}, where q ranges over
/// permutations of order <= 2 fixing every even 0-based index (the odd
/// labels of the 1-based numbering) and s over those fixing every odd one.
/// Sorted and de-duplicated; 112 elements.
std::vector<Permutation> c8_all_valid_noninvolutions();

struct RootSumReport {
  bool holds = true;                 // no violation of the lemma's conclusion
  bool band_clear = true;            // no |sum| inside [1e-12, 1e-6]
  std::uint64_t quadruples = 0;
  std::uint64_t vanishing = 0;       // |sum| < 1e-9
  double min_nonvanishing = 0.0;     // smallest |sum| >= 1e-9
};

/// Exhaustive scan over all (i1, i2, i3, i4) in [n]^4 with zeta = exp(2 pi i/n):
/// whenever |z^i1 + z^i2 - z^i3 - z^i4| < 1e-9, requires
/// (i1 = i2* and i3 = i4*) or {i1, i2} = {i3, i4}.
/// Throws NotDivisibleBy4, or TooLarge for n > 24.
RootSumReport root_sum_scan(std::size_t n);

/// holds && band_clear of root_sum_scan(n).
bool verify_root_sum_lemma(std::size_t n);

}  // namespace permpow
