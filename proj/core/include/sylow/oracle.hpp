#pragma once

#include <cstdint>
#include <vector>

// Brute-force group-theoretic oracles: explicit permutation enumeration,
// independent of the closed-form index/count formulas they validate.

namespace sylow::oracle {

using Perm = std::vector<std::uint8_t>;

/// Number of Sylow p-subgroups of Sym(n) by explicit enumeration: generate
/// the full group, grow one Sylow subgroup by p-element closure, count its
/// conjugates. Practical for n <= 8.
std::uint64_t sym_sylow_count(unsigned n, unsigned p);

/// Number of Sylow p-subgroups of PSL2(q) acting on the projective line,
/// q a prime power in [4, 16]. Returns the count by conjugate enumeration.
std::uint64_t psl2_sylow_count(unsigned q, unsigned p);

/// PSL2(q) as permutations of the q+1 projective points (q <= 16).
std::vector<Perm> psl2_elements(unsigned q);

/// Sylow p-count of an arbitrary permutation group given by its full
/// element list (identity included).
std::uint64_t sylow_count_of_group(const std::vector<Perm>& group,
                                   unsigned p);

}  // namespace sylow::oracle
