#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "betti/partition.hpp"

namespace betti {

using Count = std::uint64_t;
// Expansion of a (skew) product in irreducibles: partition -> multiplicity.
using Expansion = std::map<Partition, Count>;

// Littlewood-Richardson coefficient c^lambda_{mu nu}, by counting LR skew
// tableaux of shape lambda/mu and content nu.
Count lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// s_mu * s_nu. Memoized in the global coefficient cache.
std::shared_ptr<const Expansion> lr_product(const Partition& mu, const Partition& nu);

// s_{lambda/mu} = sum_nu c^lambda_{mu nu} s_nu.
Expansion lr_skew(const Partition& lambda, const Partition& mu);

// Stable symplectic tensor product multiplicity (Newell-Littlewood number)
//   N^lambda_{mu nu} = sum_{alpha,beta,gamma} c^mu_{alpha beta} c^nu_{alpha gamma} c^lambda_{beta gamma}.
Count nl_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// S<mu> (x) S<nu> in the stable range. Memoized in the global coefficient cache.
std::shared_ptr<const Expansion> nl_product(const Partition& mu, const Partition& nu);

// Closed rule for two columns:
//   S<1^i> (x) S<1^j> = sum_{a=0}^{min(i,j)} sum_{b=0}^{a} S<2^{a-b} 1^{i+j-2a}>,
// returned as a list with one entry per (a, b).
std::vector<Partition> sp_tensor_columns(int i, int j);

} // namespace betti
