#pragma once

#include <cstdint>
#include <vector>

#include "trigsum/hpreal.hpp"
#include "trigsum/ntheory.hpp"

namespace trigsum::quadfield {

// Data of Q(sqrt p) for a prime p = 1 (mod 4). class_number is the ideal
// class number, not a Dedekind-sum parameter.
struct QuadFieldData {
  std::int64_t p = 0;
  ntheory::PellUnit epsilon;
  std::int64_t class_number = 0;
};

// (x + y sqrt p)/2 as a real number.
HPReal unit_value(const ntheory::PellUnit& u, std::int64_t p, Precision prec);

// sum_{0<j<p} -(j/p) log sin(j pi/p) / (2 log eps), before rounding.
HPReal dirichlet_class_value(std::int64_t p, Precision prec);
// The rounded value; ConsistencyError if it is not within 1e-8 of an integer.
std::int64_t dirichlet_class_number(std::int64_t p, Precision prec);

// residues[r] is true iff r is a nonzero square mod p (squaring every class).
std::vector<bool> quadratic_residues(std::int64_t p);

// prod over non-residues n < p/2 of sin(n pi/p) divided by the same product
// over residues.
HPReal residue_sine_ratio(std::int64_t p, Precision prec);

QuadFieldData quadfield_data(std::int64_t p, Precision prec);

}  // namespace trigsum::quadfield
