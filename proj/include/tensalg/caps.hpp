#pragma once

#include <cstddef>

namespace tensalg {

// Resource limits. `grade` bounds the words fed to exponential operations
// (a grade-n word has 2^n coproduct splits); `permutation` bounds the words
// fed to Symm/ASymm (n! permutations).
struct Caps {
  std::size_t grade = 8;
  std::size_t permutation = 7;
};

void check_grade_cap(std::size_t grade, const Caps& caps, const char* what);
void check_permutation_cap(std::size_t grade, const Caps& caps, const char* what);

}  // namespace tensalg
