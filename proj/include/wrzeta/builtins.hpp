#ifndef WRZETA_BUILTINS_HPP
#define WRZETA_BUILTINS_HPP

#include <string>
#include <vector>

#include "wrzeta/permgroup.hpp"

namespace wrzeta {

PermGroup cyclic_group(int n);     // C_n on n points
PermGroup symmetric_group(int n);  // S_n on n points
PermGroup alternating_group(int n); // A_n on n points
PermGroup dihedral_group(int n);   // D_n of order 2n on n points

// A5 ~ PSL_2(F_5) acting on the projective line over F_5 (6 points).
PermGroup psl2_f5_on6();

// GL_3(F_2) acting on the projective plane over F_2 (7 points).
PermGroup pgl3_f2_on7();

// Lookup by catalog name: C2..C6, S3..S5, A4..A6, PSL2_F5_on6, PGL3_F2_on7.
PermGroup builtin_group(const std::string &name);
std::vector<std::string> builtin_names();

} // namespace wrzeta

#endif
