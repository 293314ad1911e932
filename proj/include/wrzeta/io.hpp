#ifndef WRZETA_IO_HPP
#define WRZETA_IO_HPP

#include <string>

#include "wrzeta/analysis.hpp"
#include "wrzeta/chardeg.hpp"
#include "wrzeta/partition.hpp"
#include "wrzeta/wreath.hpp"

namespace wrzeta {

// Group input: {"points": n, "generators": [[images...], ...]} with 1-based
// images, or {"builtin": "A5"}.
PermGroup parse_group_json(const std::string &text);
PermGroup load_group_file(const std::string &path);

// Stable identifier for cache keys: builtin name or a content hash.
std::string group_cache_key(const std::string &spec_text);

// CSV "degree,multiplicity" per line, ascending.
std::string poly_to_csv(const DirichletPoly &p);
DirichletPoly poly_from_csv(const std::string &text);

// {"terms": [[n, r], ...], "truncation": N}
std::string poly_to_json(const DirichletPoly &p);
DirichletPoly poly_from_json(const std::string &text);

// Canonical partition serialization: list of lists of 1-based points.
std::string partition_to_json(const OrbitPartition &p);

// {"d": ..., "primes": [...], "monomials": [{"blocks": [...],
//  "coeff": [[f, num, den], ...]}, ...]}
std::string functional_equation_to_json(const FunctionalEquation &fe);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

} // namespace wrzeta

#endif
