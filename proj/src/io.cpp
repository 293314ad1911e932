#include "wrzeta/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "wrzeta/builtins.hpp"

namespace wrzeta {

using nlohmann::json;

PermGroup parse_group_json(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw BadInput(std::string("bad group JSON: ") + e.what());
  }
  if (doc.contains("builtin"))
    return builtin_group(doc["builtin"].get<std::string>());
  if (!doc.contains("points") || !doc.contains("generators"))
    throw BadInput("group JSON needs either \"builtin\" or "
                   "\"points\" + \"generators\"");
  int n = doc["points"].get<int>();
  if (n < 1)
    throw BadInput("points must be >= 1");
  std::vector<Permutation> gens;
  for (const auto &arr : doc["generators"]) {
    std::vector<int> img = arr.get<std::vector<int>>();
    if (int(img.size()) != n)
      throw DegreeMismatch("generator image length differs from points");
    for (int &v : img) {
      if (v < 1 || v > n)
        throw BadInput("images must be 1-based points in range");
      --v;
    }
    gens.emplace_back(std::move(img));
  }
  return PermGroup::close_generators(std::move(gens), PermGroup::kDefaultBound,
                                     n);
}

PermGroup load_group_file(const std::string &path) {
  return parse_group_json(read_file(path));
}

std::string group_cache_key(const std::string &spec_text) {
  json doc = json::parse(spec_text, nullptr, false);
  if (!doc.is_discarded() && doc.contains("builtin"))
    return doc["builtin"].get<std::string>();
  // FNV-1a over the raw text
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : spec_text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "g" << std::hex << h;
  return os.str();
}

std::string poly_to_csv(const DirichletPoly &p) {
  std::string out;
  for (const auto &[n, r] : p.terms())
    out += u128_to_string(n) + "," + std::to_string(r) + "\n";
  return out;
}

DirichletPoly poly_from_csv(const std::string &text) {
  std::vector<DirichletPoly::Term> terms;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    auto comma = line.find(',');
    if (comma == std::string::npos)
      throw BadInput("CSV line without comma: " + line);
    u128 degree = parse_u128(line.substr(0, comma));
    std::int64_t mult = std::stoll(line.substr(comma + 1));
    terms.emplace_back(degree, mult);
  }
  return DirichletPoly::from_terms(std::move(terms));
}

std::string poly_to_json(const DirichletPoly &p) {
  json terms = json::array();
  for (const auto &[n, r] : p.terms()) {
    if (n <= u128(std::numeric_limits<std::int64_t>::max()))
      terms.push_back({std::int64_t(n), r});
    else
      terms.push_back({u128_to_string(n), r});
  }
  json doc{{"terms", terms}};
  if (p.truncation() && *p.truncation() != U128_MAX)
    doc["truncation"] = u128_to_string(*p.truncation());
  return doc.dump();
}

DirichletPoly poly_from_json(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw BadInput(std::string("bad series JSON: ") + e.what());
  }
  std::vector<DirichletPoly::Term> terms;
  for (const auto &t : doc["terms"]) {
    u128 degree = t[0].is_string() ? parse_u128(t[0].get<std::string>())
                                   : u128(t[0].get<std::int64_t>());
    terms.emplace_back(degree, t[1].get<std::int64_t>());
  }
  std::optional<u128> trunc;
  if (doc.contains("truncation"))
    trunc = doc["truncation"].is_string()
                ? parse_u128(doc["truncation"].get<std::string>())
                : u128(doc["truncation"].get<std::int64_t>());
  return DirichletPoly::from_terms(std::move(terms), trunc);
}

std::string partition_to_json(const OrbitPartition &p) {
  json blocks = json::array();
  for (const auto &b : p.blocks()) {
    json blk = json::array();
    for (int pt : b)
      blk.push_back(pt + 1);
    blocks.push_back(blk);
  }
  return blocks.dump();
}

std::string functional_equation_to_json(const FunctionalEquation &fe) {
  json monomials = json::array();
  for (const auto &[profile, coeff] : fe.monomials) {
    json triples = json::array();
    for (const auto &[f, q] : coeff.terms())
      triples.push_back({std::int64_t(f), q.num(), q.den()});
    monomials.push_back({{"blocks", profile}, {"coeff", triples}});
  }
  json doc{{"d", fe.d}, {"primes", fe.primes}, {"monomials", monomials}};
  return doc.dump();
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw BadInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw BadInput("cannot write " + path);
  out << content;
}

} // namespace wrzeta
