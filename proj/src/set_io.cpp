#include "sumfree/set_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace sumfree {

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& token, int line) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw SetParseError(line, "expected a decimal integer, got '" + token + "'");
  }
  return value;
}

}  // namespace

ResidueSet read_set(std::istream& in) {
  std::string line;
  int lineno = 0;

  // Header: p=<prime>
  if (!std::getline(in, line)) throw SetParseError(0, "empty input, expected 'p=<prime>'");
  ++lineno;
  std::string header = strip(line);
  if (header.rfind("p=", 0) != 0) {
    throw SetParseError(lineno, "expected header 'p=<prime>'");
  }
  const std::int64_t p_value = parse_int(header.substr(2), lineno);
  if (!Prime::is_prime(p_value) || p_value < 3) {
    throw SetParseError(lineno, "modulus " + std::to_string(p_value) + " is not an odd prime");
  }
  const Prime p(p_value);

  std::vector<bool> present(static_cast<std::size_t>(p_value), false);
  std::vector<std::int64_t> residues;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string token = strip(line);
    if (token.empty()) continue;
    const std::int64_t r = mod_reduce(parse_int(token, lineno), p);
    if (present[static_cast<std::size_t>(r)]) {
      throw SetParseError(lineno, "duplicate residue " + std::to_string(r));
    }
    present[static_cast<std::size_t>(r)] = true;
    residues.push_back(r);
  }
  return ResidueSet::from_residues(p, residues);
}

ResidueSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SetParseError(0, "cannot open '" + path + "'");
  return read_set(in);
}

void write_set(std::ostream& out, const ResidueSet& s) {
  out << "p=" << s.modulus_value() << '\n';
  for (std::int64_t r : s.residues()) out << r << '\n';
}

void write_set_file(const std::string& path, const ResidueSet& s) {
  std::ofstream out(path);
  if (!out) throw SetParseError(0, "cannot open '" + path + "' for writing");
  write_set(out, s);
}

}  // namespace sumfree
