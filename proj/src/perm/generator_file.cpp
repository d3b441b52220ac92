#include "twopoint/generator_file.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twopoint
{

namespace
{

std::string strip(std::string const &line)
{
  std::string s = line.substr(0, line.find('#'));
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos)
    return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

} // namespace

GeneratorList read_generators(std::istream &in)
{
  GeneratorList result;
  bool have_degree = false;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::string s = strip(line);
    if (s.empty())
      continue;

    try {
      if (!have_degree) {
        std::istringstream ss(s);
        std::string keyword;
        long long n = 0;
        if (!(ss >> keyword >> n) || keyword != "degree" || n <= 0)
          throw std::invalid_argument("expected 'degree <n>' with n > 0");
        std::string rest;
        if (ss >> rest)
          throw std::invalid_argument("trailing text after degree");
        result.degree = static_cast<std::size_t>(n);
        have_degree = true;
        continue;
      }
      result.generators.push_back(Permutation::parse(s, result.degree));
    } catch (std::invalid_argument const &e) {
      throw std::invalid_argument("generator file line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
  }

  if (!have_degree)
    throw std::invalid_argument("generator file: missing 'degree' line");
  return result;
}

GeneratorList read_generator_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open generator file '" + path + "'");
  return read_generators(in);
}

void write_generators(std::ostream &out, GeneratorList const &list)
{
  out << "degree " << list.degree << '\n';
  for (auto const &g : list.generators)
    out << g.to_string() << '\n';
}

} // namespace twopoint
