#ifndef TWOPOINT_GENERATOR_FILE_HPP
#define TWOPOINT_GENERATOR_FILE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "twopoint/permutation.hpp"

namespace twopoint
{

struct GeneratorList
{
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

// Format:
//   degree <n>
//   (0 1 2)(3 4)
//   ()
// One permutation per line in 0-based cycle notation; blank lines and text
// after '#' are ignored. Throws std::invalid_argument with the line number.
GeneratorList read_generators(std::istream &in);
GeneratorList read_generator_file(std::string const &path);

void write_generators(std::ostream &out, GeneratorList const &list);

} // namespace twopoint

#endif // TWOPOINT_GENERATOR_FILE_HPP
