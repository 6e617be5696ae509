#ifndef NEGEVAL_TESTS_FIXTURES_HPP
#define NEGEVAL_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "negeval/sem_conll.hpp"

namespace negeval::support {

inline std::string data_path(const std::string& name) {
  return std::string(NEGEVAL_TEST_DATA) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Corpus load_conll(const std::string& name) { return read_sem_conll(data_path(name)); }

}  // namespace negeval::support

#endif  // NEGEVAL_TESTS_FIXTURES_HPP
