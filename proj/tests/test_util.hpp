#ifndef DAGREL_TESTS_TEST_UTIL_HPP
#define DAGREL_TESTS_TEST_UTIL_HPP

#include <string>

#include "dagrel/core/report.hpp"

inline std::string first_witness(const dagrel::Report& rep) {
  return rep.witnesses().empty() ? std::string("(no witnesses)") : rep.witnesses().front();
}

#endif
