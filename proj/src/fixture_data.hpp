#pragma once

// Implemented by the build-generated fixture_data.cpp.

#include <cstddef>

namespace syncword::detail {

struct EmbeddedFixture {
  const char* name;
  const char* text;
};

extern const EmbeddedFixture kFixtures[];
extern const std::size_t kFixtureCount;

}  // namespace syncword::detail
