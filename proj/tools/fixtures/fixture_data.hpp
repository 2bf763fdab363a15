#pragma once

#include <string_view>

namespace duval::fixtures {

/// tests/fixtures/derived_fixtures.json, embedded at build time.
std::string_view derived_json() noexcept;

}  // namespace duval::fixtures
