#pragma once

#include <stdexcept>

namespace bicpair {

/// File-system and data-ingestion failures; the CLI maps these to exit 4.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bicpair
