#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hydra {

using Shape = std::vector<int>;

// Error taxonomy. The CLI maps these onto exit codes (config=2, data=3,
// numeric=4); everything else is a plain failure.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : DataError {
    using DataError::DataError;
};
struct BadMagicError : IoError {
    using IoError::IoError;
};
struct TruncatedFileError : IoError {
    using IoError::IoError;
};
struct DimensionOverflowError : IoError {
    using IoError::IoError;
};

std::int64_t numel(const Shape& shape);
std::string shape_str(const Shape& shape);

// Worker-count cap shared by all OpenMP kernels. Results are identical for
// any thread count; this only bounds CPU usage (HYDRA_THREADS).
void set_max_threads(int n);
int max_threads();

// FNV-1a, used for manifest input hashes and freeze checks.
std::uint64_t fnv1a(const void* data, std::size_t len);
std::uint64_t fnv1a_file(const std::string& path);

}  // namespace hydra
