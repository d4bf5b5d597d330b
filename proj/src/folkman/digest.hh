#ifndef FOLKMAN_GUARD_DIGEST_HH
#define FOLKMAN_GUARD_DIGEST_HH 1

#include <filesystem>
#include <string>
#include <string_view>

namespace folkman
{
    /// Lower-case hex SHA-256.
    auto sha256_hex(std::string_view data) -> std::string;

    auto sha256_file(const std::filesystem::path & file) -> std::string;
}

#endif
