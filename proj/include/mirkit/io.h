#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace mirkit {

// Whole-file read; throws IoError when the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

// Byte-exact write; throws IoError on failure.
void write_text_file(const std::filesystem::path& path,
                     std::string_view content);

}  // namespace mirkit
